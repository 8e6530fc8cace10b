#pragma once

// The two curve families y^2 = x^3 - N x studied here, with their parametric
// points:
//   general:  N = m^4 + n^4, points P1(m,n), P2(m,n), associated point Q1(m,n);
//   Euler:    N(u) = A(u,1)^4 + B(u,1)^4 = C(u,1)^4 + D(u,1)^4 for Euler's
//             degree-7 quadruple, points P1..P4(u) and associated Q1, Q2(u).
// Everything is exact; identities are checked as polynomial identities.

#include "bqec/curve.hpp"
#include "bqec/poly.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace bqec {

enum class Family { General, Euler };

/// Which curve of the isogenous pair a parametric point lives on:
/// y^2 = x^3 - N x (Base) or y^2 = x^3 + 4N x (Associated).
enum class CurveSide { Base, Associated };

struct ParametricPoint {
  std::string name;
  Family family;
  CurveSide side;
  RatFunc x;
  RatFunc y;
};

struct EulerQuadruple {
  BivarPoly A, B, C, D;
};

/// A, B, C, D in (u, w), homogeneous of degree 7.
EulerQuadruple euler_quadruple();

/// The four factors of N(u) (w = 1), of degrees 4, 8, 8, 8.
std::array<BivarPoly, 4> euler_N_factors();

/// Product of the four factors, in u.
BivarPoly euler_N();

/// A^4 + B^4 in (u, w); N_hom(p, q) = q^28 N(p/q).
BivarPoly euler_N_homogeneous();

Integer euler_N(const Integer& u);
Rational euler_N(const Rational& u);

/// m^4 + n^4.
BivarPoly general_N();

struct GeneralPoints {
  ParametricPoint P1, P2, Q1;
};

/// P1 = (-n^2, m^2 n), P2 with x = (m^2+mn+n^2)^2/(m+n)^2, and Q1 on the
/// associated curve.
GeneralPoints general_family_points();

struct EulerPoints {
  ParametricPoint P1, P2, P3, P4, Q1, Q2;
};

/// P1, P2 as constructed from their homogeneous spaces; Q1, Q2 on the
/// associated curve; P3 = transfer(Q2), P4 = transfer(Q1).
EulerPoints euler_family_points();

/// The x-coordinates x3(u) and x4(u) in their closed forms.
RatFunc euler_x3();
RatFunc euler_x4();

/// y^2 == x^3 + a2 x^2 + b x as a rational-function identity.
bool verify_on_curve(const RatFunc& x, const RatFunc& y, const BivarPoly& a2, const BivarPoly& b);

/// y^2 == x^3 - N x (Base side) or y^2 == x^3 + 4N x (Associated side).
bool verify_parametric_point(const ParametricPoint& pt, const BivarPoly& N_expr);

/// (X, Y) -> (Y^2/(4X^2), Y (X^2 - 4N)/(8X^2)), applied symbolically.
ParametricPoint transfer_from_associated(const ParametricPoint& q, const BivarPoly& N_expr);

/// d U^4 + cofactor V^4 = H^2 with d * cofactor = B, all polynomial.
struct ParametricHomSpace {
  std::string name;
  BivarPoly B;
  BivarPoly d;
  BivarPoly cofactor;
  BivarPoly U, V, H;
};

/// Both d * cofactor == B and d U^4 + cofactor V^4 == H^2 hold identically.
bool verify_hom_space(const ParametricHomSpace& s);

/// The point (d U^2/V^2, d U H/V^3) on y^2 = x^3 + B x.
std::pair<RatFunc, RatFunc> lift_hom_space(const ParametricHomSpace& s);

/// General family: d = -1 on the base curve and d = 2 on the associated one.
std::vector<ParametricHomSpace> general_hom_spaces();

/// Euler family: the spaces lifting to P1, P2 (base) and Q1, Q2 (associated).
std::vector<ParametricHomSpace> euler_hom_spaces();

// Specialization ------------------------------------------------------------

/// y^2 = x^3 - (m^4 + n^4) x. Throws DegenerateError when N = 0.
Curve general_curve(const Integer& m, const Integer& n);

/// Substitutes (m, n). Throws DegenerateError when a denominator vanishes
/// (m + n = 0 for P2) or N = 0.
Point specialize_general(const ParametricPoint& pt, const Integer& m, const Integer& n);

/// Throws DegenerateError for u in {0, 1, -1} or whenever the two
/// representations {|A|, |B|} and {|C|, |D|} coincide.
void check_euler_parameter(const Rational& u);

/// Integral model coefficient for u = p/q: N_hom(p, q) = A(p,q)^4 + B(p,q)^4.
Integer euler_N_integral(const Rational& u);

/// The factorization of N_hom(p, q) assembled from its four factors.
Factorization euler_N_factorization(const Rational& u);

/// y^2 = x^3 - N_hom(p, q) x for u = p/q.
Curve euler_curve(const Rational& u);

/// Substitutes u = p/q and moves the point to the integral model via
/// (x, y) -> (q^14 x, q^21 y). Checks the parameter first.
Point specialize_euler(const ParametricPoint& pt, const Rational& u);

/// Exact substitution into a rational function; throws DegenerateError when
/// the denominator vanishes.
Rational specialize(const RatFunc& f, const Rational& a, const Rational& b = Rational(1));
Rational specialize(const BivarPoly& f, const Rational& a, const Rational& b = Rational(1));

// Identity suite -------------------------------------------------------------

struct IdentityResult {
  std::string name;
  std::string description;
  bool holds = false;
};

std::vector<std::string> identity_names();

/// Every symbolic identity behind both constructions. When `mutate` names an
/// identity, one coefficient of that identity's input is perturbed first
/// (a negative control). Throws UsageError for an unknown name.
std::vector<IdentityResult> run_identity_suite(std::string_view mutate = {});

/// Identity perturbed by a bare --mutate.
inline constexpr std::string_view kDefaultMutation = "euler.N=A4+B4";

} // namespace bqec
