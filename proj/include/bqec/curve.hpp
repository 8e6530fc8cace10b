#pragma once

// Curves y^2 = x^3 + a2 x^2 + b x over Q, their rational points, the group
// law, and the 2-isogeny to y^2 = x^3 - 2 a2 x^2 + (a2^2 - 4b) x.

#include "bqec/arith.hpp"

#include <optional>
#include <string>

namespace bqec {

class Curve {
public:
  /// Throws DomainError unless b^2 (a2^2 - 4b) != 0.
  Curve(Integer a2, Integer b);

  /// y^2 = x^3 + b x.
  static Curve short_form(Integer b) { return Curve(Integer(0), std::move(b)); }

  const Integer& a2() const noexcept { return a2_; }
  const Integer& b() const noexcept { return b_; }

  /// b^2 (a2^2 - 4b); equals the discriminant up to the factor 16.
  Integer discriminant_core() const { return b_ * b_ * (a2_ * a2_ - 4 * b_); }

  /// Evaluates x^3 + a2 x^2 + b x.
  Rational rhs(const Rational& x) const;

  std::string to_string() const;

  friend bool operator==(const Curve&, const Curve&) = default;

private:
  Integer a2_;
  Integer b_;
};

/// The identity, or an affine point. Affine coordinates are always stored
/// in lowest terms, so equality is structural. A point is not required to
/// lie on its curve; `on_curve` checks that.
class Point {
public:
  static Point identity(const Curve& c) { return Point(c); }
  static Point affine(const Curve& c, Rational x, Rational y);

  const Curve& curve() const noexcept { return curve_; }
  bool is_identity() const noexcept { return !xy_.has_value(); }

  /// Precondition: !is_identity().
  const Rational& x() const { return xy_->first; }
  const Rational& y() const { return xy_->second; }

  std::string to_string() const;

  friend bool operator==(const Point&, const Point&) = default;

private:
  explicit Point(const Curve& c) : curve_(c) {}

  Curve curve_;
  std::optional<std::pair<Rational, Rational>> xy_;
};

enum class TorsionKind { Z4, Z2xZ2, Z2 };

std::string to_string(TorsionKind k);

bool on_curve(const Curve& c, const Point& p);
inline bool on_curve(const Point& p) { return on_curve(p.curve(), p); }

Point neg(const Point& p);

/// Chord-and-tangent addition. Throws UsageError if the points live on
/// different curves.
Point add(const Point& p, const Point& q);
Point sub(const Point& p, const Point& q);
Point dbl(const Point& p);

Point scalar_mul(const Integer& k, const Point& p);
inline Point scalar_mul(long k, const Point& p) { return scalar_mul(Integer(k), p); }

/// Rational torsion of y^2 = x^3 + b x: Z/4 when b = 4 k^4, Z/2 x Z/2 when
/// -b is a square, Z/2 otherwise. Throws DomainError for b = 0.
TorsionKind torsion_kind(const Integer& b);

/// y^2 = x^3 - 2 a2 x^2 + (a2^2 - 4b) x; for a2 = 0 that is b -> -4b.
Curve associated_curve(const Curve& c);

/// The 2-isogeny E -> associated_curve(E):
/// (x, y) -> (y^2 / x^2, y (x^2 - b) / x^2); kernel {O, (0,0)}.
Point isogeny(const Point& p);

/// The dual isogeny associated_curve(E) -> E:
/// (X, Y) -> (Y^2 / (4 X^2), Y (X^2 - B') / (8 X^2)) with B' the x-coefficient
/// of the associated curve (B' = 4N when E is y^2 = x^3 - N x). The identity
/// and (0,0) map to the identity. Throws UsageError unless q lies on
/// associated_curve(target).
Point transfer_from_associated(const Point& q, const Curve& target);

/// Same, for q on y^2 = x^3 + B' x with 4 | B'; the target is y^2 = x^3 - (B'/4) x.
Point transfer_from_associated(const Point& q);

} // namespace bqec
