#include "bqec/families.hpp"

#include "bqec/errors.hpp"

#include <algorithm>
#include <functional>

namespace bqec {

namespace {

constexpr VarContext MN = VarContext::MN;
constexpr VarContext UW = VarContext::UW;

BivarPoly uni(std::initializer_list<long> coeffs) { return BivarPoly::univariate(UW, coeffs); }
BivarPoly cst(VarContext ctx, long c) { return BivarPoly::constant(ctx, Integer(c)); }
BivarPoly u_var() { return BivarPoly::variable(UW, 0); }
BivarPoly m_var() { return BivarPoly::variable(MN, 0); }
BivarPoly n_var() { return BivarPoly::variable(MN, 1); }

// sum_k c_k u^{e_k} w^{deg - e_k}
BivarPoly homogeneous_uw(unsigned deg, std::initializer_list<std::pair<unsigned, long>> terms) {
  BivarPoly p(UW);
  for (auto [e, c] : terms)
    p.set_coefficient(e, deg - e, Integer(c));
  return p;
}

// Homogenizes a polynomial in u (w-free) to total degree `deg`.
BivarPoly homogenize(const BivarPoly& p, unsigned deg) {
  BivarPoly out(p.context());
  for (const auto& [e, c] : p.terms())
    out.set_coefficient(e.first, deg - e.first, c);
  return out;
}

// The recurring factors of the Euler family, in u.
BivarPoly f_a() { return uni({1, 0, 0, 0, -1, 0, 0, 0, 1}); }   // 1 - u^4 + u^8
BivarPoly f_b() { return uni({1, 0, 2, 0, 11, 0, 2, 0, 1}); }   // 1 + 2u^2 + 11u^4 + 2u^6 + u^8
BivarPoly f_c() { return uni({1, 0, 6, 0, 1}); }                // 1 + 6u^2 + u^4
BivarPoly f_d() { return uni({1, 0, -4, 0, 8, 0, -4, 0, 1}); }  // 1 - 4u^2 + 8u^4 - 4u^6 + u^8
// A(u,1) + B(u,1)
BivarPoly f_s() { return uni({1, 1, 4, -2, -2, -2, 1, 1}); }
BivarPoly f_t() {
  return uni({1, 1, 6, 5, 5, -21, -5, -2, 13, 15, -1, -7, 0, 1, 1});
}
// 1 + 4u^2 + 6u^4 + 3u^6 - 4u^8 + 2u^10
BivarPoly f_g() { return uni({1, 0, 4, 0, 6, 0, 3, 0, -4, 0, 2}); }

RatFunc rf(BivarPoly p) { return RatFunc(std::move(p)); }

Curve side_curve(CurveSide side, const Integer& N) {
  return Curve::short_form(side == CurveSide::Base ? Integer(-N) : Integer(4 * N));
}

Integer pow_int(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

BivarPoly perturbed(BivarPoly p, bool perturb) {
  if (perturb)
    p.set_coefficient(0, 0, p.coefficient(0, 0) + 1);
  return p;
}

} // namespace

EulerQuadruple euler_quadruple() {
  return {
      homogeneous_uw(7, {{7, 1}, {5, 1}, {3, -2}, {2, 3}, {1, 1}}),
      homogeneous_uw(7, {{6, 1}, {5, -3}, {4, -2}, {2, 1}, {0, 1}}),
      homogeneous_uw(7, {{7, 1}, {5, 1}, {3, -2}, {2, -3}, {1, 1}}),
      homogeneous_uw(7, {{6, 1}, {5, 3}, {4, -2}, {2, 1}, {0, 1}}),
  };
}

std::array<BivarPoly, 4> euler_N_factors() { return {f_c(), f_a(), f_d(), f_b()}; }

BivarPoly euler_N() {
  BivarPoly out = cst(UW, 1);
  for (const auto& f : euler_N_factors())
    out *= f;
  return out;
}

BivarPoly euler_N_homogeneous() {
  auto q = euler_quadruple();
  return q.A.pow(4) + q.B.pow(4);
}

Integer euler_N(const Integer& u) { return euler_N().evaluate(u, Integer(1)); }

Rational euler_N(const Rational& u) { return euler_N().evaluate(u, Rational(1)); }

BivarPoly general_N() { return m_var().pow(4) + n_var().pow(4); }

GeneralPoints general_family_points() {
  BivarPoly m = m_var(), n = n_var();
  BivarPoly q = m * m + m * n + n * n;
  BivarPoly s = m + n;
  ParametricPoint P1{"P1", Family::General, CurveSide::Base, rf(-(n * n)), rf(m * m * n)};
  ParametricPoint P2{"P2", Family::General, CurveSide::Base, RatFunc(q * q, s * s),
                     RatFunc(m * n * q * (cst(MN, 2) * m * m + cst(MN, 3) * m * n +
                                          cst(MN, 2) * n * n),
                             s.pow(3))};
  ParametricPoint Q1{"Q1", Family::General, CurveSide::Associated, rf(cst(MN, 2) * s * s),
                     rf(cst(MN, 4) * s * q)};
  return {P1, P2, Q1};
}

RatFunc euler_x3() {
  BivarPoly u = u_var();
  return RatFunc(f_g().pow(2), cst(UW, 4) * u * u);
}

RatFunc euler_x4() { return RatFunc(f_t().pow(2), f_s().pow(2)); }

EulerPoints euler_family_points() {
  BivarPoly u = u_var();
  BivarPoly ab = f_a() * f_b();
  // 1 + 3u - 2u^2 + u^4 + u^6, so that A(u,1) = u * c
  BivarPoly c = uni({1, 3, -2, 0, 1, 0, 1});
  BivarPoly e = uni({1, 0, 1, 0, -2, -3, 1});  // B(u,1)
  ParametricPoint P1{"P1", Family::Euler, CurveSide::Base, rf(ab),
                     rf(u * u * uni({-5, 0, 4, 0, 1, 0, 1}) * ab)};
  ParametricPoint P2{"P2", Family::Euler, CurveSide::Base, rf(-(u * u * c * c)),
                     rf(u * c * e * e)};
  ParametricPoint Q1{"Q1", Family::Euler, CurveSide::Associated, rf(cst(UW, 2) * f_s().pow(2)),
                     rf(cst(UW, 4) * f_s() * f_t())};
  BivarPoly ad = f_a() * f_d();
  ParametricPoint Q2{"Q2", Family::Euler, CurveSide::Associated, rf(cst(UW, 4) * u * u * ad),
                     rf(cst(UW, 4) * u * ad * f_g())};
  ParametricPoint P3 = transfer_from_associated(Q2, euler_N());
  P3.name = "P3";
  ParametricPoint P4 = transfer_from_associated(Q1, euler_N());
  P4.name = "P4";
  return {P1, P2, P3, P4, Q1, Q2};
}

bool verify_on_curve(const RatFunc& x, const RatFunc& y, const BivarPoly& a2, const BivarPoly& b) {
  RatFunc lhs = y * y;
  RatFunc rhs = x * x * x + rf(a2) * x * x + rf(b) * x;
  return lhs == rhs;
}

bool verify_parametric_point(const ParametricPoint& pt, const BivarPoly& N_expr) {
  if (pt.x.denominator().is_zero() || pt.y.denominator().is_zero())
    throw UsageError("parametric point with a zero denominator");
  BivarPoly zero(N_expr.context());
  BivarPoly b = pt.side == CurveSide::Base ? -N_expr : Integer(4) * N_expr;
  return verify_on_curve(pt.x, pt.y, zero, b);
}

ParametricPoint transfer_from_associated(const ParametricPoint& q, const BivarPoly& N_expr) {
  if (q.side != CurveSide::Associated)
    throw UsageError("transfer_from_associated: " + q.name + " is not on the associated curve");
  if (q.x.is_zero())
    throw UsageError("transfer_from_associated: X is identically zero");
  const VarContext ctx = N_expr.context();
  RatFunc X2 = q.x * q.x;
  RatFunc x = q.y * q.y / (rf(cst(ctx, 4)) * X2);
  RatFunc y = q.y * (X2 - rf(Integer(4) * N_expr)) / (rf(cst(ctx, 8)) * X2);
  return {q.name + "'", q.family, CurveSide::Base, std::move(x), std::move(y)};
}

bool verify_hom_space(const ParametricHomSpace& s) {
  if (!(s.d * s.cofactor == s.B))
    return false;
  return s.d * s.U.pow(4) + s.cofactor * s.V.pow(4) == s.H * s.H;
}

std::pair<RatFunc, RatFunc> lift_hom_space(const ParametricHomSpace& s) {
  RatFunc d = rf(s.d), U = rf(s.U), V = rf(s.V), H = rf(s.H);
  return {d * U * U / (V * V), d * U * H / (V * V * V)};
}

std::vector<ParametricHomSpace> general_hom_spaces() {
  BivarPoly m = m_var(), n = n_var(), N = general_N();
  BivarPoly one = cst(MN, 1);
  return {
      {"d=-1", -N, cst(MN, -1), N, n, one, m * m},
      {"d=2", Integer(4) * N, cst(MN, 2), Integer(2) * N, m + n, one,
       cst(MN, 2) * (m * m + n * n + m * n)},
  };
}

std::vector<ParametricHomSpace> euler_hom_spaces() {
  auto q = euler_quadruple();
  BivarPoly N = euler_N();
  BivarPoly one = cst(UW, 1);
  BivarPoly u = u_var();
  return {
      {"P1", -N, f_a() * f_b(), -(f_c() * f_d()), one, one, u * u * uni({-5, 0, 4, 0, 1, 0, 1})},
      {"P2", -N, cst(UW, -1), N, q.A.dehomogenize(), one, q.B.dehomogenize().pow(2)},
      {"Q1", Integer(4) * N, cst(UW, 2), Integer(2) * N, f_s(), one, cst(UW, 2) * f_t()},
      // Divisor 4(1-u^4+u^8)(1-4u^2+8u^4-4u^6+u^8); its complement
      // 4N/d = (1+6u^2+u^4)(1+2u^2+11u^4+2u^6+u^8) does not solve with (u, 1).
      {"Q2", Integer(4) * N, cst(UW, 4) * f_a() * f_d(), f_c() * f_b(), u, one, f_g()},
  };
}

Curve general_curve(const Integer& m, const Integer& n) {
  Integer N = general_N().evaluate(m, n);
  if (N <= 0)
    throw DegenerateError("m^4 + n^4 = 0 gives a singular curve");
  return Curve::short_form(Integer(-N));
}

Point specialize_general(const ParametricPoint& pt, const Integer& m, const Integer& n) {
  if (pt.family != Family::General)
    throw UsageError("specialize_general on a point of the Euler family");
  Integer N = general_N().evaluate(m, n);
  if (N <= 0)
    throw DegenerateError("m^4 + n^4 = 0 gives a singular curve");
  Rational x = pt.x.evaluate(Rational(m), Rational(n));
  Rational y = pt.y.evaluate(Rational(m), Rational(n));
  return Point::affine(side_curve(pt.side, N), std::move(x), std::move(y));
}

void check_euler_parameter(const Rational& u) {
  if (u == 0 || u == 1 || u == -1)
    throw DegenerateError("u = " + u.get_str() + " is a degenerate Euler parameter");
  auto q = euler_quadruple();
  const Integer& p = u.get_num();
  const Integer& r = u.get_den();
  std::array<Integer, 2> first{abs(q.A.evaluate(p, r)), abs(q.B.evaluate(p, r))};
  std::array<Integer, 2> second{abs(q.C.evaluate(p, r)), abs(q.D.evaluate(p, r))};
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  if (first == second)
    throw DegenerateError("u = " + u.get_str() + ": the two representations coincide");
  if (first[0] == 0 && first[1] == 0)
    throw DegenerateError("u = " + u.get_str() + " gives N = 0");
}

Integer euler_N_integral(const Rational& u) {
  return euler_N_homogeneous().evaluate(u.get_num(), u.get_den());
}

Factorization euler_N_factorization(const Rational& u) {
  Factorization out;
  for (const auto& f : euler_N_factors()) {
    Integer v = homogenize(f, static_cast<unsigned>(f.total_degree()))
                    .evaluate(u.get_num(), u.get_den());
    if (v <= 0)
      throw DegenerateError("factor " + f.pretty() + " is not positive at u = " + u.get_str());
    out = merge(out, factorize(v));
  }
  return out;
}

Curve euler_curve(const Rational& u) { return Curve::short_form(Integer(-euler_N_integral(u))); }

Point specialize_euler(const ParametricPoint& pt, const Rational& u) {
  if (pt.family != Family::Euler)
    throw UsageError("specialize_euler on a point of the general family");
  check_euler_parameter(u);
  Integer N = euler_N_integral(u);
  const Integer& den = u.get_den();
  Rational x = pt.x.evaluate(u, Rational(1)) * Rational(pow_int(den, 14));
  Rational y = pt.y.evaluate(u, Rational(1)) * Rational(pow_int(den, 21));
  return Point::affine(side_curve(pt.side, N), std::move(x), std::move(y));
}

Rational specialize(const RatFunc& f, const Rational& a, const Rational& b) {
  return f.evaluate(a, b);
}

Rational specialize(const BivarPoly& f, const Rational& a, const Rational& b) {
  return f.evaluate(a, b);
}

namespace {

struct IdentitySpec {
  std::string name;
  std::string description;
  std::function<bool(bool perturb)> check;
};

bool same_up_to_sign(const RatFunc& a, const RatFunc& b) { return a == b || a == -b; }

std::vector<IdentitySpec> identity_specs() {
  std::vector<IdentitySpec> specs;
  auto point_check = [](ParametricPoint pt, BivarPoly N) {
    return [pt, N](bool perturb) {
      ParametricPoint p = pt;
      p.x = RatFunc(perturbed(p.x.numerator(), perturb), p.x.denominator());
      return verify_parametric_point(p, N);
    };
  };
  auto hom_check = [](ParametricHomSpace s) {
    return [s](bool perturb) {
      ParametricHomSpace t = s;
      t.H = perturbed(t.H, perturb);
      return verify_hom_space(t);
    };
  };
  auto lift_check = [](ParametricHomSpace s, ParametricPoint pt) {
    return [s, pt](bool perturb) {
      ParametricHomSpace t = s;
      t.U = perturbed(t.U, perturb);
      auto [x, y] = lift_hom_space(t);
      return x == pt.x && same_up_to_sign(y, pt.y);
    };
  };

  // General family.
  auto g = general_family_points();
  BivarPoly Ng = general_N();
  auto ghs = general_hom_spaces();
  specs.push_back({"general.P1_on_curve", "P1(m,n) = (-n^2, m^2 n) on y^2 = x^3 - (m^4+n^4)x",
                   point_check(g.P1, Ng)});
  specs.push_back({"general.P2_on_curve", "P2(m,n) on y^2 = x^3 - (m^4+n^4)x",
                   point_check(g.P2, Ng)});
  specs.push_back({"general.Q1_on_associated", "Q1(m,n) on y^2 = x^3 + 4(m^4+n^4)x",
                   point_check(g.Q1, Ng)});
  specs.push_back({"general.transfer_Q1_is_P2", "transfer of Q1(m,n) equals P2(m,n) up to y-sign",
                   [g, Ng](bool perturb) {
                     ParametricPoint q = g.Q1;
                     q.x = RatFunc(perturbed(q.x.numerator(), perturb), q.x.denominator());
                     auto t = transfer_from_associated(q, Ng);
                     return t.x == g.P2.x && same_up_to_sign(t.y, g.P2.y);
                   }});
  specs.push_back({"general.homspace_d=-1", "(-1) n^4 + (m^4+n^4) 1^4 = (m^2)^2",
                   hom_check(ghs[0])});
  specs.push_back({"general.lift_d=-1", "d=-1 solution lifts to P1(m,n) up to y-sign",
                   lift_check(ghs[0], g.P1)});
  specs.push_back({"general.homspace_d=2", "2 (m+n)^4 + 2(m^4+n^4) = (2(m^2+mn+n^2))^2",
                   hom_check(ghs[1])});
  specs.push_back({"general.lift_d=2", "d=2 solution lifts to Q1(m,n) up to y-sign",
                   lift_check(ghs[1], g.Q1)});

  // Euler family.
  auto quad = euler_quadruple();
  specs.push_back({"euler.A4+B4=C4+D4", "A^4 + B^4 = C^4 + D^4 in (u,w)", [quad](bool perturb) {
                     BivarPoly A = quad.A;
                     if (perturb)
                       A.set_coefficient(7, 0, A.coefficient(7, 0) + 1);
                     return A.pow(4) + quad.B.pow(4) == quad.C.pow(4) + quad.D.pow(4);
                   }});
  specs.push_back({"euler.homogeneous_degree_7", "A, B, C, D homogeneous of degree 7",
                   [quad](bool perturb) {
                     BivarPoly A = perturbed(quad.A, perturb);
                     return A.is_homogeneous(7) && quad.B.is_homogeneous(7) &&
                            quad.C.is_homogeneous(7) && quad.D.is_homogeneous(7);
                   }});
  specs.push_back({"euler.N=A4+B4", "N(u) (four-factor product) = A(u,1)^4 + B(u,1)^4",
                   [quad](bool perturb) {
                     BivarPoly N = perturbed(euler_N(), perturb);
                     return N == quad.A.dehomogenize().pow(4) + quad.B.dehomogenize().pow(4);
                   }});
  specs.push_back({"euler.N=C4+D4", "N(u) (four-factor product) = C(u,1)^4 + D(u,1)^4",
                   [quad](bool perturb) {
                     BivarPoly N = perturbed(euler_N(), perturb);
                     return N == quad.C.dehomogenize().pow(4) + quad.D.dehomogenize().pow(4);
                   }});

  auto e = euler_family_points();
  BivarPoly N = euler_N();
  auto ehs = euler_hom_spaces();
  const std::array<const ParametricPoint*, 4> lifted{&e.P1, &e.P2, &e.Q1, &e.Q2};
  for (std::size_t i = 0; i < ehs.size(); ++i) {
    specs.push_back({"euler.homspace_" + ehs[i].name,
                     "homogeneous space for " + ehs[i].name + " holds, d = " + ehs[i].d.pretty(),
                     hom_check(ehs[i])});
    specs.push_back({"euler.lift_" + ehs[i].name,
                     "its solution lifts to " + ehs[i].name + "(u) up to y-sign",
                     lift_check(ehs[i], *lifted[i])});
  }
  specs.push_back({"euler.P1_on_curve", "P1(u) on y^2 = x^3 - N(u)x", point_check(e.P1, N)});
  specs.push_back({"euler.P2_on_curve", "P2(u) on y^2 = x^3 - N(u)x", point_check(e.P2, N)});
  specs.push_back({"euler.Q1_on_associated", "Q1(u) on y^2 = x^3 + 4N(u)x", point_check(e.Q1, N)});
  specs.push_back({"euler.Q2_on_associated", "Q2(u) on y^2 = x^3 + 4N(u)x", point_check(e.Q2, N)});
  specs.push_back({"euler.transfer_Q2_x=x3", "x(transfer Q2) = (1+4u^2+...+2u^10)^2/(4u^2)",
                   [e, N](bool perturb) {
                     ParametricPoint q = e.Q2;
                     q.y = RatFunc(perturbed(q.y.numerator(), perturb), q.y.denominator());
                     return transfer_from_associated(q, N).x == euler_x3();
                   }});
  specs.push_back({"euler.transfer_Q1_x=x4", "x(transfer Q1) = (1+u+...+u^14)^2/(1+u+...+u^7)^2",
                   [e, N](bool perturb) {
                     ParametricPoint q = e.Q1;
                     q.y = RatFunc(perturbed(q.y.numerator(), perturb), q.y.denominator());
                     return transfer_from_associated(q, N).x == euler_x4();
                   }});
  specs.push_back({"euler.P3_on_curve", "P3(u) = transfer(Q2) on y^2 = x^3 - N(u)x",
                   point_check(e.P3, N)});
  specs.push_back({"euler.P4_on_curve", "P4(u) = transfer(Q1) on y^2 = x^3 - N(u)x",
                   point_check(e.P4, N)});
  return specs;
}

} // namespace

std::vector<std::string> identity_names() {
  std::vector<std::string> names;
  for (const auto& s : identity_specs())
    names.push_back(s.name);
  return names;
}

std::vector<IdentityResult> run_identity_suite(std::string_view mutate) {
  auto specs = identity_specs();
  if (!mutate.empty() &&
      std::none_of(specs.begin(), specs.end(), [&](const auto& s) { return s.name == mutate; }))
    throw UsageError("unknown identity '" + std::string(mutate) + "'");
  std::vector<IdentityResult> out;
  out.reserve(specs.size());
  for (const auto& s : specs)
    out.push_back({s.name, s.description, s.check(s.name == mutate)});
  return out;
}

} // namespace bqec
