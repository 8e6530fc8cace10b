#include "bqec/errors.hpp"
#include "bqec/families.hpp"

#include <doctest.h>

#include <random>

using namespace bqec;

namespace {

const BivarPoly u = BivarPoly::variable(VarContext::UW, 0);

BivarPoly uni(std::initializer_list<long> c) { return BivarPoly::univariate(VarContext::UW, c); }

bool matches_up_to_sign(const Point& p, const char* x, const char* y) {
  return !p.is_identity() && p.x() == parse_rational(x) && abs(p.y()) == abs(parse_rational(y));
}

} // namespace

TEST_CASE("Euler quadruple evaluations") {
  auto q = euler_quadruple();
  Integer two(2), one(1);
  CHECK(q.A.evaluate(two, one) == 158);
  CHECK(q.B.evaluate(two, one) == -59);
  CHECK(q.C.evaluate(two, one) == 134);
  CHECK(q.D.evaluate(two, one) == 133);
  CHECK(q.A.evaluate(one, one) == 4);
  CHECK(q.B.evaluate(one, one) == -2);
  CHECK(q.C.evaluate(one, one) == -2);
  CHECK(q.D.evaluate(one, one) == 4);
  for (const auto* p : {&q.A, &q.B, &q.C, &q.D})
    CHECK(p->is_homogeneous(7));
}

TEST_CASE("N(u)") {
  CHECK(euler_N(Integer(2)) == 635318657);
  CHECK(euler_N(Integer(0)) == 1);
  CHECK(euler_N(Integer(1)) == 272);
  auto q = euler_quadruple();
  BivarPoly A = q.A.dehomogenize(), B = q.B.dehomogenize();
  CHECK((euler_N() - (A.pow(4) + B.pow(4))).is_zero());
  CHECK(euler_N().total_degree() == 28);
  CHECK(euler_N_homogeneous().is_homogeneous(28));
  // N_hom(p, q) = q^28 N(p/q).
  Rational r = make_rational(Integer(2), Integer(3));
  Rational q28(1);
  for (int i = 0; i < 28; ++i)
    q28 *= 3;
  CHECK(Rational(euler_N_integral(r)) == euler_N(r) * q28);
  CHECK(euler_N_homogeneous().evaluate(Integer(2), Integer(3)) == euler_N_integral(r));
  CHECK(recompose(euler_N_factorization(Rational(2))) == 635318657);
  CHECK(recompose(euler_N_factorization(r)) == euler_N_integral(r));
}

TEST_CASE("general family specializations") {
  auto g = general_family_points();
  Point p1 = specialize_general(g.P1, Integer(2), Integer(1));
  Point p2 = specialize_general(g.P2, Integer(2), Integer(1));
  CHECK(p1.curve().b() == -17);
  CHECK(matches_up_to_sign(p1, "-1", "4"));
  CHECK(matches_up_to_sign(p2, "49/9", "224/27"));
  CHECK(on_curve(p1));
  CHECK(on_curve(p2));
  Point q1 = specialize_general(g.Q1, Integer(2), Integer(1));
  CHECK(q1.curve().b() == 68);
  CHECK(matches_up_to_sign(q1, "18", "84"));
  Point p11 = specialize_general(g.P1, Integer(1), Integer(1));
  CHECK(p11.curve().b() == -2);
  CHECK(matches_up_to_sign(p11, "-1", "1"));
  CHECK_THROWS_AS(specialize_general(g.P2, Integer(1), Integer(-1)), DegenerateError);
  CHECK_THROWS_AS(general_curve(Integer(0), Integer(0)), DegenerateError);
  CHECK(general_curve(Integer(2), Integer(1)) == Curve::short_form(Integer(-17)));
  // x(P2) is a square, so its class is trivial wherever it is defined.
  for (long m = -4; m <= 4; ++m)
    for (long n = 1; n <= 4; ++n)
      if (m + n != 0 && m != 0)
        CHECK(squarefree_kernel(specialize_general(g.P2, Integer(m), Integer(n)).x()).is_trivial());
}

TEST_CASE("Euler points at u = 2") {
  auto e = euler_family_points();
  Rational two(2);
  Point p1 = specialize_euler(e.P1, two), p2 = specialize_euler(e.P2, two);
  Point p3 = specialize_euler(e.P3, two), p4 = specialize_euler(e.P4, two);
  CHECK(p1.curve().b() == -635318657);
  CHECK(matches_up_to_sign(p1, "137129", "49914956"));
  CHECK(matches_up_to_sign(p2, "-24964", "549998"));
  CHECK(matches_up_to_sign(p3, "1766241/16", "2285325807/64"));
  CHECK(matches_up_to_sign(p4, "365689129/9801", "5156125463944/970299"));
  CHECK(p1.x() == 241 * 569);
  CHECK(p3.x().get_den() == 16);
  CHECK(p4.x().get_den() == 99 * 99);
  for (const auto& p : {p1, p2, p3, p4})
    CHECK(on_curve(p));
  CHECK(specialize(euler_x3(), two) == p3.x());
  CHECK(specialize(euler_x4(), two) == p4.x());
  Point q1 = specialize_euler(e.Q1, two), q2 = specialize_euler(e.Q2, two);
  CHECK(q1.curve().b() == Integer("2541274628"));
  Point t1 = transfer_from_associated(q1), t2 = transfer_from_associated(q2);
  CHECK(t1.x() == p4.x());
  CHECK(abs(t1.y()) == abs(p4.y()));
  CHECK(t2.x() == p3.x());
  CHECK(abs(t2.y()) == abs(p3.y()));
}

TEST_CASE("degenerate Euler parameters") {
  CHECK_THROWS_AS(check_euler_parameter(Rational(0)), DegenerateError);
  CHECK_THROWS_AS(check_euler_parameter(Rational(1)), DegenerateError);
  CHECK_THROWS_AS(check_euler_parameter(Rational(-1)), DegenerateError);
  CHECK_NOTHROW(check_euler_parameter(Rational(2)));
  CHECK_NOTHROW(check_euler_parameter(Rational(2, 3)));
  CHECK_THROWS_AS(specialize_euler(euler_family_points().P1, Rational(1)), DegenerateError);
  CHECK_THROWS_AS(specialize_euler(general_family_points().P1, Rational(2)), UsageError);
}

TEST_CASE("symbolic identity suite") {
  auto results = run_identity_suite();
  CHECK(results.size() == identity_names().size());
  for (const auto& r : results) {
    INFO(r.name);
    CHECK(r.holds);
  }
  CHECK_THROWS_AS(run_identity_suite("no.such.identity"), UsageError);
}

TEST_CASE("each mutation breaks exactly its own identity") {
  for (const auto& name : identity_names()) {
    auto results = run_identity_suite(name);
    for (const auto& r : results) {
      INFO(name << " -> " << r.name);
      CHECK(r.holds == (r.name != name));
    }
  }
}

TEST_CASE("the complementary divisor for Q2 has no solution at (u, 1)") {
  // d = 4 (1 + 6u^2 + u^4)(1 + 2u^2 + 11u^4 + 2u^6 + u^8): d u^4 + (4N/d) is
  // not a square at u = 3, so no H exists there.
  BivarPoly c = uni({1, 0, 6, 0, 1}), b = uni({1, 0, 2, 0, 11, 0, 2, 0, 1});
  BivarPoly a = uni({1, 0, 0, 0, -1, 0, 0, 0, 1}), d = uni({1, 0, -4, 0, 8, 0, -4, 0, 1});
  BivarPoly complement = BivarPoly::constant(VarContext::UW, Integer(4)) * c * b;
  BivarPoly cofactor = a * d;
  CHECK(complement * cofactor == BivarPoly::constant(VarContext::UW, Integer(4)) * euler_N());
  Integer value = (complement * u.pow(4) + cofactor).evaluate(Integer(3), Integer(1));
  CHECK_FALSE(is_perfect_square(value));
  // The divisor actually used does have the solution.
  auto spaces = euler_hom_spaces();
  const auto& q2 = spaces.back();
  REQUIRE(q2.name == "Q2");
  CHECK(q2.d == BivarPoly::constant(VarContext::UW, Integer(4)) * a * d);
  CHECK(verify_hom_space(q2));
}

TEST_CASE("homogeneity of the general-family points") {
  // Substituting (l m, l n) scales x by l^2 and y by l^3 for the curve with
  // N scaled by l^4.
  auto g = general_family_points();
  for (long l : {2L, 3L, -5L})
    for (long m = 1; m <= 3; ++m)
      for (long n = 1; n <= 3; ++n) {
        for (const auto* pt : {&g.P1, &g.P2}) {
          Point base = specialize_general(*pt, Integer(m), Integer(n));
          Point scaled = specialize_general(*pt, Integer(l * m), Integer(l * n));
          CHECK(scaled.x() == base.x() * Rational(l * l));
          CHECK(scaled.y() == base.y() * Rational(l * l * l));
        }
      }
}

TEST_CASE("property: specializations land on their curves") {
  std::mt19937_64 rng(0xfa11);
  std::uniform_int_distribution<long> small(-30, 30);
  auto g = general_family_points();
  auto e = euler_family_points();
  int general_checked = 0, euler_checked = 0;
  while (general_checked < 50) {
    Integer m = small(rng), n = small(rng);
    if (m == 0 || n == 0 || m + n == 0)
      continue;
    for (const auto* pt : {&g.P1, &g.P2, &g.Q1})
      REQUIRE(on_curve(specialize_general(*pt, m, n)));
    ++general_checked;
  }
  while (euler_checked < 50) {
    long p = small(rng), q = small(rng);
    if (q <= 0)
      continue;
    Rational r = make_rational(Integer(p), Integer(q));
    try {
      check_euler_parameter(r);
    } catch (const DegenerateError&) {
      continue;
    }
    for (const auto* pt : {&e.P1, &e.P2, &e.P3, &e.P4, &e.Q1, &e.Q2})
      REQUIRE(on_curve(specialize_euler(*pt, r)));
    ++euler_checked;
  }
}
