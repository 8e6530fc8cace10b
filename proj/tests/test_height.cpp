#include "bqec/errors.hpp"
#include "bqec/height.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace bqec;

namespace {

const Curve E17 = Curve::short_form(Integer(-17));

Point pt(const Curve& c, const char* x, const char* y) {
  return Point::affine(c, parse_rational(x), parse_rational(y));
}

double d(const Real& r) { return r.convert_to<double>(); }

} // namespace

TEST_CASE("naive height") {
  CHECK(d(naive_height(pt(E17, "49/9", "224/27"))) == doctest::Approx(std::log(49.0)));
  CHECK(naive_height(pt(E17, "-1", "4")) == 0);
  CHECK(naive_height(Point::identity(E17)) == 0);
  Curve e = Curve::short_form(Integer(-635318657));
  Point p4 = pt(e, "365689129/9801", "5156125463944/970299");
  REQUIRE(on_curve(p4));
  CHECK(abs(naive_height(p4) - log_abs(Integer(365689129))) < Real("1e-45"));
}

TEST_CASE("canonical height of (-1, 4) against the doubling-limit oracle") {
  Point p = pt(E17, "-1", "4");
  HeightValue h = canonical_height(p);
  CHECK(h.abs_error <= Real("1e-3"));
  // Fixture: 4^-k h(2^k P) at k = 5 and k = 10 from exact doubling.
  Real k5 = oracle::doubling_limit({false, p.x(), p.y()}, Integer(0), Integer(-17), 5);
  CHECK(abs(k5 - Real("1.17217648877317792743653797891")) < Real("1e-25"));
  CHECK(abs(h.value - k5) < Real("1e-4"));
  Real k10 = oracle::doubling_limit({false, p.x(), p.y()}, Integer(0), Integer(-17), 10);
  CHECK(abs(h.value - k10) < Real("1e-5"));
  CHECK(abs(h.value - Real("1.17218309870069701060164155667")) < Real("1e-28"));
  HeightValue h2 = canonical_height(dbl(p));
  CHECK(abs(h2.value - 4 * h.value) <= Real("2e-3"));
  CHECK(abs(h2.value - 4 * h.value) < Real("1e-30"));
}

TEST_CASE("torsion has height zero") {
  CHECK(canonical_height(Point::identity(E17)).value == 0);
  CHECK(abs(canonical_height(pt(E17, "0", "0")).value) < Real("1e-30"));
  Curve e9 = Curve::short_form(Integer(-9));
  CHECK(abs(canonical_height(pt(e9, "3", "0")).value) < Real("1e-30"));
  CHECK(abs(canonical_height(pt(e9, "-3", "0")).value) < Real("1e-30"));
  Curve c4 = Curve::short_form(Integer(4));
  CHECK(abs(canonical_height(pt(c4, "2", "4")).value) < Real("1e-30"));
}

TEST_CASE("heights at u = 2 agree with the doubling limit") {
  Curve e = Curve::short_form(Integer(-635318657));
  std::vector<Point> pts{pt(e, "137129", "49914956"), pt(e, "-24964", "549998"),
                         pt(e, "1766241/16", "2285325807/64"),
                         pt(e, "365689129/9801", "5156125463944/970299")};
  for (const auto& p : pts) {
    REQUIRE(on_curve(p));
    Real lim = oracle::doubling_limit({false, p.x(), p.y()}, e.a2(), e.b(), 6);
    CHECK(abs(canonical_height(p).value - lim) < Real("5e-4"));
  }
}

TEST_CASE("height on a curve with a2 != 0") {
  Curve c(Integer(3), Integer(-5));
  Point p = pt(c, "5/4", "5/8");
  Real lim = oracle::doubling_limit({false, p.x(), p.y()}, c.a2(), c.b(), 8);
  HeightValue h = canonical_height(p);
  CHECK(abs(h.value - lim) < Real("1e-3"));
  CHECK(abs(canonical_height(dbl(p)).value - 4 * h.value) < Real("1e-30"));
}

TEST_CASE("height pairing") {
  Point p = pt(E17, "-1", "4");
  Point q = pt(E17, "49/9", "224/27");
  Real hp = canonical_height(p).value;
  CHECK(abs(height_pairing(p, Point::identity(E17)).value) < Real("1e-30"));
  CHECK(abs(height_pairing(p, p).value - hp) < Real("1e-30"));
  CHECK(abs(height_pairing(p, neg(p)).value + hp) < Real("1e-30"));
  CHECK(abs(height_pairing(p, q).value - height_pairing(q, p).value) < Real("1e-30"));
}

TEST_CASE("regulators") {
  Point p = pt(E17, "-1", "4");
  Point q = pt(E17, "49/9", "224/27");
  RegulatorReport r = regulator({p, q});
  CHECK(r.independent);
  CHECK(r.determinant > 0.05);
  CHECK(r.error_bound < 0.01);
  CHECK(abs(r.determinant - Real("1.85677888241069065664")) < Real("1e-18"));
  RegulatorReport dep = regulator({p, dbl(p)});
  CHECK_FALSE(dep.independent);
  CHECK(abs(dep.determinant) <= dep.tolerance);
  RegulatorReport rep = regulator({p, q, p});
  CHECK_FALSE(rep.independent);
  CHECK_THROWS_AS(regulator({}), UsageError);
  CHECK_THROWS_AS(regulator({p, pt(Curve::short_form(Integer(-2)), "-1", "1")}), UsageError);
  CHECK(determinant({{Real(2), Real(1)}, {Real(1), Real(3)}}) == 5);
}

TEST_CASE("property: quadraticity for k in {2, 3}") {
  auto curves = test_support::random_family_curves(5, 0x9a9a);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const auto& fc = curves[static_cast<std::size_t>(i) % curves.size()];
    Point p = test_support::random_point(fc, 2, rng);
    Real h = canonical_height(p).value;
    for (long k : {2L, 3L}) {
      Real hk = canonical_height(scalar_mul(k, p)).value;
      REQUIRE(abs(hk - k * k * h) <= (k * k + 1) * Real("1e-3"));
    }
  }
}

TEST_CASE("property: parallelogram law") {
  auto curves = test_support::random_family_curves(5, 0x9a9b);
  std::mt19937_64 rng(22);
  for (int i = 0; i < 20; ++i) {
    const auto& fc = curves[static_cast<std::size_t>(i) % curves.size()];
    Point p = test_support::random_point(fc, 2, rng);
    Point q = test_support::random_point(fc, 2, rng);
    Real lhs = canonical_height(add(p, q)).value + canonical_height(sub(p, q)).value;
    Real rhs = 2 * canonical_height(p).value + 2 * canonical_height(q).value;
    REQUIRE(abs(lhs - rhs) <= Real("6e-3"));
  }
}

TEST_CASE("property: torsion vanishing on random family curves") {
  auto curves = test_support::random_family_curves(20, 0x7075);
  for (const auto& fc : curves) {
    Point t = Point::affine(fc.curve, Rational(0), Rational(0));
    REQUIRE(canonical_height(t).value <= Real("1e-3"));
  }
}

TEST_CASE("property: a repeated point makes the regulator vanish") {
  auto curves = test_support::random_family_curves(5, 0x4e9);
  std::mt19937_64 rng(23);
  for (const auto& fc : curves) {
    Point p = test_support::random_point(fc, 2, rng);
    RegulatorReport r = regulator({fc.P1, p, p});
    REQUIRE(abs(r.determinant) <= r.tolerance);
    REQUIRE_FALSE(r.independent);
  }
}
