#pragma once

// Fixed-seed generators of family curves and points for property tests.

#include "bqec/curve.hpp"
#include "bqec/families.hpp"
#include "oracles/oracles.hpp"

#include <random>
#include <vector>

namespace test_support {

using namespace bqec;

struct FamilyCurve {
  Integer m, n;
  Curve curve;
  Point P1, P2;
};

/// y^2 = x^3 - (m^4 + n^4) x with 1 <= m, n <= 12, m != n, and its two
/// parametric points.
inline std::vector<FamilyCurve> random_family_curves(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 12);
  auto pts = general_family_points();
  std::vector<FamilyCurve> out;
  while (static_cast<int>(out.size()) < count) {
    Integer m = dist(rng), n = dist(rng);
    if (m == n)
      continue;
    out.push_back({m, n, general_curve(m, n), specialize_general(pts.P1, m, n),
                   specialize_general(pts.P2, m, n)});
  }
  return out;
}

/// a P1 + b P2 + e T for |a|, |b| <= k, (a, b) != (0, 0), e in {0, 1},
/// with T = (0, 0).
inline std::vector<Point> point_pool(const FamilyCurve& fc, long k, std::mt19937_64& rng) {
  std::vector<Point> out;
  Point t = Point::affine(fc.curve, Rational(0), Rational(0));
  for (long a = -k; a <= k; ++a)
    for (long b = -k; b <= k; ++b) {
      if (a == 0 && b == 0)
        continue;
      Point p = add(scalar_mul(a, fc.P1), scalar_mul(b, fc.P2));
      if (rng() % 2 == 1)
        p = add(p, t);
      out.push_back(p);
    }
  return out;
}

/// A random nontorsion point from the pool with coefficients bounded by k.
inline Point random_point(const FamilyCurve& fc, long k, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-k, k);
  for (;;) {
    long a = dist(rng), b = dist(rng);
    if (a == 0 && b == 0)
      continue;
    Point p = add(scalar_mul(a, fc.P1), scalar_mul(b, fc.P2));
    if (rng() % 2 == 1)
      p = add(p, Point::affine(fc.curve, Rational(0), Rational(0)));
    return p;
  }
}

} // namespace test_support
