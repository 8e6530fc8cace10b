#pragma once

// Naive and canonical heights, the height pairing, and regulators.
//
// Normalization: h(P) = log max(|num x|, |den x|) and
// canonical_height(P) = lim 4^-k h(2^k P).

#include "bqec/curve.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bqec {

/// 50 significant decimal digits.
using Real = boost::multiprecision::mpfr_float_50;

Real to_real(const Integer& z);
Real to_real(const Rational& q);
Real log_abs(const Integer& z);

/// Decimal rendering with `digits` significant digits.
std::string format_real(const Real& r, int digits = 30);

struct HeightValue {
  Real value;
  Real abs_error;
};

/// log max(|num x|, |den x|); zero for the identity.
Real naive_height(const Point& p);

struct HeightOptions {
  /// Terms of the doubling series. The truncation error is below
  /// sup|G| * 4^-terms / 3, negligible at the default.
  unsigned terms = 80;
};

/// Canonical height as the telescoped doubling limit
///   h(P) + sum_n 4^-(n+1) [ G(2^n P) - log e_n ]
/// where G is the archimedean growth of the doubling map on the
/// normalized real pair and e_n the gcd cancelled when doubling in lowest
/// terms. e_n divides the resultant 2^8 b^4 (a2^2-4b)^2, so it is tracked
/// p-adically at those primes only. Precondition: p lies on its curve.
HeightValue canonical_height(const Point& p, const HeightOptions& opts = {});

/// Same, with a precomputed factorization of |2 b (a2^2 - 4b)|.
HeightValue canonical_height(const Point& p, const Factorization& bad_primes,
                             const HeightOptions& opts = {});

/// Real contribution of the doubling series alone (no gcd corrections).
Real archimedean_part(const Point& p, unsigned terms);

/// Factorization of |2 b (a2^2 - 4b)|: the primes where doubling can cancel.
Factorization bad_primes(const Curve& c);

/// <P, Q> = (h^(P+Q) - h^(P) - h^(Q)) / 2, with its error bound.
HeightValue height_pairing(const Point& p, const Point& q);

struct GramMatrix {
  std::vector<Point> points;
  std::vector<std::vector<Real>> entries;
  /// Per-entry absolute error bound.
  Real entry_error;
};

GramMatrix gram_matrix(const std::vector<Point>& points);

/// A Gram determinant is deemed nonzero when it exceeds
/// max(kIndependenceFloor, accumulated error bound).
inline constexpr double kIndependenceFloor = 0.01;

struct RegulatorReport {
  GramMatrix gram;
  Real determinant;
  /// Bound on |computed det - true det| from the entry errors.
  Real error_bound;
  /// max(kIndependenceFloor, error_bound).
  Real tolerance;
  /// determinant > tolerance: the points are independent modulo torsion.
  bool independent = false;
};

/// Determinant of the height-pairing Gram matrix. Throws UsageError for an
/// empty list or points on different curves.
RegulatorReport regulator(const std::vector<Point>& points);

/// Determinant by Gaussian elimination with partial pivoting.
Real determinant(std::vector<std::vector<Real>> m);

} // namespace bqec
