#pragma once

// Reference implementations used only by tests. Each one is deliberately
// naive and shares no code path with the library routine it checks:
// plain trial division, the doubling limit on exact coordinates,
// brute-force homogeneous-space enumeration, and a double loop over pairs.

#include "bqec/arith.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using bqec::Integer;
using bqec::Rational;
using Real = boost::multiprecision::mpfr_float_50;

/// (prime, exponent) pairs by trial division over every d >= 2.
inline std::vector<std::pair<Integer, unsigned>> trial_factor(Integer n) {
  std::vector<std::pair<Integer, unsigned>> out;
  for (Integer d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0)
      out.emplace_back(d, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

/// Squarefree part of a nonzero rational via trial division of num and den.
inline Integer squarefree_part(const Rational& q) {
  Integer out = q < 0 ? -1 : 1;
  for (const Integer* part : {&q.get_num(), &q.get_den()})
    for (const auto& [p, e] : trial_factor(abs(*part)))
      if (e % 2 == 1)
        out *= p;
  // Primes shared by num and den cannot occur: q is in lowest terms.
  return out;
}

inline bool squarefree(const Integer& n) {
  for (const auto& [p, e] : trial_factor(abs(n)))
    if (e > 1)
      return false;
  return n != 0;
}

/// Affine point of y^2 = x^3 + a2 x^2 + b x, or nothing for the identity.
struct Pt {
  bool inf = false;
  Rational x, y;
};

/// Doubling by the tangent slope, written out independently.
inline Pt double_point(const Pt& p, const Integer& a2, const Integer& b) {
  if (p.inf || p.y == 0)
    return {true, 0, 0};
  Rational lambda = (3 * p.x * p.x + 2 * Rational(a2) * p.x + Rational(b)) / (2 * p.y);
  Rational x3 = lambda * lambda - Rational(a2) - 2 * p.x;
  Rational y3 = lambda * (p.x - x3) - p.y;
  x3.canonicalize();
  y3.canonicalize();
  return {false, x3, y3};
}

inline Real log_of(const Integer& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return log(r);
}

/// log max(|num x|, den x).
inline Real naive_height(const Pt& p) {
  if (p.inf)
    return 0;
  const Integer& n = p.x.get_num();
  const Integer& d = p.x.get_den();
  return log_of(abs(n) > d ? Integer(abs(n)) : d);
}

/// 4^-k h(2^k p) with exact coordinates.
inline Real doubling_limit(Pt p, const Integer& a2, const Integer& b, unsigned k) {
  for (unsigned i = 0; i < k; ++i)
    p = double_point(p, a2, b);
  Real scale = pow(Real(4), static_cast<int>(k));
  return naive_height(p) / scale;
}

struct HomSolution {
  Integer d, u, v, h;
};

/// Every (d, u, v, h) with d a squarefree divisor of B (any sign),
/// gcd(u, v) = 1, v > 0, |u|, v <= bound, h > 0 and
/// d u^4 + (B/d) v^4 = h^2. Divisors come from scanning 1..|B|.
inline std::vector<HomSolution> homspace_bruteforce(const Integer& B, long bound) {
  std::vector<HomSolution> out;
  Integer absb = abs(B);
  std::vector<Integer> divisors;
  for (Integer d = 1; d <= absb; ++d)
    if (absb % d == 0 && squarefree(d)) {
      divisors.push_back(d);
      divisors.push_back(-d);
    }
  for (const Integer& d : divisors)
    for (long u = -bound; u <= bound; ++u)
      for (long v = 1; v <= bound; ++v) {
        Integer g;
        mpz_gcd_ui(g.get_mpz_t(), Integer(u < 0 ? -u : u).get_mpz_t(), static_cast<unsigned long>(v));
        if (g != 1)
          continue;
        Integer uz(u), vz(v);
        Integer value = d * uz * uz * uz * uz + (B / d) * vz * vz * vz * vz;
        if (value <= 0)
          continue;
        Integer h = sqrt(value);
        if (h * h == value)
          out.push_back({d, uz, vz, h});
      }
  return out;
}

/// N -> list of (a, b), a <= b <= limit, for every N with two or more pairs.
inline std::map<unsigned __int128, std::vector<std::pair<unsigned, unsigned>>>
twins_double_loop(unsigned limit) {
  std::map<unsigned __int128, std::vector<std::pair<unsigned, unsigned>>> all;
  for (unsigned a = 1; a <= limit; ++a)
    for (unsigned b = a; b <= limit; ++b) {
      unsigned __int128 a2 = static_cast<unsigned __int128>(a) * a;
      unsigned __int128 b2 = static_cast<unsigned __int128>(b) * b;
      all[a2 * a2 + b2 * b2].emplace_back(a, b);
    }
  std::erase_if(all, [](const auto& kv) { return kv.second.size() < 2; });
  return all;
}

inline Integer from_u128(unsigned __int128 v) {
  Integer hi(static_cast<unsigned long>(v >> 64));
  Integer lo(static_cast<unsigned long>(v & ~std::uint64_t{0}));
  return (hi << 64) + lo;
}

} // namespace oracle
