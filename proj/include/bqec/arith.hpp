#pragma once

// Exact integer and rational foundations: factorization, primality,
// squares, and the square-class group Q*/(Q*)^2.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace bqec {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses a decimal integer ("-17") or rational ("49/9"); the result is
/// canonical. Throws ParseError on malformed text or a zero denominator.
Integer parse_integer(const std::string& text);
Rational parse_rational(const std::string& text);

/// Builds num/den in lowest terms with positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

bool is_perfect_square(const Integer& n);

/// Returns k >= 0 with k*k == n, or nothing.
std::optional<Integer> exact_sqrt(const Integer& n);

/// Returns the r-th root of n >= 0 rounded down.
Integer iroot(const Integer& n, unsigned long r);

/// Miller-Rabin: the fixed witness set {2..37} is deterministic below
/// 3.18e23, which covers every 64-bit input; larger inputs use 64 random
/// witnesses from a fixed-seed generator (error below 2^-128).
bool is_prime(const Integer& n);

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization sorted by prime. factorize(1) is empty.
using Factorization = std::vector<PrimePower>;

/// Trial division up to 10^6, then Pollard rho with Brent's cycle
/// detection on the cofactor. Throws DomainError for n < 1.
Factorization factorize(const Integer& n);

/// Merges two factorizations (the factorization of the product).
Factorization merge(const Factorization& a, const Factorization& b);

Integer recompose(const Factorization& f);

/// An element of Q*/(Q*)^2, stored as its unique squarefree integer
/// representative (sign included).
class SquareClass {
public:
  /// The trivial class 1.
  SquareClass() = default;

  /// `rep` must already be squarefree and nonzero; throws DomainError
  /// otherwise. Use `of` to reduce an arbitrary rational.
  explicit SquareClass(Integer rep);

  static SquareClass of(const Rational& q);

  const Integer& rep() const noexcept { return rep_; }
  bool is_trivial() const { return rep_ == 1; }
  std::string to_string() const { return rep_.get_str(); }

  friend SquareClass operator*(const SquareClass& a, const SquareClass& b);
  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.rep_ == b.rep_;
  }
  friend std::strong_ordering operator<=>(const SquareClass& a,
                                          const SquareClass& b) {
    int c = cmp(a.rep_, b.rep_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

private:
  friend SquareClass squarefree_kernel(int sign, const Factorization& magnitude);

  Integer rep_ = 1;
};

/// Squarefree kernel of a nonzero rational: the squarefree s with
/// q = s * (rational square). For q = a/b this is the kernel of a*b.
/// Throws DomainError on zero.
SquareClass squarefree_kernel(const Rational& q);

/// Same, reusing a known factorization of |q| (or of its numerator times
/// denominator) to avoid refactoring large values.
SquareClass squarefree_kernel(int sign, const Factorization& magnitude);

SquareClass square_class_mul(const SquareClass& a, const SquareClass& b);

/// Squarefree divisors of n != 0 with both signs, sorted by (|d|, d).
std::vector<Integer> squarefree_divisors(const Integer& n);
std::vector<Integer> squarefree_divisors(const Factorization& abs_n);

/// Largest k >= 1 with k^4 | n (n != 0).
Integer fourth_power_part(const Integer& n);

} // namespace bqec
