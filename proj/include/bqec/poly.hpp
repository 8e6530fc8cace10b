#pragma once

// Exact polynomials in two variables over Z, and quotients of them.
// Rational-function equality is decided by cross-multiplication, so no
// multivariate gcd is ever needed.

#include "bqec/arith.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace bqec {

/// Which pair of variable names a polynomial is written in.
enum class VarContext { MN, UW };

std::string variable_name(VarContext ctx, int index);

/// Graded lexicographic order on exponent pairs: total degree first, then
/// the exponent of the first variable.
struct GradedOrder {
  bool operator()(const std::pair<unsigned, unsigned>& a,
                  const std::pair<unsigned, unsigned>& b) const {
    unsigned da = a.first + a.second, db = b.first + b.second;
    return da != db ? da < db : a.first < b.first;
  }
};

class BivarPoly {
public:
  using Exponent = std::pair<unsigned, unsigned>;
  using Terms = std::map<Exponent, Integer, GradedOrder>;

  explicit BivarPoly(VarContext ctx) : ctx_(ctx) {}

  static BivarPoly constant(VarContext ctx, const Integer& c);
  static BivarPoly monomial(VarContext ctx, const Integer& c, unsigned i, unsigned j);
  /// The variable with index 0 (m or u) or 1 (n or w).
  static BivarPoly variable(VarContext ctx, int index);
  /// c0 + c1 t + c2 t^2 + ... in the first variable.
  static BivarPoly univariate(VarContext ctx, std::initializer_list<long> coeffs);

  VarContext context() const noexcept { return ctx_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of first^i second^j (zero when absent).
  Integer coefficient(unsigned i, unsigned j) const;
  /// Sets a coefficient; setting zero removes the term.
  void set_coefficient(unsigned i, unsigned j, const Integer& c);

  /// Total degree; -1 for the zero polynomial.
  long total_degree() const;
  long degree_in(int index) const;
  bool is_homogeneous(unsigned degree) const;

  /// Gcd of all coefficients (0 for the zero polynomial).
  Integer content() const;
  /// Coefficient of the largest monomial in GradedOrder.
  const Integer& leading_coefficient() const;

  Rational evaluate(const Rational& a, const Rational& b) const;
  Integer evaluate(const Integer& a, const Integer& b) const;

  /// Substitutes the second variable := 1.
  BivarPoly dehomogenize() const;

  BivarPoly pow(unsigned e) const;

  /// Every coefficient divided by c; throws UsageError if inexact.
  BivarPoly divide_exact(const Integer& c) const;

  /// Ascending graded order, e.g. "1 + 6*u^2 + u^4".
  std::string pretty() const;

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const BivarPoly& o);
  BivarPoly& operator*=(const Integer& c);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(BivarPoly a, const Integer& c) { return a *= c; }
  friend BivarPoly operator*(const Integer& c, BivarPoly a) { return a *= c; }
  friend bool operator==(const BivarPoly& a, const BivarPoly& b);

private:
  void require_same_context(const BivarPoly& o) const;

  VarContext ctx_;
  Terms terms_;
};

/// numerator / denominator, canonical: joint integer content 1, common
/// monomial factors removed, positive leading denominator coefficient.
class RatFunc {
public:
  /// Throws UsageError for a zero denominator or mixed contexts.
  RatFunc(BivarPoly num, BivarPoly den);
  explicit RatFunc(BivarPoly num);

  VarContext context() const noexcept { return num_.context(); }
  const BivarPoly& numerator() const noexcept { return num_; }
  const BivarPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// Throws DegenerateError when the denominator vanishes at (a, b).
  Rational evaluate(const Rational& a, const Rational& b) const;

  RatFunc pow(unsigned e) const;
  std::string pretty() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws UsageError when b is zero.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  /// Cross-multiplication: a.num * b.den == b.num * a.den.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

private:
  void canonicalize();

  BivarPoly num_;
  BivarPoly den_;
};

} // namespace bqec
