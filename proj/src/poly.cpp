#include "bqec/poly.hpp"

#include "bqec/errors.hpp"

#include <algorithm>
#include <limits>

namespace bqec {

std::string variable_name(VarContext ctx, int index) {
  if (ctx == VarContext::MN)
    return index == 0 ? "m" : "n";
  return index == 0 ? "u" : "w";
}

BivarPoly BivarPoly::constant(VarContext ctx, const Integer& c) {
  return monomial(ctx, c, 0, 0);
}

BivarPoly BivarPoly::monomial(VarContext ctx, const Integer& c, unsigned i, unsigned j) {
  BivarPoly p(ctx);
  p.set_coefficient(i, j, c);
  return p;
}

BivarPoly BivarPoly::variable(VarContext ctx, int index) {
  return index == 0 ? monomial(ctx, Integer(1), 1, 0) : monomial(ctx, Integer(1), 0, 1);
}

BivarPoly BivarPoly::univariate(VarContext ctx, std::initializer_list<long> coeffs) {
  BivarPoly p(ctx);
  unsigned i = 0;
  for (long c : coeffs)
    p.set_coefficient(i++, 0, Integer(c));
  return p;
}

Integer BivarPoly::coefficient(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BivarPoly::set_coefficient(unsigned i, unsigned j, const Integer& c) {
  if (c == 0)
    terms_.erase({i, j});
  else
    terms_[{i, j}] = c;
}

long BivarPoly::total_degree() const {
  if (terms_.empty())
    return -1;
  const auto& e = terms_.rbegin()->first;
  return static_cast<long>(e.first + e.second);
}

long BivarPoly::degree_in(int index) const {
  long d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, static_cast<long>(index == 0 ? e.first : e.second));
  return d;
}

bool BivarPoly::is_homogeneous(unsigned degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.first + t.first.second == degree; });
}

Integer BivarPoly::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_)
    g = gcd(g, c);
  return g;
}

const Integer& BivarPoly::leading_coefficient() const {
  if (terms_.empty())
    throw UsageError("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

Rational BivarPoly::evaluate(const Rational& a, const Rational& b) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t(c);
    Rational pa, pb;
    mpz_pow_ui(pa.get_num_mpz_t(), a.get_num_mpz_t(), e.first);
    mpz_pow_ui(pa.get_den_mpz_t(), a.get_den_mpz_t(), e.first);
    mpz_pow_ui(pb.get_num_mpz_t(), b.get_num_mpz_t(), e.second);
    mpz_pow_ui(pb.get_den_mpz_t(), b.get_den_mpz_t(), e.second);
    acc += t * pa * pb;
  }
  return acc;
}

Integer BivarPoly::evaluate(const Integer& a, const Integer& b) const {
  Integer acc = 0;
  for (const auto& [e, c] : terms_) {
    Integer pa, pb;
    mpz_pow_ui(pa.get_mpz_t(), a.get_mpz_t(), e.first);
    mpz_pow_ui(pb.get_mpz_t(), b.get_mpz_t(), e.second);
    acc += c * pa * pb;
  }
  return acc;
}

BivarPoly BivarPoly::dehomogenize() const {
  BivarPoly out(ctx_);
  for (const auto& [e, c] : terms_)
    out.set_coefficient(e.first, 0, out.coefficient(e.first, 0) + c);
  return out;
}

BivarPoly BivarPoly::pow(unsigned e) const {
  BivarPoly result = constant(ctx_, Integer(1));
  BivarPoly base = *this;
  while (e > 0) {
    if (e & 1U)
      result *= base;
    e >>= 1U;
    if (e > 0)
      base *= base;
  }
  return result;
}

BivarPoly BivarPoly::divide_exact(const Integer& c) const {
  if (c == 0)
    throw UsageError("division of a polynomial by zero");
  BivarPoly out(ctx_);
  for (const auto& [e, v] : terms_) {
    if (mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t()) == 0)
      throw UsageError("inexact division of a polynomial by " + c.get_str());
    out.terms_[e] = v / c;
  }
  return out;
}

std::string BivarPoly::pretty() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    std::string mono;
    auto append = [&](int idx, unsigned k) {
      if (k == 0)
        return;
      if (!mono.empty())
        mono += "*";
      mono += variable_name(ctx_, idx);
      if (k > 1)
        mono += "^" + std::to_string(k);
    };
    append(0, e.first);
    append(1, e.second);
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

void BivarPoly::require_same_context(const BivarPoly& o) const {
  if (ctx_ != o.ctx_)
    throw UsageError("polynomials in different variables (" + variable_name(ctx_, 0) + "," +
                     variable_name(ctx_, 1) + ") and (" + variable_name(o.ctx_, 0) + "," +
                     variable_name(o.ctx_, 1) + ")");
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out = *this;
  for (auto& [e, c] : out.terms_)
    c = -c;
  return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  require_same_context(o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) { return *this += -o; }

BivarPoly& BivarPoly::operator*=(const BivarPoly& o) {
  *this = *this * o;
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_)
    v *= c;
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  a.require_same_context(b);
  BivarPoly out(a.ctx_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      BivarPoly::Exponent e{ea.first + eb.first, ea.second + eb.second};
      auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
      if (!inserted)
        it->second += ca * cb;
    }
  std::erase_if(out.terms_, [](const auto& t) { return t.second == 0; });
  return out;
}

bool operator==(const BivarPoly& a, const BivarPoly& b) {
  a.require_same_context(b);
  return a.terms_ == b.terms_;
}

RatFunc::RatFunc(BivarPoly num, BivarPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.context() != den_.context())
    throw UsageError("rational function with mixed variable contexts");
  if (den_.is_zero())
    throw UsageError("rational function with zero denominator polynomial");
  canonicalize();
}

RatFunc::RatFunc(BivarPoly num)
    : RatFunc(num, BivarPoly::constant(num.context(), Integer(1))) {}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = BivarPoly::constant(den_.context(), Integer(1));
    return;
  }
  unsigned min_i = std::numeric_limits<unsigned>::max();
  unsigned min_j = min_i;
  for (const auto* p : {&num_, &den_})
    for (const auto& [e, c] : p->terms()) {
      min_i = std::min(min_i, e.first);
      min_j = std::min(min_j, e.second);
    }
  Integer g = gcd(num_.content(), den_.content());
  if (den_.leading_coefficient() < 0)
    g = -g;
  if (min_i == 0 && min_j == 0 && g == 1)
    return;
  auto shift = [&](const BivarPoly& p) {
    BivarPoly out(p.context());
    for (const auto& [e, c] : p.terms())
      out.set_coefficient(e.first - min_i, e.second - min_j, c / g);
    return out;
  };
  num_ = shift(num_);
  den_ = shift(den_);
}

Rational RatFunc::evaluate(const Rational& a, const Rational& b) const {
  Rational d = den_.evaluate(a, b);
  if (d == 0)
    throw DegenerateError("denominator " + den_.pretty() + " vanishes at (" + a.get_str() +
                          ", " + b.get_str() + ")");
  return num_.evaluate(a, b) / d;
}

RatFunc RatFunc::pow(unsigned e) const { return RatFunc(num_.pow(e), den_.pow(e)); }

std::string RatFunc::pretty() const {
  if (den_ == BivarPoly::constant(den_.context(), Integer(1)))
    return num_.pretty();
  return "(" + num_.pretty() + ")/(" + den_.pretty() + ")";
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_)
    return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero())
    throw UsageError("division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

} // namespace bqec
