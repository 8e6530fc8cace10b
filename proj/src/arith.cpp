#include "bqec/arith.hpp"

#include "bqec/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

namespace bqec {

namespace {

bool is_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size())
    return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

constexpr unsigned long kTrialLimit = 1000000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialLimit; ++i) {
      if (composite[i])
        continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialLimit; j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_round(const Integer& n, const Integer& n_minus_1,
                        const Integer& d, unsigned long s, const Integer& a) {
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1)
    return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1)
      return true;
    if (x == 1)
      return false;
  }
  return false;
}

// One factor of composite n via Brent's variant of Pollard rho, or n itself
// when this (seed, c) pair fails.
Integer brent_rho(const Integer& n, const Integer& seed, const Integer& c) {
  auto f = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
  constexpr unsigned long batch = 128;
  Integer y = seed, x, ys, q = 1, g = 1;
  unsigned long r = 1;
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i)
      y = f(y);
    unsigned long k = 0;
    do {
      ys = y;
      unsigned long steps = std::min(batch, r - k);
      for (unsigned long i = 0; i < steps; ++i) {
        y = f(y);
        Integer diff = abs(x - y);
        q = (q * diff) % n;
      }
      g = gcd(q, n);
      k += batch;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g;
}

void split_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1)
    return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  // Rho struggles on exact powers; peel those first.
  if (mpz_perfect_power_p(n.get_mpz_t()) != 0) {
    for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
      Integer root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<Integer, unsigned> sub;
        split_into(root, sub);
        for (auto& [p, e] : sub)
          out[p] += e * static_cast<unsigned>(k);
        return;
      }
    }
  }
  Integer c = 1;
  for (;;) {
    Integer d = brent_rho(n, Integer(2), c);
    if (d != n && d != 1) {
      split_into(d, out);
      split_into(Integer(n / d), out);
      return;
    }
    ++c;
  }
}

} // namespace

Integer parse_integer(const std::string& text) {
  std::string t = trim(text);
  if (!is_decimal(t))
    throw ParseError("not an integer: '" + text + "'");
  if (t[0] == '+')
    t.erase(0, 1);
  return Integer(t, 10);
}

Rational parse_rational(const std::string& text) {
  std::string t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string::npos)
    return Rational(parse_integer(t));
  Integer num = parse_integer(t.substr(0, slash));
  Integer den = parse_integer(t.substr(slash + 1));
  if (den == 0)
    throw ParseError("zero denominator: '" + text + "'");
  return make_rational(num, den);
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0)
    throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (!is_perfect_square(n))
    return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer iroot(const Integer& n, unsigned long r) {
  if (n < 0)
    throw DomainError("iroot of a negative integer");
  Integer out;
  mpz_root(out.get_mpz_t(), n.get_mpz_t(), r);
  return out;
}

bool is_prime(const Integer& n) {
  if (n < 2)
    return false;
  static constexpr std::array<unsigned long, 12> witnesses{
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned long p : witnesses) {
    if (n == p)
      return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0)
      return false;
  }
  Integer n_minus_1 = n - 1;
  Integer d = n_minus_1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  static const Integer deterministic_bound("318665857834031151167461", 10);
  if (n < deterministic_bound) {
    for (unsigned long p : witnesses)
      if (!miller_rabin_round(n, n_minus_1, d, s, Integer(p)))
        return false;
    return true;
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x5eed);
  Integer span = n - 3;
  for (int i = 0; i < 64; ++i) {
    Integer a = rng.get_z_range(span) + 2;
    if (!miller_rabin_round(n, n_minus_1, d, s, a))
      return false;
  }
  return true;
}

Factorization factorize(const Integer& n) {
  if (n < 1)
    throw DomainError("factorize requires n >= 1, got " + n.get_str());
  std::map<Integer, unsigned> found;
  Integer rest = n;
  for (unsigned long p : small_primes()) {
    if (Integer(p) * p > rest)
      break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      rest /= p;
      ++found[Integer(p)];
    }
  }
  if (rest > 1) {
    if (rest <= Integer(kTrialLimit) * kTrialLimit)
      ++found[rest];
    else
      split_into(rest, found);
  }
  Factorization out;
  out.reserve(found.size());
  for (auto& [p, e] : found)
    out.push_back({p, e});
  return out;
}

Factorization merge(const Factorization& a, const Factorization& b) {
  std::map<Integer, unsigned> m;
  for (const auto& pp : a)
    m[pp.prime] += pp.exponent;
  for (const auto& pp : b)
    m[pp.prime] += pp.exponent;
  Factorization out;
  for (auto& [p, e] : m)
    out.push_back({p, e});
  return out;
}

Integer recompose(const Factorization& f) {
  Integer out = 1;
  for (const auto& pp : f) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    out *= pe;
  }
  return out;
}

SquareClass::SquareClass(Integer rep) : rep_(std::move(rep)) {
  if (rep_ == 0)
    throw DomainError("square class representative must be nonzero");
  for (const auto& pp : factorize(abs(rep_)))
    if (pp.exponent > 1)
      throw DomainError("square class representative " + rep_.get_str() +
                        " is not squarefree");
}

SquareClass SquareClass::of(const Rational& q) { return squarefree_kernel(q); }

SquareClass operator*(const SquareClass& a, const SquareClass& b) {
  // Both squarefree: a*b = g^2 * (a/g) * (b/g) with coprime squarefree
  // cofactors, so no factoring is needed.
  Integer g = gcd(a.rep_, b.rep_);
  SquareClass out;
  out.rep_ = (a.rep_ / g) * (b.rep_ / g);
  return out;
}

SquareClass squarefree_kernel(const Rational& q) {
  if (q == 0)
    throw DomainError("squarefree kernel of zero");
  int sign = sgn(q);
  Integer num = abs(q.get_num());
  const Integer& den = q.get_den();
  if (is_perfect_square(Integer(num * den)))
    return squarefree_kernel(sign, Factorization{});
  return squarefree_kernel(sign, merge(factorize(num), factorize(den)));
}

SquareClass squarefree_kernel(int sign, const Factorization& magnitude) {
  if (sign == 0)
    throw DomainError("squarefree kernel of zero");
  SquareClass out;
  out.rep_ = 1;
  for (const auto& pp : magnitude)
    if (pp.exponent % 2 == 1)
      out.rep_ *= pp.prime;
  if (sign < 0)
    out.rep_ = -out.rep_;
  return out;
}

SquareClass square_class_mul(const SquareClass& a, const SquareClass& b) {
  return a * b;
}

std::vector<Integer> squarefree_divisors(const Factorization& abs_n) {
  std::vector<Integer> positive{1};
  for (const auto& pp : abs_n) {
    std::size_t count = positive.size();
    for (std::size_t i = 0; i < count; ++i)
      positive.push_back(positive[i] * pp.prime);
  }
  std::vector<Integer> out;
  out.reserve(positive.size() * 2);
  for (const auto& d : positive) {
    out.push_back(-d);
    out.push_back(d);
  }
  std::sort(out.begin(), out.end(), [](const Integer& x, const Integer& y) {
    int c = mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t());
    return c != 0 ? c < 0 : x < y;
  });
  return out;
}

std::vector<Integer> squarefree_divisors(const Integer& n) {
  if (n == 0)
    throw DomainError("squarefree divisors of zero");
  return squarefree_divisors(factorize(abs(n)));
}

Integer fourth_power_part(const Integer& n) {
  if (n == 0)
    throw DomainError("fourth power part of zero");
  Integer out = 1;
  for (const auto& pp : factorize(abs(n)))
    for (unsigned i = 0; i < pp.exponent / 4; ++i)
      out *= pp.prime;
  return out;
}

} // namespace bqec
