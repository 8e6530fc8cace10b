#include "bqec/height.hpp"

#include "bqec/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace bqec {

namespace {

unsigned long valuation(const Integer& z, const Integer& p) {
  if (z == 0)
    return 0;
  return mpz_remove(Integer().get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
}

Integer pow_int(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Integer mod_pos(const Integer& z, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Valuation of a residue modulo p^k, capped at k (a zero residue carries no
// more information).
unsigned long residue_valuation(const Integer& r, const Integer& p, unsigned long k) {
  if (r == 0)
    return k;
  return std::min(k, valuation(r, p));
}

// Sum over n < terms of 4^-(n+1) v_p(e_n) log p, where e_n is the content
// removed when doubling 2^n P in lowest terms.
Real nonarchimedean_correction(const Curve& c, const Integer& x_num,
                               const Integer& x_den, const Integer& p,
                               unsigned long res_valuation, unsigned terms) {
  const Integer& a2 = c.a2();
  const Integer& b = c.b();
  unsigned long k = static_cast<unsigned long>(terms + 1) * res_valuation + 1;
  Integer modulus = pow_int(p, k);
  Integer A = mod_pos(x_num, modulus);
  Integer D = mod_pos(x_den, modulus);
  Real total = 0;
  Real weight = 1;
  for (unsigned n = 0; n < terms; ++n) {
    weight /= 4;
    Integer AA = A * A, DD = D * D;
    Integer phi = mod_pos(Integer(AA - b * DD), modulus);
    phi = mod_pos(Integer(phi * phi), modulus);
    Integer psi = mod_pos(Integer(4 * A * D * (AA + a2 * A * D + b * DD)), modulus);
    unsigned long v = std::min(residue_valuation(phi, p, k), residue_valuation(psi, p, k));
    if (v >= k || v > res_valuation)
      throw std::logic_error("p-adic precision exhausted in canonical_height");
    if (v > 0) {
      Integer pv = pow_int(p, v);
      phi /= pv;
      psi /= pv;
      k -= v;
      modulus = pow_int(p, k);
      total += weight * Real(v) * log(to_real(p));
    }
    A = mod_pos(phi, modulus);
    D = mod_pos(psi, modulus);
  }
  return total;
}

// Loose bound on |G - log e| over all points, used only for the series tail.
Real growth_bound(const Curve& c) {
  Real b = abs(to_real(c.b()));
  Real a2 = abs(to_real(c.a2()));
  Real phi_sum = (1 + b) * (1 + b);
  Real psi_sum = 4 * (1 + a2 + b);
  Real res = 256 * pow(b, 4) * pow(abs(to_real(Integer(c.a2() * c.a2() - 4 * c.b()))), 2);
  return log(std::max(phi_sum, psi_sum)) + 2 * log(res) + 8;
}

} // namespace

Real to_real(const Integer& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real log_abs(const Integer& z) {
  if (z == 0)
    throw DomainError("log of zero");
  return log(abs(to_real(z)));
}

std::string format_real(const Real& r, int digits) { return r.str(digits); }

Real naive_height(const Point& p) {
  if (p.is_identity())
    return Real(0);
  const Rational& x = p.x();
  Integer m = abs(x.get_num());
  if (x.get_den() > m)
    m = x.get_den();
  return log_abs(m);
}

Factorization bad_primes(const Curve& c) {
  Integer disc_part = abs(Integer(2 * c.b() * (c.a2() * c.a2() - 4 * c.b())));
  return factorize(disc_part);
}

Real archimedean_part(const Point& p, unsigned terms) {
  if (p.is_identity())
    return Real(0);
  const Curve& c = p.curve();
  Real b = to_real(c.b());
  Real a2 = to_real(c.a2());
  Real A = to_real(p.x().get_num());
  Real D = to_real(p.x().get_den());
  Real total = naive_height(p);
  Real weight = 1;
  for (unsigned n = 0; n < terms; ++n) {
    weight /= 4;
    Real scale = std::max(abs(A), abs(D));
    A /= scale;
    D /= scale;
    Real AA = A * A, DD = D * D;
    Real phi = AA - b * DD;
    phi *= phi;
    Real psi = 4 * A * D * (AA + a2 * A * D + b * DD);
    total += weight * log(std::max(abs(phi), abs(psi)));
    A = phi;
    D = psi;
  }
  return total;
}

HeightValue canonical_height(const Point& p, const HeightOptions& opts) {
  if (p.is_identity())
    return {Real(0), Real(0)};
  return canonical_height(p, bad_primes(p.curve()), opts);
}

HeightValue canonical_height(const Point& p, const Factorization& primes,
                             const HeightOptions& opts) {
  if (p.is_identity())
    return {Real(0), Real(0)};
  const Curve& c = p.curve();
  Real value = archimedean_part(p, opts.terms);
  Integer delta = c.a2() * c.a2() - 4 * c.b();
  for (const auto& pp : primes) {
    unsigned long res_val = 4 * valuation(c.b(), pp.prime) + 2 * valuation(delta, pp.prime) +
                            (pp.prime == 2 ? 8 : 0);
    if (res_val == 0)
      continue;
    value -= nonarchimedean_correction(c, p.x().get_num(), p.x().get_den(), pp.prime,
                                       res_val, opts.terms);
  }
  Real tail = growth_bound(c) * pow(Real(4), -static_cast<int>(opts.terms)) / 3;
  Real rounding = Real(opts.terms) * (growth_bound(c) + naive_height(p)) * Real("1e-45");
  if (value < 0 && value > -(tail + rounding))
    value = 0;
  return {value, tail + rounding};
}

HeightValue height_pairing(const Point& p, const Point& q) {
  if (p.curve() != q.curve())
    throw UsageError("height pairing of points on different curves");
  Factorization primes = bad_primes(p.curve());
  HeightValue hp = canonical_height(p, primes);
  HeightValue hq = canonical_height(q, primes);
  HeightValue hs = canonical_height(add(p, q), primes);
  return {(hs.value - hp.value - hq.value) / 2, (hs.abs_error + hp.abs_error + hq.abs_error) / 2};
}

GramMatrix gram_matrix(const std::vector<Point>& points) {
  if (points.empty())
    throw UsageError("gram_matrix of an empty point list");
  for (const auto& p : points)
    if (p.curve() != points.front().curve())
      throw UsageError("gram_matrix: points lie on different curves");
  Factorization primes = bad_primes(points.front().curve());
  const std::size_t n = points.size();
  std::vector<HeightValue> diag;
  diag.reserve(n);
  for (const auto& p : points)
    diag.push_back(canonical_height(p, primes));

  GramMatrix g{points, std::vector<std::vector<Real>>(n, std::vector<Real>(n)), Real(0)};
  for (std::size_t i = 0; i < n; ++i) {
    g.entries[i][i] = diag[i].value;
    g.entry_error = std::max(g.entry_error, diag[i].abs_error);
    for (std::size_t j = i + 1; j < n; ++j) {
      HeightValue sum = canonical_height(add(points[i], points[j]), primes);
      Real pairing = (sum.value - diag[i].value - diag[j].value) / 2;
      Real err = (sum.abs_error + diag[i].abs_error + diag[j].abs_error) / 2;
      g.entries[i][j] = pairing;
      g.entries[j][i] = pairing;
      g.entry_error = std::max(g.entry_error, err);
    }
  }
  return g;
}

Real determinant(std::vector<std::vector<Real>> m) {
  const std::size_t n = m.size();
  Real det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs(m[r][col]) > abs(m[pivot][col]))
        pivot = r;
    if (m[pivot][col] == 0)
      return Real(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Real f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k)
        m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

RegulatorReport regulator(const std::vector<Point>& points) {
  RegulatorReport rep;
  rep.gram = gram_matrix(points);
  rep.determinant = determinant(rep.gram.entries);

  // Multilinearity plus Hadamard: |det(G + E) - det G| is at most
  // prod(|row_i| + eps) - prod |row_i| with eps the row norm of E.
  const std::size_t n = points.size();
  Real eps = rep.gram.entry_error * sqrt(Real(n));
  Real with = 1, without = 1;
  for (const auto& row : rep.gram.entries) {
    Real norm2 = 0;
    for (const auto& v : row)
      norm2 += v * v;
    Real norm = sqrt(norm2);
    with *= norm + eps;
    without *= norm;
  }
  rep.error_bound = (with - without) + without * Real("1e-40");
  rep.tolerance = std::max(Real(kIndependenceFloor), rep.error_bound);
  rep.independent = rep.determinant > rep.tolerance;
  return rep;
}

} // namespace bqec
