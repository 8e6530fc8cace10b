#include "bqec/descent.hpp"

#include "bqec/errors.hpp"

#include <algorithm>
#include <numeric>

namespace bqec {

namespace {

Integer pow4(const Integer& z) {
  Integer sq = z * z;
  return sq * sq;
}

void require_divisor(const Integer& B, const Integer& d) {
  if (d == 0)
    throw UsageError("homogeneous space divisor must be nonzero");
  if (mpz_divisible_p(B.get_mpz_t(), d.get_mpz_t()) == 0)
    throw UsageError("divisor " + d.get_str() + " does not divide " + B.get_str());
}

} // namespace

bool verify_solution(const Integer& B, const HomSpaceSolution& s) {
  require_divisor(B, s.d);
  Integer cofactor = B / s.d;
  return s.d * pow4(s.u) + cofactor * pow4(s.v) == s.h * s.h;
}

LiftedPoint lift_to_point(const Integer& B, const HomSpaceSolution& s) {
  if (s.v == 0)
    throw UsageError("homogeneous space solution with v = 0");
  if (!verify_solution(B, s))
    throw UsageError("lift_to_point: (" + s.u.get_str() + ", " + s.v.get_str() + ", " +
                     s.h.get_str() + ") does not solve the space for d = " + s.d.get_str());
  Curve c = Curve::short_form(B);
  Integer v2 = s.v * s.v;
  Rational x = make_rational(Integer(s.d * s.u * s.u), v2);
  Rational y = make_rational(Integer(s.d * s.u * s.h), Integer(v2 * s.v));
  return {Point::affine(c, std::move(x), std::move(y)), s.h == 0};
}

std::vector<HomSpaceSolution> search_solutions(const Integer& B, unsigned long bound) {
  if (B == 0)
    throw DomainError("search_solutions: B must be nonzero");
  return search_solutions(B, factorize(abs(B)), bound);
}

std::vector<HomSpaceSolution> search_solutions(const Integer& B, const Factorization& abs_b,
                                               unsigned long bound) {
  if (B == 0)
    throw DomainError("search_solutions: B must be nonzero");
  const long lim = static_cast<long>(bound);
  std::vector<Integer> fourth(bound + 1);
  for (unsigned long i = 0; i <= bound; ++i)
    fourth[i] = pow4(Integer(i));

  std::vector<HomSpaceSolution> out;
  for (const Integer& d : squarefree_divisors(abs_b)) {
    Integer cofactor = B / d;
    for (long u = -lim; u <= lim; ++u) {
      const Integer& u4 = fourth[static_cast<unsigned long>(u < 0 ? -u : u)];
      for (long v = 1; v <= lim; ++v) {
        if (std::gcd(u, v) != 1)
          continue;
        Integer value = d * u4 + cofactor * fourth[static_cast<unsigned long>(v)];
        if (value <= 0)
          continue;
        if (auto h = exact_sqrt(value))
          out.push_back({d, Integer(u), Integer(v), *h});
      }
    }
  }
  return out;
}

bool SquareClassGroup::insert(const SquareClass& g) {
  if (elements_.contains(g))
    return false;
  std::vector<SquareClass> shifted;
  shifted.reserve(elements_.size());
  for (const auto& e : elements_)
    shifted.push_back(e * g);
  elements_.insert(shifted.begin(), shifted.end());
  generators_.push_back(g);
  return true;
}

bool SquareClassGroup::contains(const SquareClass& g) const { return elements_.contains(g); }

SquareClass descent_image(const Point& p) {
  if (p.is_identity())
    return SquareClass();
  if (p.x() == 0)
    return squarefree_kernel(Rational(p.curve().b()));
  return squarefree_kernel(p.x());
}

DescentReport rank_lower_bound(const Integer& N, unsigned long bound,
                               const std::vector<Point>& extra_points,
                               const std::optional<Factorization>& n_factorization) {
  if (N < 2)
    throw DomainError("rank_lower_bound requires N >= 2, got " + N.get_str());
  const Factorization fact_n = n_factorization ? *n_factorization : factorize(N);
  if (recompose(fact_n) != N)
    throw UsageError("supplied factorization does not recompose to N");
  const Factorization fact_4n = merge(fact_n, {{Integer(2), 2}});

  const Curve E = Curve::short_form(Integer(-N));
  const Curve E4 = Curve::short_form(Integer(4 * N));

  SquareClassGroup group_e, group_e4;
  // Images of the rational 2-torsion.
  group_e.insert(squarefree_kernel(-1, fact_n));
  group_e4.insert(squarefree_kernel(1, fact_4n));
  if (auto r = exact_sqrt(N)) {
    group_e.insert(squarefree_kernel(Rational(*r)));
    group_e.insert(squarefree_kernel(Rational(-*r)));
  }

  DescentReport rep;
  rep.N = N;
  rep.bound = bound;

  auto sols_e = search_solutions(E.b(), fact_n, bound);
  for (const auto& s : sols_e)
    group_e.insert(s.u == 0 ? squarefree_kernel(-1, fact_n) : SquareClass(s.d));
  auto sols_e4 = search_solutions(E4.b(), fact_4n, bound);
  for (const auto& s : sols_e4)
    group_e4.insert(s.u == 0 ? squarefree_kernel(1, fact_4n) : SquareClass(s.d));
  rep.solutions_E = sols_e.size();
  rep.solutions_E4 = sols_e4.size();

  for (const auto& p : extra_points) {
    if (!on_curve(p))
      throw UsageError("extra point " + p.to_string() + " is not on its curve");
    if (p.curve() == E)
      group_e.insert(descent_image(p));
    else if (p.curve() == E4)
      group_e4.insert(descent_image(p));
    else
      throw UsageError("extra point lies on " + p.curve().to_string() + ", expected " +
                       E.to_string() + " or " + E4.to_string());
  }

  auto by_abs = [](const SquareClass& a, const SquareClass& b) {
    int c = mpz_cmpabs(a.rep().get_mpz_t(), b.rep().get_mpz_t());
    return c != 0 ? c < 0 : a.rep() < b.rep();
  };
  rep.classes_E = group_e.generators();
  rep.classes_E4 = group_e4.generators();
  std::sort(rep.classes_E.begin(), rep.classes_E.end(), by_abs);
  std::sort(rep.classes_E4.begin(), rep.classes_E4.end(), by_abs);
  rep.s = group_e.order();
  rep.s_prime = group_e4.order();
  rep.rank_lower_bound =
      std::max(0L, static_cast<long>(group_e.rank() + group_e4.rank()) - 2);
  return rep;
}

} // namespace bqec
