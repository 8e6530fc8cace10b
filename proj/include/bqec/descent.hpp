#pragma once

// Descent via 2-isogeny for y^2 = x^3 + B x: quartic homogeneous spaces
// d U^4 + (B/d) V^4 = H^2, their points, and the rank lower bound
// rank >= log2(s s') - 2 from the square classes found on the curve (s) and
// on its associated curve (s').

#include "bqec/curve.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bqec {

struct HomSpaceSolution {
  Integer d;
  Integer u;
  Integer v;
  Integer h;

  friend bool operator==(const HomSpaceSolution&, const HomSpaceSolution&) = default;
};

/// True iff d u^4 + (B/d) v^4 == h^2. Throws UsageError if d == 0 or d does
/// not divide B.
bool verify_solution(const Integer& B, const HomSpaceSolution& s);

struct LiftedPoint {
  Point point;
  /// h == 0: the solution lifts to a point of order 2.
  bool two_torsion = false;
};

/// (d u^2 / v^2, d u h / v^3) on y^2 = x^3 + B x. Throws UsageError when the
/// solution does not verify or v == 0.
LiftedPoint lift_to_point(const Integer& B, const HomSpaceSolution& s);

/// All solutions with H > 0, gcd(u, v) = 1, v > 0 and |u|, v <= bound, over
/// every squarefree divisor d of B (both signs). Solutions with H = 0 lift to
/// 2-torsion and are covered by the torsion images instead. Sorted by
/// (|d|, d, u, v).
std::vector<HomSpaceSolution> search_solutions(const Integer& B, unsigned long bound);

/// Same, with a known factorization of |B|.
std::vector<HomSpaceSolution> search_solutions(const Integer& B, const Factorization& abs_b,
                                               unsigned long bound);

/// A finite subgroup of Q*/(Q*)^2, kept as its full element set (the
/// groups met here have at most a few thousand elements).
class SquareClassGroup {
public:
  /// Adds g; returns true if it enlarged the group.
  bool insert(const SquareClass& g);

  /// Generators in insertion order of the independent ones.
  const std::vector<SquareClass>& generators() const noexcept { return generators_; }

  /// log2 of the group order.
  std::size_t rank() const noexcept { return generators_.size(); }
  bool contains(const SquareClass& g) const;

  std::size_t order() const noexcept { return elements_.size(); }

private:
  std::set<SquareClass> elements_{SquareClass()};
  std::vector<SquareClass> generators_;
};

struct DescentReport {
  Integer N;
  unsigned long bound = 0;
  /// Generators of the found subgroup on y^2 = x^3 - N x, sorted by (|c|, c).
  std::vector<SquareClass> classes_E;
  /// Generators on y^2 = x^3 + 4N x.
  std::vector<SquareClass> classes_E4;
  unsigned long s = 1;
  unsigned long s_prime = 1;
  long rank_lower_bound = 0;
  std::size_t solutions_E = 0;
  std::size_t solutions_E4 = 0;
};

/// Square class of x(P) for the descent map: x for x != 0, B for (0,0),
/// 1 for the identity.
SquareClass descent_image(const Point& p);

/// Rank lower bound for y^2 = x^3 - N x from homogeneous-space search up to
/// `bound`, the rational 2-torsion, and `extra_points` (each on the curve or
/// on y^2 = x^3 + 4N x). Throws DomainError for N < 2 and UsageError for a
/// point on any other curve.
DescentReport rank_lower_bound(const Integer& N, unsigned long bound,
                               const std::vector<Point>& extra_points = {},
                               const std::optional<Factorization>& n_factorization = std::nullopt);

} // namespace bqec
