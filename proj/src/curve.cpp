#include "bqec/curve.hpp"

#include "bqec/errors.hpp"

namespace bqec {

Curve::Curve(Integer a2, Integer b) : a2_(std::move(a2)), b_(std::move(b)) {
  if (discriminant_core() == 0)
    throw DomainError("singular curve " + to_string());
}

Rational Curve::rhs(const Rational& x) const {
  return ((x + Rational(a2_)) * x + Rational(b_)) * x;
}

std::string Curve::to_string() const {
  std::string s = "y^2 = x^3";
  if (a2_ != 0)
    s += (a2_ > 0 ? " + " : " - ") + Integer(abs(a2_)).get_str() + "*x^2";
  s += (b_ > 0 ? " + " : " - ") + Integer(abs(b_)).get_str() + "*x";
  return s;
}

Point Point::affine(const Curve& c, Rational x, Rational y) {
  x.canonicalize();
  y.canonicalize();
  Point p(c);
  p.xy_.emplace(std::move(x), std::move(y));
  return p;
}

std::string Point::to_string() const {
  if (is_identity())
    return "O";
  return "(" + x().get_str() + ", " + y().get_str() + ")";
}

std::string to_string(TorsionKind k) {
  switch (k) {
  case TorsionKind::Z4:
    return "Z4";
  case TorsionKind::Z2xZ2:
    return "Z2xZ2";
  case TorsionKind::Z2:
    return "Z2";
  }
  return "?";
}

bool on_curve(const Curve& c, const Point& p) {
  if (p.is_identity())
    return true;
  return p.y() * p.y() == c.rhs(p.x());
}

Point neg(const Point& p) {
  if (p.is_identity())
    return p;
  return Point::affine(p.curve(), p.x(), -p.y());
}

Point add(const Point& p, const Point& q) {
  if (p.curve() != q.curve())
    throw UsageError("cannot add points on different curves: " +
                     p.curve().to_string() + " and " + q.curve().to_string());
  if (p.is_identity())
    return q;
  if (q.is_identity())
    return p;
  const Curve& c = p.curve();
  const Rational a2(c.a2());
  Rational slope;
  if (p.x() == q.x()) {
    // Vertical chord, or tangent at a point of order 2.
    if (p.y() != q.y() || p.y() == 0)
      return Point::identity(c);
    slope = (3 * p.x() * p.x() + 2 * a2 * p.x() + Rational(c.b())) / (2 * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  Rational x3 = slope * slope - a2 - p.x() - q.x();
  Rational y3 = slope * (p.x() - x3) - p.y();
  return Point::affine(c, std::move(x3), std::move(y3));
}

Point sub(const Point& p, const Point& q) { return add(p, neg(q)); }

Point dbl(const Point& p) { return add(p, p); }

Point scalar_mul(const Integer& k, const Point& p) {
  if (k < 0)
    return neg(scalar_mul(Integer(-k), p));
  Point acc = Point::identity(p.curve());
  Point base = p;
  for (std::size_t bit = 0, n = mpz_sizeinbase(k.get_mpz_t(), 2); bit < n; ++bit) {
    if (mpz_tstbit(k.get_mpz_t(), bit) != 0)
      acc = add(acc, base);
    if (bit + 1 < n)
      base = dbl(base);
  }
  return acc;
}

TorsionKind torsion_kind(const Integer& b) {
  if (b == 0)
    throw DomainError("torsion_kind: b must be nonzero");
  if (is_perfect_square(Integer(-b)))
    return TorsionKind::Z2xZ2;
  if (b > 0 && mpz_divisible_ui_p(b.get_mpz_t(), 4) != 0) {
    Integer q = b / 4;
    if (mpz_root(Integer().get_mpz_t(), q.get_mpz_t(), 4) != 0)
      return TorsionKind::Z4;
  }
  return TorsionKind::Z2;
}

Curve associated_curve(const Curve& c) {
  return Curve(Integer(-2 * c.a2()), Integer(c.a2() * c.a2() - 4 * c.b()));
}

Point isogeny(const Point& p) {
  Curve target = associated_curve(p.curve());
  if (p.is_identity() || p.x() == 0)
    return Point::identity(target);
  const Rational& x = p.x();
  const Rational& y = p.y();
  Rational x2 = x * x;
  return Point::affine(target, y * y / x2, y * (x2 - Rational(p.curve().b())) / x2);
}

Point transfer_from_associated(const Point& q, const Curve& target) {
  if (q.curve() != associated_curve(target))
    throw UsageError("point on " + q.curve().to_string() +
                     " is not on the associated curve of " + target.to_string());
  if (q.is_identity() || q.x() == 0)
    return Point::identity(target);
  const Rational& X = q.x();
  const Rational& Y = q.y();
  Rational X2 = X * X;
  return Point::affine(target, Y * Y / (4 * X2),
                       Y * (X2 - Rational(q.curve().b())) / (8 * X2));
}

Point transfer_from_associated(const Point& q) {
  const Curve& src = q.curve();
  if (src.a2() != 0 || mpz_divisible_ui_p(src.b().get_mpz_t(), 4) == 0)
    throw UsageError("transfer_from_associated: expected y^2 = x^3 + B' x with 4 | B', got " +
                     src.to_string());
  return transfer_from_associated(q, Curve::short_form(Integer(-src.b() / 4)));
}

} // namespace bqec
