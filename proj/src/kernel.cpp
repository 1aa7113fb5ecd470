#include "linkstar/kernel.hpp"

#include <algorithm>

#include "linkstar/error.hpp"

namespace linkstar {

Rat cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

Rat dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

Point midpoint(const Point& p, const Point& q) {
  const Rat half(1, 2);
  return {(p.x + q.x) * half, (p.y + q.y) * half};
}

Point lerp(const Point& p, const Point& q, const Rat& t) { return p + (q - p) * t; }

Segment::Segment(Point a, Point b) {
  if (a == b) throw Error(ErrorCode::DegenerateSegment, "segment endpoints coincide at " + a.str());
  if (b < a) std::swap(a, b);
  p_ = std::move(a);
  q_ = std::move(b);
}

bool Segment::contains(const Point& r) const {
  if (orientation(p_, q_, r) != Orientation::Collinear) return false;
  // Collinear: inside iff between the endpoints in lexicographic order.
  return !(r < p_) && !(q_ < r);
}

Line::Line(Rat a, Rat b, Rat c) {
  if (a.is_zero() && b.is_zero()) {
    throw Error(ErrorCode::DegeneratePair, "line with zero normal vector");
  }
  // Clear denominators, then divide by the content.
  mpz_class l = 1;
  for (const Rat* r : {&a, &b, &c}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r->denominator().get_mpz_t());
  mpz_class ia = a.numerator() * (l / a.denominator());
  mpz_class ib = b.numerator() * (l / b.denominator());
  mpz_class ic = c.numerator() * (l / c.denominator());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ic.get_mpz_t());
  ia /= g;
  ib /= g;
  ic /= g;
  const int lead = sgn(ia) != 0 ? sgn(ia) : sgn(ib);
  if (lead < 0) {
    ia = -ia;
    ib = -ib;
    ic = -ic;
  }
  a_ = Rat(mpq_class(ia));
  b_ = Rat(mpq_class(ib));
  c_ = Rat(mpq_class(ic));
}

std::string Line::str() const { return a_.str() + "*x + " + b_.str() + "*y = " + c_.str(); }

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const int s = cross(q - p, r - p).sign();
  return s > 0 ? Orientation::CCW : (s < 0 ? Orientation::CW : Orientation::Collinear);
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw Error(ErrorCode::DegeneratePair, "line through coincident points " + p.str());
  // Normal (dy, -dx) of direction (dx, dy).
  const Rat a = q.y - p.y;
  const Rat b = p.x - q.x;
  return Line(a, b, a * p.x + b * p.y);
}

AxisCrossing x_axis_crossing(const Line& l) {
  if (l.a().is_zero()) {
    // Horizontal: either the axis itself (c = 0) or parallel to it.
    return AxisCrossing{std::nullopt, l.c().is_zero()};
  }
  return AxisCrossing{Point{l.c() / l.a(), Rat(0)}, false};
}

LinesIntersection lines_intersection(const Line& l1, const Line& l2) {
  const Rat det = l1.a() * l2.b() - l1.b() * l2.a();
  if (det.is_zero()) {
    if (l1 == l2) return SameLine{};
    return NoIntersection{};
  }
  const Rat x = (l1.c() * l2.b() - l1.b() * l2.c()) / det;
  const Rat y = (l1.a() * l2.c() - l1.c() * l2.a()) / det;
  return Point{x, y};
}

SegmentsIntersection segments_intersection(const Segment& s1, const Segment& s2) {
  const Point d1 = s1.q() - s1.p();
  const Point d2 = s2.q() - s2.p();
  const Rat denom = cross(d1, d2);
  if (!denom.is_zero()) {
    const Point w = s2.p() - s1.p();
    const Rat t = cross(w, d2) / denom;
    const Rat u = cross(w, d1) / denom;
    const Rat zero(0), one(1);
    if (t < zero || t > one || u < zero || u > one) return NoIntersection{};
    return s1.p() + d1 * t;
  }
  if (orientation(s1.p(), s1.q(), s2.p()) != Orientation::Collinear) return NoIntersection{};
  // Collinear: lexicographic order is monotone along the common line.
  const Point& lo = std::max(s1.p(), s2.p());
  const Point& hi = std::min(s1.q(), s2.q());
  if (hi < lo) return NoIntersection{};
  if (lo == hi) return lo;
  return Segment(lo, hi);
}

std::optional<Point> axis_crossing_between(const Point& u, const Point& v) {
  if (u.y.sign() * v.y.sign() >= 0) return std::nullopt;
  // u + t (v - u) with y = 0.
  const Rat t = u.y / (u.y - v.y);
  return Point{u.x + (v.x - u.x) * t, Rat(0)};
}

}  // namespace linkstar
