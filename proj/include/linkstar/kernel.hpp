#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "linkstar/rat.hpp"

namespace linkstar {

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }

  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator*(const Rat& s) const { return {x * s, y * s}; }

  std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

Rat cross(const Point& u, const Point& v);
Rat dot(const Point& u, const Point& v);
Point midpoint(const Point& p, const Point& q);
// p + t (q - p)
Point lerp(const Point& p, const Point& q, const Rat& t);

// A closed, non-degenerate segment stored with its lexicographically smaller
// endpoint first.
class Segment {
 public:
  Segment(Point a, Point b);

  const Point& p() const { return p_; }
  const Point& q() const { return q_; }

  friend bool operator==(const Segment&, const Segment&) = default;
  friend std::strong_ordering operator<=>(const Segment& a, const Segment& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    return a.q_ <=> b.q_;
  }

  bool contains(const Point& r) const;
  Point midpoint() const { return linkstar::midpoint(p_, q_); }
  std::string str() const { return "[" + p_.str() + ", " + q_.str() + "]"; }

 private:
  Point p_;
  Point q_;
};

// Locus a*x + b*y = c. Coefficients are coprime integers with the first
// nonzero entry of (a, b) positive, so equal lines compare equal.
class Line {
 public:
  Line(Rat a, Rat b, Rat c);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }

  bool contains(const Point& p) const { return a_ * p.x + b_ * p.y == c_; }
  bool is_horizontal() const { return a_.is_zero(); }
  // Signed residual a*x + b*y - c.
  Rat eval(const Point& p) const { return a_ * p.x + b_ * p.y - c_; }

  friend bool operator==(const Line&, const Line&) = default;
  friend std::strong_ordering operator<=>(const Line& l, const Line& r) {
    if (auto c = l.a_ <=> r.a_; c != 0) return c;
    if (auto c = l.b_ <=> r.b_; c != 0) return c;
    return l.c_ <=> r.c_;
  }

  std::string str() const;

 private:
  Rat a_;
  Rat b_;
  Rat c_;
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

Orientation orientation(const Point& p, const Point& q, const Point& r);

Line line_through(const Point& p, const Point& q);

struct AxisCrossing {
  std::optional<Point> point;
  // Set when the line is the x-axis itself; `point` is then empty.
  bool is_axis = false;
};

AxisCrossing x_axis_crossing(const Line& l);

struct NoIntersection {
  friend bool operator==(const NoIntersection&, const NoIntersection&) = default;
};
struct SameLine {
  friend bool operator==(const SameLine&, const SameLine&) = default;
};

using LinesIntersection = std::variant<NoIntersection, Point, SameLine>;
using SegmentsIntersection = std::variant<NoIntersection, Point, Segment>;

LinesIntersection lines_intersection(const Line& l1, const Line& l2);
SegmentsIntersection segments_intersection(const Segment& s1, const Segment& s2);

// Crossing of the closed segment [u, v] with the x-axis when u and v lie
// strictly on opposite sides of it.
std::optional<Point> axis_crossing_between(const Point& u, const Point& v);

}  // namespace linkstar

template <>
struct std::hash<linkstar::Point> {
  std::size_t operator()(const linkstar::Point& p) const noexcept {
    const std::size_t h = p.x.hash();
    return h ^ (p.y.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};
