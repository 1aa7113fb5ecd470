#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "linkstar/kernel.hpp"

namespace linkstar {

// Maximal segments of the union of `segments`: collinear pieces whose closed
// hulls touch or overlap are merged. Output is sorted.
std::vector<Segment> merge_collinear(std::span<const Segment> segments);

// A finite union of closed segments, normalized into maximal segments.
class SegmentComplex {
 public:
  SegmentComplex() = default;

  static SegmentComplex normalize(std::span<const Segment> raw);

  const std::vector<Segment>& maximal_segments() const { return segments_; }
  // adjacency()[i] lists j != i such that segments i and j meet (ascending).
  const std::vector<std::vector<std::size_t>>& adjacency() const { return adjacency_; }
  std::size_t size() const { return segments_.size(); }
  const Segment& segment(std::size_t i) const { return segments_.at(i); }

  bool contains_point(const Point& p) const;
  bool contains_segment(const Point& p, const Point& q) const;
  // Throws PointNotOnComplex when p is not on the complex.
  std::vector<std::size_t> incident_segments(const Point& p) const;
  // Index of the maximal segment covering `s`, if any.
  std::optional<std::size_t> covering_segment(const Segment& s) const;

 private:
  std::vector<Segment> segments_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Finite union of closed segments and isolated points in canonical form:
// segments are maximal (no two collinear ones meet), no listed point lies on a
// listed segment, and both lists are sorted and duplicate-free. Two OneSets are
// equal as point sets iff their canonical forms are equal.
class OneSet {
 public:
  OneSet() = default;
  OneSet(std::vector<Segment> segments, std::vector<Point> points);

  static OneSet point(Point p) { return OneSet({}, {std::move(p)}); }

  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<Point>& points() const { return points_; }

  bool empty() const { return segments_.empty() && points_.empty(); }
  bool contains(const Point& p) const;
  // Lexicographically least point of the set.
  std::optional<Point> least_point() const;

  friend bool operator==(const OneSet&, const OneSet&) = default;

 private:
  std::vector<Segment> segments_;
  std::vector<Point> points_;
};

OneSet oneset_intersect(const OneSet& x, const OneSet& y);

}  // namespace linkstar
