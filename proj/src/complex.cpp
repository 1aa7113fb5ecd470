#include "linkstar/complex.hpp"

#include <algorithm>
#include <map>

#include "linkstar/error.hpp"

namespace linkstar {

std::vector<Segment> merge_collinear(std::span<const Segment> segments) {
  std::map<Line, std::vector<Segment>> by_line;
  for (const Segment& s : segments) by_line[line_through(s.p(), s.q())].push_back(s);

  std::vector<Segment> out;
  for (auto& [line, group] : by_line) {
    std::sort(group.begin(), group.end());
    Point lo = group.front().p();
    Point hi = group.front().q();
    for (std::size_t i = 1; i < group.size(); ++i) {
      const Segment& s = group[i];
      if (hi < s.p()) {
        out.emplace_back(lo, hi);
        lo = s.p();
        hi = s.q();
      } else if (hi < s.q()) {
        hi = s.q();
      }
    }
    out.emplace_back(lo, hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SegmentComplex SegmentComplex::normalize(std::span<const Segment> raw) {
  if (raw.empty()) throw Error(ErrorCode::EmptyInput, "complex needs at least one segment");
  SegmentComplex c;
  c.segments_ = merge_collinear(raw);
  const std::size_t m = c.segments_.size();
  c.adjacency_.assign(m, {});
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!std::holds_alternative<NoIntersection>(segments_intersection(c.segments_[i], c.segments_[j]))) {
        c.adjacency_[i].push_back(j);
        c.adjacency_[j].push_back(i);
      }
    }
  }
  for (auto& row : c.adjacency_) std::sort(row.begin(), row.end());
  return c;
}

bool SegmentComplex::contains_point(const Point& p) const {
  return std::any_of(segments_.begin(), segments_.end(),
                     [&](const Segment& s) { return s.contains(p); });
}

bool SegmentComplex::contains_segment(const Point& p, const Point& q) const {
  if (p == q) return contains_point(p);
  return std::any_of(segments_.begin(), segments_.end(),
                     [&](const Segment& s) { return s.contains(p) && s.contains(q); });
}

std::vector<std::size_t> SegmentComplex::incident_segments(const Point& p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (segments_[i].contains(p)) out.push_back(i);
  }
  if (out.empty()) throw Error(ErrorCode::PointNotOnComplex, p.str());
  return out;
}

std::optional<std::size_t> SegmentComplex::covering_segment(const Segment& s) const {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (segments_[i].contains(s.p()) && segments_[i].contains(s.q())) return i;
  }
  return std::nullopt;
}

OneSet::OneSet(std::vector<Segment> segments, std::vector<Point> points) {
  segments_ = merge_collinear(segments);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (Point& p : points) {
    const bool covered = std::any_of(segments_.begin(), segments_.end(),
                                     [&](const Segment& s) { return s.contains(p); });
    if (!covered) points_.push_back(std::move(p));
  }
}

bool OneSet::contains(const Point& p) const {
  if (std::binary_search(points_.begin(), points_.end(), p)) return true;
  return std::any_of(segments_.begin(), segments_.end(),
                     [&](const Segment& s) { return s.contains(p); });
}

std::optional<Point> OneSet::least_point() const {
  std::optional<Point> best;
  if (!points_.empty()) best = points_.front();
  // Segments are sorted by their lesser endpoint.
  if (!segments_.empty() && (!best || segments_.front().p() < *best)) best = segments_.front().p();
  return best;
}

OneSet oneset_intersect(const OneSet& x, const OneSet& y) {
  std::vector<Segment> segs;
  std::vector<Point> pts;
  for (const Segment& s : x.segments()) {
    for (const Segment& t : y.segments()) {
      const SegmentsIntersection r = segments_intersection(s, t);
      if (const auto* p = std::get_if<Point>(&r)) {
        pts.push_back(*p);
      } else if (const auto* seg = std::get_if<Segment>(&r)) {
        segs.push_back(*seg);
      }
    }
  }
  for (const Point& p : x.points()) {
    if (y.contains(p)) pts.push_back(p);
  }
  for (const Point& p : y.points()) {
    if (x.contains(p)) pts.push_back(p);
  }
  return OneSet(std::move(segs), std::move(pts));
}

}  // namespace linkstar
