#include "linkstar/linkvis.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "linkstar/error.hpp"

namespace linkstar {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// Multi-source BFS over the intersection graph starting from every segment
// incident to `p`. dist[s] = number of graph edges from the nearest source.
struct Bfs {
  std::vector<std::size_t> dist;
  std::vector<std::size_t> parent;
};

Bfs bfs_from(const SegmentComplex& c, const std::vector<std::size_t>& sources) {
  Bfs b{std::vector<std::size_t>(c.size(), kUnreached), std::vector<std::size_t>(c.size(), kUnreached)};
  std::deque<std::size_t> queue;
  for (std::size_t s : sources) {
    b.dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : c.adjacency()[u]) {
      if (b.dist[v] != kUnreached) continue;
      b.dist[v] = b.dist[u] + 1;
      b.parent[v] = u;
      queue.push_back(v);
    }
  }
  return b;
}

Point meeting_point(const SegmentComplex& c, std::size_t i, std::size_t j) {
  const SegmentsIntersection r = segments_intersection(c.segment(i), c.segment(j));
  // Distinct maximal segments never overlap, so they meet in one point.
  return std::get<Point>(r);
}

std::optional<PathCertificate> min_link_path(const SegmentComplex& c, const Point& p, const Point& q) {
  if (p == q) return PathCertificate{{p}};
  const std::vector<std::size_t> from = c.incident_segments(p);
  const std::vector<std::size_t> to = c.incident_segments(q);
  const Bfs b = bfs_from(c, from);
  std::size_t best = kUnreached;
  for (std::size_t t : to) {
    if (b.dist[t] < (best == kUnreached ? kUnreached : b.dist[best])) best = t;
  }
  if (best == kUnreached) return std::nullopt;
  std::vector<std::size_t> chain{best};
  while (b.dist[chain.back()] != 0) chain.push_back(b.parent[chain.back()]);
  std::reverse(chain.begin(), chain.end());
  PathCertificate cert;
  cert.vertices.push_back(p);
  for (std::size_t i = 1; i < chain.size(); ++i) cert.vertices.push_back(meeting_point(c, chain[i - 1], chain[i]));
  cert.vertices.push_back(q);
  return cert;
}

// Inserts `extra` distinct interior points on the first link [u, v].
void pad_first_link(PathCertificate& cert, std::size_t extra) {
  const Point u = cert.vertices[0];
  const Point v = cert.vertices[1];
  std::vector<Point> inserted;
  for (std::size_t i = 1; i <= extra; ++i) {
    inserted.push_back(lerp(u, v, Rat(static_cast<long>(i), static_cast<long>(extra + 1))));
  }
  cert.vertices.insert(cert.vertices.begin() + 1, inserted.begin(), inserted.end());
}

}  // namespace

LinkRegion link_region(const SegmentComplex& c, const Point& p, std::size_t j) {
  const std::vector<std::size_t> sources = c.incident_segments(p);
  if (j == 0) return LinkRegion{p, 0, OneSet::point(p)};
  const Bfs b = bfs_from(c, sources);
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (b.dist[i] != kUnreached && b.dist[i] + 1 <= j) segs.push_back(c.segment(i));
  }
  return LinkRegion{p, j, OneSet(std::move(segs), {})};
}

std::optional<std::size_t> link_distance(const SegmentComplex& c, const Point& p, const Point& q) {
  auto cert = min_link_path(c, p, q);
  if (!cert) return std::nullopt;
  return cert->links();
}

std::optional<PathCertificate> n_visible(const SegmentComplex& c, const Point& p, const Point& q,
                                         std::size_t n, bool exact_length) {
  auto cert = min_link_path(c, p, q);
  if (!cert || cert->links() > n) return std::nullopt;
  if (!exact_length || cert->links() == n) return cert;
  if (cert->links() == 0) {
    // Walk out along an incident segment and come back.
    const Segment& s = c.segment(c.incident_segments(p).front());
    const Point& far = s.p() == p ? s.q() : s.p();
    PathCertificate out{{p}};
    for (std::size_t i = 1; i < n; ++i) {
      out.vertices.push_back(lerp(p, far, Rat(static_cast<long>(i), static_cast<long>(n))));
    }
    out.vertices.push_back(p);
    return out;
  }
  pad_first_link(*cert, n - cert->links());
  return cert;
}

std::optional<Point> common_viewer(const SegmentComplex& c, std::span<const Point> targets,
                                   std::size_t n) {
  if (targets.empty()) throw Error(ErrorCode::EmptyInput, "common_viewer needs targets");
  OneSet acc = link_region(c, targets.front(), n).region;
  for (std::size_t i = 1; i < targets.size() && !acc.empty(); ++i) {
    acc = oneset_intersect(acc, link_region(c, targets[i], n).region);
  }
  // A target inside the region is the most natural viewer; it wins over the
  // canonically least point, which is used otherwise.
  std::optional<Point> best;
  for (const Point& t : targets) {
    if (acc.contains(t) && (!best || t < *best)) best = t;
  }
  return best ? best : acc.least_point();
}

bool certificate_valid(const SegmentComplex& c, const PathCertificate& cert, const Point& p,
                       const Point& q, std::size_t n) {
  if (cert.vertices.empty()) return false;
  if (cert.vertices.front() != p || cert.vertices.back() != q) return false;
  if (cert.links() > n) return false;
  if (!c.contains_point(p)) return false;
  for (std::size_t i = 1; i < cert.vertices.size(); ++i) {
    if (!c.contains_segment(cert.vertices[i - 1], cert.vertices[i])) return false;
  }
  std::set<Point> inner;
  for (std::size_t i = 1; i + 1 < cert.vertices.size(); ++i) {
    if (!inner.insert(cert.vertices[i]).second) return false;
  }
  return true;
}

}  // namespace linkstar
