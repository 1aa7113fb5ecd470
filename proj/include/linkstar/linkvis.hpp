#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "linkstar/complex.hpp"

namespace linkstar {

// Points reachable from `source` by polygonal paths of at most `radius` links.
struct LinkRegion {
  Point source;
  std::size_t radius = 0;
  OneSet region;
};

// Polygonal path x = vertices.front(), ..., y = vertices.back().
struct PathCertificate {
  std::vector<Point> vertices;

  std::size_t links() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

LinkRegion link_region(const SegmentComplex& c, const Point& p, std::size_t j);

// Minimum number of links, or nullopt when p and q lie in different components.
std::optional<std::size_t> link_distance(const SegmentComplex& c, const Point& p, const Point& q);

// Minimum-link certificate when link_distance(p, q) <= n. With `exact_length`
// the path is padded to exactly n links by inserting distinct collinear
// vertices.
std::optional<PathCertificate> n_visible(const SegmentComplex& c, const Point& p, const Point& q,
                                         std::size_t n, bool exact_length = false);

// A point seeing every target through paths of at most n links: the least
// target lying in the common region if there is one, else the region's
// canonically least point.
std::optional<Point> common_viewer(const SegmentComplex& c, std::span<const Point> targets,
                                   std::size_t n);

// Independent re-check of a certificate: endpoints match, every link lies in the
// complex, intermediate vertices are pairwise distinct, and links <= n.
bool certificate_valid(const SegmentComplex& c, const PathCertificate& cert, const Point& p,
                       const Point& q, std::size_t n);

}  // namespace linkstar
