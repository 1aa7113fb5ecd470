#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linkstar/complex.hpp"

namespace linkstar {

// Reduces an index modulo k + 1. All cyclic index arithmetic goes through here.
int wrap_index(int i, int k);

// Convex (2k+2)-gon with vertices a_0, b_0, a_1, b_1, ..., a_k, b_k in
// clockwise order.
struct PolygonSpec {
  int k = 0;
  int kappa = 0;
  std::vector<Point> vertices;
  std::uint64_t seed = 0;
  int retry_count = 0;

  const Point& a(int i) const { return vertices.at(2 * static_cast<std::size_t>(wrap_index(i, k))); }
  const Point& b(int i) const { return vertices.at(2 * static_cast<std::size_t>(wrap_index(i, k)) + 1); }
};

inline constexpr int kPolygonRetryLimit = 1000;
inline constexpr int kGammaRetryLimit = 64;

PolygonSpec make_polygon(int k, std::uint64_t seed);

// A diagonal between vertex positions i < j of the cyclic vertex list.
struct Diagonal {
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

struct GeneralPositionReport {
  bool ok = true;
  std::optional<std::array<Diagonal, 3>> violating;
  std::optional<Point> common_point;
};

// Throws NotConvex unless the vertices are in strictly convex clockwise
// position, and KTooSmall for fewer than six vertices.
GeneralPositionReport check_strong_general_position(std::span<const Point> vertices);
GeneralPositionReport check_strong_general_position(const PolygonSpec& p);

enum class FeatureKind { B, Gamma };

struct Feature {
  FeatureKind kind = FeatureKind::B;
  int index = 0;

  std::string label() const;
  static Feature parse(const std::string& label);
  friend bool operator==(const Feature&, const Feature&) = default;
};

struct LabeledSegment {
  Segment segment;
  Feature feature;
};

struct Construction {
  int n = 2;
  int k = 2;
  PolygonSpec polygon;
  std::vector<LabeledSegment> raw;
  SegmentComplex complex;
  // B[i]: maximal-segment indices of B_i.
  std::vector<std::vector<std::size_t>> B;
  std::vector<Point> c;
  // gamma[i]: vertices of Gamma_i starting at c[i]; empty when n == 2.
  std::vector<std::vector<Point>> gamma;
  std::vector<Point> e;
  int gamma_retry_count = 0;

  // Normalizes `raw` and derives the B index sets from the feature labels.
  static Construction assemble(int n, PolygonSpec polygon, std::vector<LabeledSegment> raw,
                               std::vector<Point> c, std::vector<std::vector<Point>> gamma,
                               std::vector<Point> e, int gamma_retry_count);

  // Least i such that p lies on a raw segment of C_i = B_i u Gamma_i.
  std::optional<int> class_of(const Point& p) const;
};

Construction build_s2k(const PolygonSpec& p);
Construction build_snk(const PolygonSpec& p, int n);

// Raw segment count (k+1)k + (k+1)(n-2).
std::size_t expected_segment_count(int n, int k);

}  // namespace linkstar
