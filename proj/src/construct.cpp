#include "linkstar/construct.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "linkstar/error.hpp"
#include "linkstar/rng.hpp"

namespace linkstar {

namespace {

// Denominator of the rational circle parameters.
constexpr long kParamDenominator = 4096;

Point circle_point(long p) {
  const Rat t(p, kParamDenominator);
  const Rat t2 = t * t;
  const Rat one(1);
  return {(one - t2) / (one + t2), Rat(2) * t / (one + t2)};
}

// Strictly increasing integer numerators of the circle parameters, one per
// vertex, with seeded angular jitter of at most a quarter of the spacing.
std::vector<long> circle_parameters(std::size_t m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const double pi = std::numbers::pi;
  std::vector<long> out;
  for (std::size_t j = 0; j < m; ++j) {
    const double base = -pi + pi * static_cast<double>(2 * j + 1) / static_cast<double>(m);
    const double jitter = (rng.unit() - 0.5) * 0.5 * pi / static_cast<double>(m);
    const long p = std::lround(std::tan((base + jitter) / 2.0) * static_cast<double>(kParamDenominator));
    if (!out.empty() && p <= out.back()) {
      throw Error(ErrorCode::RetryLimitExceeded, "circle parameters not increasing");
    }
    out.push_back(p);
  }
  return out;
}

void require_convex_clockwise(std::span<const Point> v) {
  const std::size_t m = v.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point& u = v[i];
    const Point& w = v[(i + 1) % m];
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i || j == (i + 1) % m) continue;
      if (orientation(u, w, v[j]) != Orientation::CW) {
        throw Error(ErrorCode::NotConvex, "vertex " + std::to_string(j) + " is not strictly inside edge " +
                                              std::to_string(i));
      }
    }
  }
}

bool strictly_outside(std::span<const Point> poly, const Point& g) {
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (orientation(poly[i], poly[(i + 1) % m], g) == Orientation::CCW) return true;
  }
  return false;
}

// [u, v] avoids the closed polygon, except that u may be `anchor` on the edge
// line through which the segment leaves.
bool segment_outside(std::span<const Point> poly, const Point& u, const Point& v, const Point& anchor) {
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Orientation ou = orientation(poly[i], poly[(i + 1) % m], u);
    const Orientation ov = orientation(poly[i], poly[(i + 1) % m], v);
    if (ov != Orientation::CCW) continue;
    if (ou == Orientation::CCW) return true;
    if (ou == Orientation::Collinear && u == anchor) return true;
  }
  return false;
}

bool meets(const Segment& s, const Segment& t) {
  return !std::holds_alternative<NoIntersection>(segments_intersection(s, t));
}

std::vector<Point> zigzag(const Point& start, const Point& d, int edges, const Rat& step, const Rat& amplitude) {
  const Point normal{-d.y, d.x};  // outward for a clockwise polygon
  std::vector<Point> g{start};
  for (int j = 1; j <= edges; ++j) {
    const Rat side = (j % 2 == 1) ? amplitude : -amplitude;
    g.push_back(start + normal * (step * Rat(j)) + d * side);
  }
  return g;
}

bool gamma_paths_valid(const PolygonSpec& p, const std::vector<std::vector<Point>>& gamma) {
  std::vector<std::vector<Segment>> edges(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const auto& g = gamma[i];
    for (std::size_t j = 1; j < g.size(); ++j) {
      if (!strictly_outside(p.vertices, g[j])) return false;
      if (!segment_outside(p.vertices, g[j - 1], g[j], g[0])) return false;
      edges[i].emplace_back(g[j - 1], g[j]);
    }
    for (std::size_t j = 2; j < g.size(); ++j) {
      if (orientation(g[j - 2], g[j - 1], g[j]) == Orientation::Collinear) return false;
    }
    // Simple path: adjacent edges share only their common vertex, others are disjoint.
    for (std::size_t a = 0; a < edges[i].size(); ++a) {
      for (std::size_t b = a + 1; b < edges[i].size(); ++b) {
        const SegmentsIntersection r = segments_intersection(edges[i][a], edges[i][b]);
        if (b == a + 1) {
          const auto* pt = std::get_if<Point>(&r);
          if (pt == nullptr || *pt != g[a + 1]) return false;
        } else if (!std::holds_alternative<NoIntersection>(r)) {
          return false;
        }
      }
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      for (const Segment& s : edges[i]) {
        for (const Segment& t : edges[j]) {
          if (meets(s, t)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

int wrap_index(int i, int k) {
  const int m = k + 1;
  return ((i % m) + m) % m;
}

PolygonSpec make_polygon(int k, std::uint64_t seed) {
  if (k < 2) throw Error(ErrorCode::KTooSmall, "k = " + std::to_string(k));
  const std::size_t m = 2 * static_cast<std::size_t>(k) + 2;
  for (int retry = 0; retry < kPolygonRetryLimit; ++retry) {
    std::vector<long> params;
    try {
      params = circle_parameters(m, mix_seed(seed, static_cast<std::uint64_t>(retry)));
    } catch (const Error&) {
      continue;
    }
    PolygonSpec p;
    p.k = k;
    p.kappa = k / 2;
    p.seed = seed;
    p.retry_count = retry;
    // Increasing parameter = counterclockwise, so walk it backwards.
    for (std::size_t v = 0; v < m; ++v) p.vertices.push_back(circle_point(params[m - 1 - v]));
    if (check_strong_general_position(p).ok) return p;
  }
  throw Error(ErrorCode::RetryLimitExceeded, "no polygon in strong general position for k = " + std::to_string(k));
}

GeneralPositionReport check_strong_general_position(std::span<const Point> v) {
  const std::size_t m = v.size();
  if (m < 6) throw Error(ErrorCode::KTooSmall, "polygon has " + std::to_string(m) + " vertices, need >= 6");
  require_convex_clockwise(v);

  std::vector<Diagonal> diagonals;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      diagonals.push_back({i, j});
    }
  }
  // Two diagonals cross inside the polygon iff their endpoints interleave.
  std::map<Point, std::vector<std::size_t>> through;
  for (std::size_t x = 0; x < diagonals.size(); ++x) {
    for (std::size_t y = x + 1; y < diagonals.size(); ++y) {
      const Diagonal& d = diagonals[x];
      const Diagonal& e = diagonals[y];
      const bool interleave = (d.i < e.i && e.i < d.j && d.j < e.j) || (e.i < d.i && d.i < e.j && e.j < d.j);
      if (!interleave) continue;
      const Point pt = std::get<Point>(segments_intersection(Segment(v[d.i], v[d.j]), Segment(v[e.i], v[e.j])));
      auto& list = through[pt];
      for (std::size_t idx : {x, y}) {
        if (std::find(list.begin(), list.end(), idx) == list.end()) list.push_back(idx);
      }
    }
  }
  GeneralPositionReport report;
  std::optional<std::array<std::size_t, 3>> best;
  for (auto& [pt, list] : through) {
    if (list.size() < 3) continue;
    std::sort(list.begin(), list.end());
    const std::array<std::size_t, 3> triple{list[0], list[1], list[2]};
    if (!best || triple < *best) {
      best = triple;
      report.common_point = pt;
    }
  }
  if (best) {
    report.ok = false;
    report.violating = std::array<Diagonal, 3>{diagonals[(*best)[0]], diagonals[(*best)[1]], diagonals[(*best)[2]]};
  }
  return report;
}

GeneralPositionReport check_strong_general_position(const PolygonSpec& p) {
  if (p.k < 2 || p.vertices.size() != 2 * static_cast<std::size_t>(p.k) + 2) {
    throw Error(ErrorCode::KTooSmall, "polygon spec needs k >= 2 and 2k+2 vertices");
  }
  return check_strong_general_position(std::span<const Point>(p.vertices));
}

std::string Feature::label() const {
  return (kind == FeatureKind::B ? "B" : "G") + std::to_string(index);
}

Feature Feature::parse(const std::string& label) {
  if (label.size() < 2 || (label[0] != 'B' && label[0] != 'G')) {
    throw Error(ErrorCode::MalformedDocument, "bad feature label '" + label + "'");
  }
  const std::string digits = label.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
      digits.size() > 6) {
    throw Error(ErrorCode::MalformedDocument, "bad feature label '" + label + "'");
  }
  return Feature{label[0] == 'B' ? FeatureKind::B : FeatureKind::Gamma, std::stoi(digits)};
}

Construction Construction::assemble(int n, PolygonSpec polygon, std::vector<LabeledSegment> raw,
                                    std::vector<Point> c, std::vector<std::vector<Point>> gamma,
                                    std::vector<Point> e, int gamma_retry_count) {
  Construction out;
  out.n = n;
  out.k = polygon.k;
  out.polygon = std::move(polygon);
  std::vector<Segment> plain;
  for (const LabeledSegment& s : raw) plain.push_back(s.segment);
  out.complex = SegmentComplex::normalize(plain);
  out.B.assign(static_cast<std::size_t>(out.k) + 1, {});
  for (const LabeledSegment& s : raw) {
    if (s.feature.index < 0 || s.feature.index > out.k) {
      throw Error(ErrorCode::IndexOutOfRange, "feature " + s.feature.label());
    }
    if (s.feature.kind != FeatureKind::B) continue;
    const auto idx = out.complex.covering_segment(s.segment);
    auto& set = out.B[static_cast<std::size_t>(s.feature.index)];
    if (std::find(set.begin(), set.end(), *idx) == set.end()) set.push_back(*idx);
  }
  for (auto& set : out.B) std::sort(set.begin(), set.end());
  out.raw = std::move(raw);
  out.c = std::move(c);
  out.gamma = std::move(gamma);
  out.e = std::move(e);
  out.gamma_retry_count = gamma_retry_count;
  return out;
}

std::optional<int> Construction::class_of(const Point& p) const {
  std::optional<int> best;
  for (const LabeledSegment& s : raw) {
    if ((!best || s.feature.index < *best) && s.segment.contains(p)) best = s.feature.index;
  }
  return best;
}

Construction build_s2k(const PolygonSpec& p) {
  check_strong_general_position(p);
  const int k = p.k;
  std::vector<LabeledSegment> raw;
  for (int i = 0; i <= k; ++i) {
    for (int nu = 0; nu <= k; ++nu) {
      if (nu == wrap_index(i - p.kappa, k)) continue;
      raw.push_back({Segment(p.a(nu), p.b(i)), Feature{FeatureKind::B, i}});
    }
  }
  std::vector<Point> c;
  for (int i = 0; i <= k; ++i) c.push_back(midpoint(p.b(i), p.a(i + 1)));
  Construction out = Construction::assemble(2, p, std::move(raw), c, std::vector<std::vector<Point>>(c.size()), c, 0);

  if (out.complex.size() != out.raw.size()) {
    throw Error(ErrorCode::PreconditionViolated, "construction segments merged during normalization");
  }
  const std::size_t m = p.vertices.size();
  for (int i = 0; i <= k; ++i) {
    // The removed matching edge [a_{i-kappa}, b_i] is a diagonal and absent.
    const std::size_t ia = 2 * static_cast<std::size_t>(wrap_index(i - p.kappa, k));
    const std::size_t ib = 2 * static_cast<std::size_t>(i) + 1;
    const std::size_t gap = ia > ib ? ia - ib : ib - ia;
    if (gap == 1 || gap == m - 1) {
      throw Error(ErrorCode::PreconditionViolated, "removed matching edge is a boundary edge");
    }
    if (out.complex.contains_point(midpoint(p.a(i - p.kappa), p.b(i)))) {
      throw Error(ErrorCode::PreconditionViolated, "removed matching edge present for i = " + std::to_string(i));
    }
  }
  return out;
}

Construction build_snk(const PolygonSpec& p, int n) {
  if (n < 2) throw Error(ErrorCode::PreconditionViolated, "n must be >= 2");
  Construction base = build_s2k(p);
  if (n == 2) return base;
  const int k = p.k;
  Rat amplitude(1, 8);
  const Rat step(1, 3);
  for (int retry = 0; retry < kGammaRetryLimit; ++retry, amplitude *= Rat(1, 2)) {
    std::vector<std::vector<Point>> gamma;
    for (int i = 0; i <= k; ++i) gamma.push_back(zigzag(base.c[static_cast<std::size_t>(i)], p.a(i + 1) - p.b(i), n - 2, step, amplitude));
    if (!gamma_paths_valid(p, gamma)) continue;
    std::vector<LabeledSegment> raw = base.raw;
    std::vector<Point> e;
    for (int i = 0; i <= k; ++i) {
      const auto& g = gamma[static_cast<std::size_t>(i)];
      for (std::size_t j = 1; j < g.size(); ++j) raw.push_back({Segment(g[j - 1], g[j]), Feature{FeatureKind::Gamma, i}});
      e.push_back(g.back());
    }
    Construction out = Construction::assemble(n, p, std::move(raw), base.c, std::move(gamma), std::move(e), retry);
    if (out.complex.size() != out.raw.size()) continue;
    return out;
  }
  throw Error(ErrorCode::GammaPlacementFailed, "no valid Gamma placement for n = " + std::to_string(n));
}

std::size_t expected_segment_count(int n, int k) {
  const auto kk = static_cast<std::size_t>(k);
  return (kk + 1) * kk + (kk + 1) * static_cast<std::size_t>(n - 2);
}

}  // namespace linkstar
