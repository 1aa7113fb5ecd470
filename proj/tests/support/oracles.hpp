#pragma once

// Brute-force reference implementations used only by the tests. They work on
// raw segment lists and never touch SegmentComplex, so they stay independent
// of the code paths they check.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "linkstar/kernel.hpp"
#include "linkstar/rng.hpp"

namespace linkstar::oracle {

inline bool on_any(const std::vector<Segment>& raw, const Point& p) {
  return std::any_of(raw.begin(), raw.end(), [&](const Segment& s) { return s.contains(p); });
}

// Every crossing point and endpoint of the raw segments.
inline std::vector<Point> subdivision_vertices(const std::vector<Segment>& raw) {
  std::set<Point> v;
  for (const Segment& s : raw) {
    v.insert(s.p());
    v.insert(s.q());
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      const SegmentsIntersection r = segments_intersection(raw[i], raw[j]);
      if (const auto* p = std::get_if<Point>(&r)) v.insert(*p);
    }
  }
  return {v.begin(), v.end()};
}

// [p, q] lies in the union: cut it at every subdivision vertex and every raw
// endpoint on it, then require each piece's midpoint to be on a raw segment.
inline bool covered(const std::vector<Segment>& raw, const Point& p, const Point& q) {
  if (p == q) return on_any(raw, p);
  const Segment pq(p, q);
  std::set<Point> cuts{pq.p(), pq.q()};
  for (const Segment& s : raw) {
    const SegmentsIntersection r = segments_intersection(pq, s);
    if (const auto* x = std::get_if<Point>(&r)) cuts.insert(*x);
    if (const auto* x = std::get_if<Segment>(&r)) {
      cuts.insert(x->p());
      cuts.insert(x->q());
    }
  }
  std::vector<Point> ordered(cuts.begin(), cuts.end());
  if (!on_any(raw, ordered.front()) || !on_any(raw, ordered.back())) return false;
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    if (!on_any(raw, midpoint(ordered[i - 1], ordered[i]))) return false;
  }
  return true;
}

// All-pairs link distance between subdivision vertices by BFS over the graph
// whose edges join mutually visible vertices.
struct ArrangementOracle {
  std::vector<Point> vertices;
  std::vector<std::vector<std::size_t>> dist;  // max() = unreachable
};

inline ArrangementOracle arrangement_link_distances(const std::vector<Segment>& raw) {
  ArrangementOracle o;
  o.vertices = subdivision_vertices(raw);
  const std::size_t n = o.vertices.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (covered(raw, o.vertices[i], o.vertices[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  o.dist.assign(n, std::vector<std::size_t>(n, kInf));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> q{s};
    o.dist[s][s] = 0;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop_front();
      for (std::size_t v : adj[u]) {
        if (o.dist[s][v] != kInf) continue;
        o.dist[s][v] = o.dist[s][u] + 1;
        q.push_back(v);
      }
    }
  }
  return o;
}

// Small random complexes on an integer grid, biased towards shared lines and
// touching endpoints so that merging and degenerate crossings are exercised.
inline std::vector<Segment> random_complex(std::uint64_t seed, std::size_t max_segments, long grid = 6) {
  SplitMix64 rng(seed);
  const auto count = static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(max_segments)));
  std::vector<Segment> out;
  while (out.size() < count) {
    Point a{Rat(static_cast<long>(rng.range(0, grid))), Rat(static_cast<long>(rng.range(0, grid)))};
    Point b{Rat(static_cast<long>(rng.range(0, grid))), Rat(static_cast<long>(rng.range(0, grid)))};
    if (!out.empty() && rng.range(0, 3) == 0) a = out[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(out.size()) - 1))].q();
    if (a == b) continue;
    out.emplace_back(a, b);
  }
  return out;
}

}  // namespace linkstar::oracle
