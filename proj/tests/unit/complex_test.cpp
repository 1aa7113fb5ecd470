#include <gtest/gtest.h>

#include "linkstar/complex.hpp"
#include "linkstar/construct.hpp"
#include "linkstar/rng.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace linkstar {
namespace {

using testing::P;

SegmentComplex make(std::vector<Segment> raw) { return SegmentComplex::normalize(raw); }

TEST(Normalize, MergesTouchingAndOverlapping) {
  const auto touch = make({Segment(P(0, 0), P(1, 0)), Segment(P(1, 0), P(2, 0))});
  ASSERT_EQ(touch.size(), 1u);
  EXPECT_EQ(touch.segment(0), Segment(P(0, 0), P(2, 0)));

  const auto overlap = make({Segment(P(0, 0), P(2, 0)), Segment(P(1, 0), P(3, 0))});
  ASSERT_EQ(overlap.size(), 1u);
  EXPECT_EQ(overlap.segment(0), Segment(P(0, 0), P(3, 0)));

  const auto cross = make({Segment(P(0, -1), P(0, 1)), Segment(P(-1, 0), P(1, 0))});
  ASSERT_EQ(cross.size(), 2u);
  EXPECT_EQ(cross.adjacency()[0], std::vector<std::size_t>{1});
  EXPECT_EQ(cross.adjacency()[1], std::vector<std::size_t>{0});
}

TEST(Normalize, CollinearGapStaysSplit) {
  const auto c = make({Segment(P(0, 0), P(1, 1)), Segment(P(2, 2), P(3, 3))});
  EXPECT_EQ(c.size(), 2u);
  EXPECT_TRUE(c.adjacency()[0].empty());
}

TEST(Normalize, RejectsEmpty) {
  EXPECT_CODE(SegmentComplex::normalize(std::vector<Segment>{}), ErrorCode::EmptyInput);
}

class Hexagon : public ::testing::Test {
 protected:
  void SetUp() override { s = build_s2k(make_polygon(2, 1)); }
  const Point& a(int i) const { return s.polygon.a(i); }
  const Point& b(int i) const { return s.polygon.b(i); }
  Construction s;
};

TEST_F(Hexagon, PointMembership) {
  EXPECT_TRUE(s.complex.contains_point(a(0)));
  Point centroid{Rat(0), Rat(0)};
  for (const Point& v : s.polygon.vertices) centroid = centroid + v;
  centroid = centroid * Rat(1, 6);
  EXPECT_FALSE(s.complex.contains_point(centroid));
  EXPECT_TRUE(make({Segment(P(0, 0), P(2, 0))}).contains_point(P(1, 0)));
}

TEST_F(Hexagon, SegmentMembership) {
  EXPECT_TRUE(s.complex.contains_segment(a(0), b(0)));
  EXPECT_FALSE(s.complex.contains_segment(a(0), a(1)));
  EXPECT_TRUE(make({Segment(P(0, 0), P(3, 0))}).contains_segment(P(1, 0), P(2, 0)));
}

TEST_F(Hexagon, IncidentSegments) {
  // Oracle: the six boundary edges taken straight from the vertex cycle.
  std::vector<Segment> edges;
  for (std::size_t i = 0; i < 6; ++i) edges.emplace_back(s.polygon.vertices[i], s.polygon.vertices[(i + 1) % 6]);
  std::vector<Segment> expected;
  for (const Segment& e : edges) {
    if (e.contains(b(0))) expected.push_back(e);
  }
  std::sort(expected.begin(), expected.end());
  ASSERT_EQ(expected.size(), 2u);
  EXPECT_NE(std::find(expected.begin(), expected.end(), Segment(a(0), b(0))), expected.end());
  EXPECT_NE(std::find(expected.begin(), expected.end(), Segment(b(0), a(1))), expected.end());

  std::vector<Segment> got;
  for (std::size_t i : s.complex.incident_segments(b(0))) got.push_back(s.complex.segment(i));
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);

  EXPECT_EQ(s.complex.incident_segments(s.c[0]).size(), 1u);
  EXPECT_EQ(make({Segment(P(0, 0), P(3, 0))}).incident_segments(P(1, 0)), std::vector<std::size_t>{0});
  EXPECT_CODE(s.complex.incident_segments(P(100, 100)), ErrorCode::PointNotOnComplex);
}

TEST(OneSet, Intersections) {
  const OneSet u({Segment(P(0, 0), P(2, 0))}, {});
  const OneSet v({Segment(P(1, 0), P(3, 0))}, {});
  EXPECT_EQ(oneset_intersect(u, v), OneSet({Segment(P(1, 0), P(2, 0))}, {}));

  const OneSet vert({Segment(P(0, -1), P(0, 1))}, {});
  const OneSet horiz({Segment(P(-1, 0), P(1, 0))}, {});
  EXPECT_EQ(oneset_intersect(vert, horiz), OneSet::point(P(0, 0)));

  EXPECT_TRUE(oneset_intersect(OneSet({Segment(P(0, 0), P(1, 0))}, {}), OneSet({Segment(P(2, 0), P(3, 0))}, {}))
                  .empty());
}

TEST(OneSet, CanonicalForm) {
  // Mergeable pieces, a covered point and duplicates all vanish.
  const OneSet x({Segment(P(1, 0), P(2, 0)), Segment(P(0, 0), P(1, 0)), Segment(P(0, 0), P(1, 0))},
                 {P(1, 0), P(5, 5), P(5, 5)});
  EXPECT_EQ(x.segments(), std::vector<Segment>{Segment(P(0, 0), P(2, 0))});
  EXPECT_EQ(x.points(), std::vector<Point>{P(5, 5)});
  EXPECT_EQ(x.least_point(), P(0, 0));
  EXPECT_TRUE(x.contains(P(1, 0)));
  EXPECT_FALSE(x.contains(P(3, 0)));
  EXPECT_FALSE(OneSet().least_point().has_value());
}

// Rational points on random raw segments and small perturbations of them.
TEST(ComplexProperty, PointMembershipMatchesRawOracle) {
  SplitMix64 g(77);
  int on = 0, off = 0;
  for (std::uint64_t inst = 0; inst < 20; ++inst) {
    const auto raw = oracle::random_complex(1000 + inst, 12);
    const auto c = SegmentComplex::normalize(raw);
    for (int it = 0; it < 50; ++it) {
      const Segment& s = raw[static_cast<std::size_t>(g.range(0, static_cast<std::int64_t>(raw.size()) - 1))];
      const Point p = lerp(s.p(), s.q(), Rat(static_cast<long>(g.range(0, 16)), 16));
      EXPECT_TRUE(c.contains_point(p));
      EXPECT_EQ(c.contains_point(p), oracle::on_any(raw, p));
      ++on;
      const Point d{Rat(static_cast<long>(g.range(-3, 3)), 97), Rat(static_cast<long>(g.range(-3, 3)), 89)};
      EXPECT_EQ(c.contains_point(p + d), oracle::on_any(raw, p + d));
      ++off;
    }
  }
  EXPECT_EQ(on, 1000);
  EXPECT_EQ(off, 1000);
}

TEST(ComplexProperty, SegmentMembershipMatchesCoveringOracle) {
  for (std::uint64_t inst = 0; inst < 60; ++inst) {
    const auto raw = oracle::random_complex(2000 + inst, 10, 4);
    const auto c = SegmentComplex::normalize(raw);
    const auto verts = oracle::subdivision_vertices(raw);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t j = i; j < verts.size(); ++j) {
        ASSERT_EQ(c.contains_segment(verts[i], verts[j]), oracle::covered(raw, verts[i], verts[j]))
            << verts[i].str() << " " << verts[j].str();
      }
    }
  }
}

TEST(ComplexProperty, NormalizeIdempotentAndGraphExact) {
  for (std::uint64_t inst = 0; inst < 100; ++inst) {
    const auto raw = oracle::random_complex(3000 + inst, 12);
    const auto c = SegmentComplex::normalize(raw);
    const auto again = SegmentComplex::normalize(c.maximal_segments());
    EXPECT_EQ(again.maximal_segments(), c.maximal_segments());
    EXPECT_EQ(again.adjacency(), c.adjacency());
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (i == j) continue;
        const auto r = segments_intersection(c.segment(i), c.segment(j));
        const bool meet = !std::holds_alternative<NoIntersection>(r);
        const auto& adj = c.adjacency()[i];
        EXPECT_EQ(meet, std::find(adj.begin(), adj.end(), j) != adj.end());
        // Maximality: collinear segments never meet.
        if (line_through(c.segment(i).p(), c.segment(i).q()) ==
            line_through(c.segment(j).p(), c.segment(j).q())) {
          EXPECT_FALSE(meet);
        }
      }
    }
  }
}

OneSet random_oneset(SplitMix64& g) {
  std::vector<Segment> segs;
  std::vector<Point> pts;
  const auto ns = g.range(0, 4);
  for (int i = 0; i < ns; ++i) {
    // Axis-aligned pieces in a small box so that overlaps are frequent.
    const long c = static_cast<long>(g.range(0, 4));
    long lo = static_cast<long>(g.range(0, 4));
    long hi = static_cast<long>(g.range(0, 4));
    if (lo == hi) ++hi;
    if (g.range(0, 1) == 0) {
      segs.emplace_back(P(lo, c), P(hi, c));
    } else {
      segs.emplace_back(P(c, lo), P(c, hi));
    }
  }
  const auto np = g.range(0, 3);
  for (int i = 0; i < np; ++i) pts.push_back(P(static_cast<long>(g.range(0, 4)), static_cast<long>(g.range(0, 4))));
  return OneSet(std::move(segs), std::move(pts));
}

TEST(OneSetProperty, IntersectionAlgebra) {
  SplitMix64 g(4242);
  for (int it = 0; it < 500; ++it) {
    const OneSet x = random_oneset(g), y = random_oneset(g), z = random_oneset(g);
    EXPECT_EQ(oneset_intersect(x, y), oneset_intersect(y, x));
    EXPECT_EQ(oneset_intersect(oneset_intersect(x, y), z), oneset_intersect(x, oneset_intersect(y, z)));
    EXPECT_EQ(oneset_intersect(x, x), x);
    // Pointwise check on the integer and half-integer grid.
    const OneSet xy = oneset_intersect(x, y);
    for (long px = 0; px <= 8; ++px) {
      for (long py = 0; py <= 8; ++py) {
        const Point p{Rat(px, 2), Rat(py, 2)};
        EXPECT_EQ(xy.contains(p), x.contains(p) && y.contains(p));
      }
    }
  }
}

}  // namespace
}  // namespace linkstar
