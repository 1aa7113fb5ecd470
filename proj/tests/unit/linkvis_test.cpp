#include <gtest/gtest.h>

#include <limits>

#include "linkstar/construct.hpp"
#include "linkstar/linkvis.hpp"
#include "linkstar/verify.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace linkstar {
namespace {

using testing::P;

std::vector<Segment> hexagon_edges(const Construction& s) {
  std::vector<Segment> e;
  const auto& v = s.polygon.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) e.emplace_back(v[i], v[(i + 1) % v.size()]);
  std::sort(e.begin(), e.end());
  return e;
}

class Hexagon : public ::testing::Test {
 protected:
  void SetUp() override { s = build_s2k(make_polygon(2, 3)); }
  Construction s;
};

TEST_F(Hexagon, RegionsByRadius) {
  const Point a0 = s.polygon.a(0);
  std::vector<Segment> incident;
  for (const Segment& e : hexagon_edges(s)) {
    if (e.contains(a0)) incident.push_back(e);
  }
  EXPECT_EQ(link_region(s.complex, a0, 1).region, OneSet(incident, {}));
  EXPECT_EQ(link_region(s.complex, a0, 0).region, OneSet::point(a0));
  EXPECT_EQ(link_region(s.complex, a0, 3).region, OneSet(hexagon_edges(s), {}));
}

TEST_F(Hexagon, Distances) {
  const Point a0 = s.polygon.a(0), a1 = s.polygon.a(1);
  EXPECT_EQ(link_distance(s.complex, a0, a0), 0u);
  // Oracle: BFS over the subdivided boundary.
  std::vector<Segment> raw;
  for (const auto& l : s.raw) raw.push_back(l.segment);
  const auto o = oracle::arrangement_link_distances(raw);
  const auto idx = [&](const Point& p) {
    return static_cast<std::size_t>(std::find(o.vertices.begin(), o.vertices.end(), p) - o.vertices.begin());
  };
  EXPECT_EQ(o.dist[idx(a0)][idx(a1)], 2u);
  EXPECT_EQ(link_distance(s.complex, a0, a1), 2u);

  EXPECT_FALSE(n_visible(s.complex, a0, a1, 1).has_value());
  const auto cert = n_visible(s.complex, a0, a1, 2);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->vertices, (std::vector<Point>{a0, s.polygon.b(0), a1}));
}

TEST(LinkDistance, DisconnectedIsAbsent) {
  const std::vector<Segment> raw{Segment(P(0, 0), P(1, 0)), Segment(P(0, 1), P(1, 1))};
  const auto c = SegmentComplex::normalize(raw);
  EXPECT_FALSE(link_distance(c, P(0, 0), P(1, 1)).has_value());
  EXPECT_FALSE(n_visible(c, P(0, 0), P(1, 1), 10).has_value());
  EXPECT_CODE(link_distance(c, P(5, 5), P(0, 0)), ErrorCode::PointNotOnComplex);
}

TEST(NVisible, ExactLengthPadding) {
  const std::vector<Segment> raw{Segment(P(0, 0), P(4, 0))};
  const auto c = SegmentComplex::normalize(raw);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto cert = n_visible(c, P(0, 0), P(4, 0), n, true);
    ASSERT_TRUE(cert.has_value());
    EXPECT_EQ(cert->links(), n);
    EXPECT_TRUE(certificate_valid(c, *cert, P(0, 0), P(4, 0), n));
  }
  const auto self = n_visible(c, P(1, 0), P(1, 0), 2, true);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(self->links(), 2u);
  EXPECT_TRUE(certificate_valid(c, *self, P(1, 0), P(1, 0), 2));
}

TEST(CertificateValid, RejectsBrokenPaths) {
  const std::vector<Segment> raw{Segment(P(0, 0), P(2, 0)), Segment(P(2, 0), P(2, 2))};
  const auto c = SegmentComplex::normalize(raw);
  EXPECT_TRUE(certificate_valid(c, {{P(0, 0), P(2, 0), P(2, 2)}}, P(0, 0), P(2, 2), 2));
  EXPECT_FALSE(certificate_valid(c, {{P(0, 0), P(2, 2)}}, P(0, 0), P(2, 2), 2));
  EXPECT_FALSE(certificate_valid(c, {{P(0, 0), P(2, 0), P(2, 2)}}, P(0, 0), P(2, 2), 1));
  EXPECT_FALSE(certificate_valid(c, {{P(0, 0), P(1, 0), P(1, 0), P(2, 2)}}, P(0, 0), P(2, 2), 3));
  EXPECT_FALSE(certificate_valid(c, {{P(0, 0), P(2, 0), P(2, 2)}}, P(0, 0), P(2, 1), 2));
}

TEST(Snk, ProofVertexCertificates) {
  const int k = 4, n = 5;
  const Construction s = build_snk(make_polygon(k, 11), n);
  const Point& a = s.polygon.a(k + 1 - s.polygon.kappa);
  const auto one = n_visible(s.complex, a, s.polygon.b(1), 1);
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->links(), 1u);

  const auto full = n_visible(s.complex, a, s.e[1], static_cast<std::size_t>(n));
  ASSERT_TRUE(full.has_value());
  EXPECT_EQ(full->links(), static_cast<std::size_t>(n));
  std::vector<Point> expected{a, s.polygon.b(1)};
  expected.insert(expected.end(), s.gamma[1].begin(), s.gamma[1].end());
  EXPECT_EQ(full->vertices, expected);
  EXPECT_TRUE(certificate_valid(s.complex, *full, a, s.e[1], static_cast<std::size_t>(n)));
}

TEST(CommonViewer, Examples) {
  const Construction hex = build_s2k(make_polygon(2, 5));
  EXPECT_FALSE(common_viewer(hex.complex, hex.c, 2).has_value());

  const Construction s24 = build_s2k(make_polygon(4, 5));
  std::vector<Point> targets;
  for (int i = 1; i <= 4; ++i) {
    const Segment& seg = s24.complex.segment(s24.B[static_cast<std::size_t>(i)].front());
    targets.push_back(lerp(seg.p(), seg.q(), Rat(1, 3)));
  }
  const auto z = common_viewer(s24.complex, targets, 2);
  ASSERT_TRUE(z.has_value());
  for (const Point& t : targets) EXPECT_TRUE(n_visible(s24.complex, *z, t, 2).has_value());
  // The proof vertex a_3 lies in the common region too.
  for (const Point& t : targets) EXPECT_TRUE(n_visible(s24.complex, s24.polygon.a(3), t, 2).has_value());

  const Point p = hex.polygon.b(1);
  const std::vector<Point> single{p};
  EXPECT_EQ(common_viewer(hex.complex, single, 1), p);
}

TEST(LinkProperty, AgreesWithArrangementOracle) {
  for (std::uint64_t inst = 0; inst < 40; ++inst) {
    const auto raw = oracle::random_complex(500 + inst, 12);
    const auto c = SegmentComplex::normalize(raw);
    const auto o = oracle::arrangement_link_distances(raw);
    for (std::size_t i = 0; i < o.vertices.size(); ++i) {
      for (std::size_t j = 0; j < o.vertices.size(); ++j) {
        const auto d = link_distance(c, o.vertices[i], o.vertices[j]);
        const std::size_t want = o.dist[i][j];
        if (want == std::numeric_limits<std::size_t>::max()) {
          ASSERT_FALSE(d.has_value());
        } else {
          ASSERT_EQ(d, want) << "instance " << inst << " " << o.vertices[i].str() << " -> " << o.vertices[j].str();
        }
      }
    }
  }
}

TEST(LinkProperty, SymmetricMonotoneAndCertified) {
  for (std::uint64_t inst = 0; inst < 30; ++inst) {
    const auto raw = oracle::random_complex(900 + inst, 12);
    const auto c = SegmentComplex::normalize(raw);
    const auto pts = sample_on_complex(c, 8, inst);
    for (const Point& p : pts) {
      OneSet prev = link_region(c, p, 0).region;
      for (std::size_t j = 1; j <= 6; ++j) {
        const OneSet cur = link_region(c, p, j).region;
        EXPECT_EQ(oneset_intersect(prev, cur), prev);
        for (const Segment& s : cur.segments()) EXPECT_TRUE(c.contains_segment(s.p(), s.q()));
        prev = cur;
      }
      for (const Point& q : pts) {
        const auto d = link_distance(c, p, q);
        EXPECT_EQ(d, link_distance(c, q, p));
        if (!d) continue;
        EXPECT_EQ(prev.contains(q), *d <= 6);
        for (std::size_t n = *d; n <= *d + 2; ++n) {
          for (bool exact : {false, true}) {
            const auto cert = n_visible(c, p, q, n, exact);
            ASSERT_TRUE(cert.has_value());
            EXPECT_TRUE(certificate_valid(c, *cert, p, q, n));
            EXPECT_EQ(cert->links(), exact ? n : *d);
          }
        }
        if (*d > 0) EXPECT_FALSE(n_visible(c, p, q, *d - 1).has_value());
      }
    }
  }
}

TEST(LinkProperty, CommonViewerMatchesRegionFold) {
  for (std::uint64_t inst = 0; inst < 40; ++inst) {
    const auto raw = oracle::random_complex(1300 + inst, 10);
    const auto c = SegmentComplex::normalize(raw);
    const auto targets = sample_on_complex(c, 3, inst);
    for (std::size_t n = 1; n <= 3; ++n) {
      OneSet fold = link_region(c, targets[0], n).region;
      for (std::size_t i = 1; i < targets.size(); ++i) fold = oneset_intersect(fold, link_region(c, targets[i], n).region);
      const auto z = common_viewer(c, targets, n);
      EXPECT_EQ(z.has_value(), !fold.empty());
      if (!z) continue;
      EXPECT_TRUE(fold.contains(*z));
      for (const Point& t : targets) EXPECT_TRUE(n_visible(c, *z, t, n).has_value());
    }
  }
}

}  // namespace
}  // namespace linkstar
