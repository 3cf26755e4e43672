#include <gtest/gtest.h>

#include <random>

#include "tropseg/tropical.hpp"

using namespace tropseg;

namespace {

void expect_bends(const TropicalSegment& seg, const std::vector<TorusPoint>& want) {
  auto got = seg.bends();
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    auto g = got[i].canonical();
    auto w = want[i].canonical();
    for (std::size_t j = 0; j < g.dim(); ++j) EXPECT_NEAR(g[j], w[j], 1e-12) << "bend " << i;
  }
}

TorusPoint random_point(std::size_t e, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  std::vector<double> c(e);
  for (auto& x : c) x = d(rng);
  return TorusPoint(c);
}

}  // namespace

TEST(Tropical, Distance) {
  EXPECT_DOUBLE_EQ(trop_dist({0, 0, 0}, {0, 3, 1}), 3.0);
  EXPECT_DOUBLE_EQ(trop_dist({1, 2, 3}, {11, 12, 13}), 0.0);
  EXPECT_THROW(trop_dist({0, 0}, {0, 0, 0}), std::invalid_argument);
}

TEST(Tropical, CanonicalShiftsMinimumToZero) {
  auto c = TorusPoint{3, 5, 4}.canonical();
  EXPECT_EQ(c[0], 0.0);
  EXPECT_EQ(c[1], 2.0);
  EXPECT_TRUE(TorusPoint({3, 5, 4}).equals({0, 2, 1}));
}

TEST(Tropical, Combine) {
  std::vector<double> coeffs{0.0, 1.0};
  std::vector<TorusPoint> pts{{0, 3, 1}, {0, 0, 0}};
  auto y = trop_combine(coeffs, pts);
  EXPECT_TRUE(y.equals({1, 3, 1}));
}

TEST(Tropical, ThreePointSegment) {
  auto seg = tropical_segment({0, 0, 0}, {0, 3, 1});
  expect_bends(seg, {{0, 3, 1}, {0, 2, 0}, {0, 0, 0}});
  EXPECT_DOUBLE_EQ(seg.length(), 3.0);
}

TEST(Tropical, TriangleSides) {
  expect_bends(tropical_segment({0, 2, 5}, {0, 3, 1}), {{0, 3, 1}, {0, 3, 5}, {0, 2, 5}});
  expect_bends(tropical_segment({0, 2, 5}, {0, 0, 0}), {{0, 0, 0}, {0, 0, 3}, {0, 2, 5}});
}

TEST(Tropical, TiedDifferencesShareABend) {
  auto seg = tropical_segment({0, 0, 0, 0}, {0, 1, 1, 2});
  EXPECT_EQ(seg.bend_count(), 3u);
}

TEST(Tropical, IdenticalEndpointsGiveOneBend) {
  auto seg = tropical_segment({1, 2, 3}, {4, 5, 6});
  EXPECT_EQ(seg.bend_count(), 1u);
  EXPECT_DOUBLE_EQ(seg.length(), 0.0);
}

TEST(Tropical, MetricAxioms) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t e = 2 + i % 9;
    auto x = random_point(e, rng), y = random_point(e, rng), z = random_point(e, rng);
    EXPECT_GE(trop_dist(x, y), 0.0);
    EXPECT_DOUBLE_EQ(trop_dist(x, y), trop_dist(y, x));
    EXPECT_EQ(trop_dist(x, x), 0.0);
    EXPECT_LE(trop_dist(x, z), trop_dist(x, y) + trop_dist(y, z) + 1e-12);
    std::vector<double> shifted(x.coords().begin(), x.coords().end());
    for (auto& c : shifted) c += 7.25;
    EXPECT_NEAR(trop_dist(x, TorusPoint(shifted)), 0.0, 1e-12);
  }
}

// Bends are consecutive along a geodesic: the pieces add up to d(u, v), and every
// bend lies in the hull of the endpoints.
TEST(Tropical, SegmentIsGeodesic) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t e = 2 + i % 12;
    auto u = random_point(e, rng), v = random_point(e, rng);
    auto seg = tropical_segment(u, v);
    auto bends = seg.bends();
    EXPECT_TRUE(bends.front().equals(v, 1e-12));
    EXPECT_TRUE(bends.back().equals(u, 1e-12));
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < bends.size(); ++k) total += trop_dist(bends[k], bends[k + 1]);
    EXPECT_NEAR(total, trop_dist(u, v), 1e-9);
    EXPECT_NEAR(seg.length(), trop_dist(u, v), 1e-12);
    std::vector<TorusPoint> gens{u, v};
    for (const auto& b : bends) EXPECT_TRUE(in_tropical_hull(gens, b, 1e-9));
  }
}

TEST(Tropical, PointAtMatchesCombine) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    auto u = random_point(6, rng), v = random_point(6, rng);
    auto seg = tropical_segment(u, v);
    const double l = seg.lambdas().front() + frac(rng) * seg.length();
    std::vector<double> coeffs{l, 0.0};
    std::vector<TorusPoint> pts{u, v};
    EXPECT_TRUE(seg.point_at(l).equals(trop_combine(coeffs, pts), 1e-12));
  }
}

TEST(Tropical, TypeOfPoints) {
  std::vector<TorusPoint> gens{{0, 0, 0}, {0, 3, 1}};
  auto inside = point_type(gens, {0, 2, 0});
  EXPECT_TRUE(inside.all_nonempty());
  EXPECT_FALSE(in_tropical_hull(gens, {0, 1, 1}));
  EXPECT_TRUE(in_tropical_hull(gens, {5, 5, 5}));
}
