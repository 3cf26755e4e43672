#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tropseg/io.hpp"

using namespace tropseg;

TEST(Sim, RandomTreesAreBinaryEquidistant) {
  auto rng = sample_stream(7, 0);
  for (int i = 0; i < 200; ++i) {
    auto t = random_equidistant_tree(3 + i % 12, 2.5, rng);
    EXPECT_TRUE(is_equidistant(t));
    EXPECT_NEAR(t.height(), 2.5, 1e-12);
    EXPECT_TRUE(topology_of(t).is_binary());
    EXPECT_EQ(speciation_times(t).size(), t.leaf_count() - 1);
  }
}

TEST(Sim, StreamsDependOnlyOnSeedAndIndex) {
  SampleConfig cfg;
  auto a = sample_pair(cfg, 17);
  auto b = sample_pair(cfg, 17);
  EXPECT_EQ(write_newick(a.first), write_newick(b.first));
  EXPECT_EQ(write_newick(a.second), write_newick(b.second));
  EXPECT_NE(write_newick(sample_pair(cfg, 18).first), write_newick(a.first));
}

TEST(Sim, OneNniPairs) {
  SampleConfig cfg;
  cfg.n = 7;
  cfg.pairs = PairMode::kOneNni;
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto [a, b] = sample_pair(cfg, i);
    EXPECT_TRUE(one_nni_apart(a, b));
  }
}

TEST(Sim, ConfigValidation) {
  SampleConfig cfg;
  cfg.n = 2;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.samples = 0;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.model = "yule";
  EXPECT_THROW(validate(cfg), std::invalid_argument);
}

// Three leaves: the segment reaches the star unless both trees share a cherry.
// Under the sampler the cherry is uniform, so the rate is 2/3.
TEST(Sim, ThreeLeafStarRate) {
  SampleConfig cfg;
  cfg.n = 3;
  cfg.samples = 3000;
  auto r = estimate_star_probability(cfg);
  EXPECT_NEAR(r.rate, 2.0 / 3.0, 0.04);
}

TEST(Sim, ReportsAreDeterministic) {
  SampleConfig cfg;
  cfg.n = 5;
  cfg.samples = 100;
  EXPECT_EQ(report_json(check_nni_conjecture(cfg)), report_json(check_nni_conjecture(cfg)));
  EXPECT_EQ(report_json(estimate_star_probability(cfg)).find("wall_seconds"), std::string::npos);
}

TEST(Sim, ConjectureOneNniSubcaseAlwaysHolds) {
  SampleConfig cfg;
  cfg.n = 6;
  cfg.samples = 300;
  cfg.pairs = PairMode::kOneNni;
  auto r = check_nni_conjecture(cfg);
  EXPECT_EQ(r.hits, 0u);
  EXPECT_EQ(r.multi_nni, 0u);
  EXPECT_DOUBLE_EQ(r.single_nni_fraction, 1.0);
}
