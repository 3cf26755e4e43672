#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "test_support.hpp"
#include "tropseg/errors.hpp"

using namespace tropseg;
using namespace tropseg::testing;

TEST(Trees, EquidistanceCheck) {
  EXPECT_TRUE(is_equidistant(tree(kFourLeafT1)));
  auto bad = parse_newick("((1:1,2:1):1,(3:1,4:1.5):1);");
  EXPECT_FALSE(is_equidistant(bad));
  try {
    require_equidistant(bad);
    FAIL();
  } catch (const NotEquidistantError& e) {
    EXPECT_EQ(e.leaf(), "4");
  }
}

TEST(Trees, TopologyOfFourLeaf) {
  auto topo = topology_of(tree(kFourLeafT1));
  EXPECT_EQ(topo.to_string(), "{1,2} {1,2,3} {1,2,3,4}");
  EXPECT_EQ(topo.to_newick(), "(((1,2),3),4)");
  EXPECT_TRUE(topo.is_binary());
}

TEST(Trees, ZeroLengthEdgesCollapse) {
  auto topo = topology_of(parse_newick("(((1:0.5,2:0.5):0,3:0.5):0.5,4:1);"));
  EXPECT_EQ(topo.to_string(), "{1,2,3} {1,2,3,4}");
  EXPECT_FALSE(topo.is_binary());
  EXPECT_TRUE(topo.is_contraction_of(topology_of(tree(kFourLeafT1))));
}

TEST(Trees, NonLaminarFamilyRejected) {
  EXPECT_THROW(Topology({"1", "2", "3"}, {{0, 1}, {1, 2}}), InvalidTreeError);
}

TEST(Trees, SpeciationTimes) {
  auto times = speciation_times(tree(kEightLeaf));
  std::vector<double> expect{0.2, 0.3, 0.4, 0.6, 0.7, 1.0, 1.5};
  ASSERT_EQ(times.size(), expect.size());
  for (std::size_t i = 0; i < times.size(); ++i) EXPECT_NEAR(times[i], expect[i], 1e-12);
}

TEST(Trees, CladeCriterion) {
  auto t = tree(kEightLeaf);
  EXPECT_TRUE(is_clade(t, {"2", "3", "4"}));
  EXPECT_TRUE(is_clade(t, {"5", "6", "7", "8"}));
  EXPECT_FALSE(is_clade(t, {"1", "2"}));
  EXPECT_FALSE(is_clade(t, {"4", "5"}));
}

TEST(Trees, RestrictToClade) {
  auto sub = restrict_to_clade(tree(kEightLeaf), {"2", "3", "4"});
  EXPECT_EQ(topology_of(sub).to_newick(), "(2,(3,4))");
  EXPECT_NEAR(sub.height(), 0.6, 1e-12);
}

TEST(Trees, NniNeighboursOfFourLeafCaterpillar) {
  auto t = tree(kFourLeafT1);
  auto nbrs = nni_neighbors(t);
  ASSERT_EQ(nbrs.size(), 4u);
  std::set<std::string> shapes;
  for (const auto& nb : nbrs) {
    EXPECT_TRUE(is_equidistant(nb));
    EXPECT_TRUE(topology_of(nb).is_binary());
    shapes.insert(topology_of(nb).to_newick());
  }
  EXPECT_EQ(shapes.size(), 4u);
  EXPECT_TRUE(shapes.count("((1,(2,3)),4)"));
  EXPECT_TRUE(one_nni_apart(t, tree(kFourLeafT2)));
}

// Oracle: two binary rooted topologies are one NNI apart exactly when their clade
// sets differ in a single clade.
TEST(Trees, OneNniAgreesWithCladeSymmetricDifference) {
  std::mt19937_64 rng(5);
  int positives = 0;
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 4 + i % 4;
    auto a = random_equidistant_tree(n, 1.0, rng);
    auto b = random_equidistant_tree(n, 1.0, rng);
    const auto ta = topology_of(a), tb = topology_of(b);
    const auto& ca = ta.clades();
    const auto& cb = tb.clades();
    std::size_t shared = 0;
    for (const auto& c : ca) shared += std::count(cb.begin(), cb.end(), c);
    const bool expect = ca.size() - shared == 1;
    positives += expect;
    EXPECT_EQ(one_nni_apart(a, b), expect) << write_newick(a) << " " << write_newick(b);
  }
  EXPECT_GT(positives, 10);
}

// Brute-force: a caterpillar on n leaves has 2(n - 2) distinct rooted NNI
// neighbours, all binary and distinct from it.
TEST(Trees, CaterpillarNeighbourCount) {
  for (std::size_t n = 3; n <= 9; ++n) {
    auto labels = numbered_labels(n);
    std::vector<Topology::Clade> clades;
    for (std::uint32_t k = 2; k <= n; ++k) {
      Topology::Clade c(k);
      std::iota(c.begin(), c.end(), 0u);
      clades.push_back(c);
    }
    auto cat = shape_tree(Topology(labels, clades));
    std::set<std::string> seen;
    for (const auto& nb : nni_neighbors(cat)) seen.insert(topology_of(nb).to_string());
    EXPECT_EQ(seen.size(), 2 * (n - 2)) << n;
    EXPECT_FALSE(seen.count(topology_of(cat).to_string()));
  }
}

TEST(Trees, OneNniRejectsMismatchedLeaves) {
  EXPECT_THROW(one_nni_apart(tree(kFourLeafT1), parse_newick("((1:1,2:1):1,(3:1,5:1):1);")), LeafSetMismatchError);
}

TEST(Trees, TopologyScaleInvariant) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    auto t = random_equidistant_tree(6, 1.0, rng);
    auto scaled = random_heights(topology_of(t), 1.0, rng);  // same shape, other heights
    EXPECT_EQ(topology_of(t), topology_of(scaled));
    auto nodes = height_nodes(t);
    for (auto& n : nodes) n.height *= 3.5;
    EXPECT_EQ(topology_of(RootedTree::from_heights(nodes, t.root())), topology_of(t));
  }
}
