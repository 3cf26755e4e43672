#include "tropseg/treespace.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "tropseg/errors.hpp"
#include "tropseg/labels.hpp"

namespace tropseg {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

void require_same_leaves(const RootedTree& a, const RootedTree& b) {
  if (a.leaf_labels() != b.leaf_labels()) throw LeafSetMismatchError("trees have different leaf sets");
}

std::string triple_names(const std::vector<std::string>& labels, const std::array<std::size_t, 3>& t) {
  return "(" + labels[t[0]] + "," + labels[t[1]] + "," + labels[t[2]] + ")";
}

}  // namespace

Ultrametric::Ultrametric(std::vector<std::string> labels, std::vector<double> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  const std::size_t n = labels_.size();
  if (n < 2) throw std::invalid_argument("an ultrametric needs at least two leaves");
  if (entries_.size() != n * (n - 1) / 2)
    throw std::invalid_argument("expected " + std::to_string(n * (n - 1) / 2) + " entries for " + std::to_string(n) +
                                " leaves, got " + std::to_string(entries_.size()));
}

std::size_t Ultrametric::pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

double Ultrametric::at(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  return entries_.at(pair_index(i, j, labels_.size()));
}

double Ultrametric::height() const { return *std::max_element(entries_.begin(), entries_.end()) / 2.0; }

std::optional<std::size_t> leaves_for_dim(std::size_t size) {
  auto n = static_cast<std::size_t>(std::llround((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(size))) / 2.0));
  for (std::size_t c = n > 2 ? n - 1 : 2; c <= n + 1; ++c)
    if (c * (c - 1) / 2 == size) return c;
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> find_three_point_violation(std::span<const double> entries, double tol) {
  auto n = leaves_for_dim(entries.size());
  if (!n) throw std::invalid_argument("length " + std::to_string(entries.size()) + " is not n(n-1)/2");
  auto at = [&](std::size_t i, std::size_t j) { return entries[Ultrametric::pair_index(i, j, *n)]; };
  for (std::size_t i = 0; i < *n; ++i)
    for (std::size_t j = i + 1; j < *n; ++j)
      for (std::size_t k = j + 1; k < *n; ++k) {
        const double a = at(i, j);
        const double b = at(i, k);
        const double c = at(j, k);
        const double m = std::max({a, b, c});
        const int ties = (m - a <= tol) + (m - b <= tol) + (m - c <= tol);
        if (ties < 2) return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

bool is_ultrametric(std::span<const double> entries, double tol) {
  return !find_three_point_violation(entries, tol).has_value();
}

Ultrametric ultrametric_of(const RootedTree& tree, double tol) {
  require_equidistant(tree, tol);
  auto labels = tree.leaf_labels();
  const std::size_t n = labels.size();
  if (n < 2) throw std::invalid_argument("an ultrametric needs at least two leaves");
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx.emplace(labels[i], i);

  auto heights = tree.node_heights();
  std::vector<double> entries(n * (n - 1) / 2, 0.0);
  std::vector<std::vector<std::size_t>> below(tree.size());
  auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& nd = tree.node(*it);
    auto& mine = below[*it];
    if (nd.children.empty()) {
      mine.push_back(idx.at(nd.label));
      continue;
    }
    const double d = 2.0 * heights[*it];
    for (std::size_t c : nd.children) {
      for (std::size_t a : mine)
        for (std::size_t b : below[c]) entries[Ultrametric::pair_index(a, b, n)] = d;
      mine.insert(mine.end(), below[c].begin(), below[c].end());
      std::vector<std::size_t>().swap(below[c]);
    }
  }
  return Ultrametric(std::move(labels), std::move(entries));
}

RootedTree tree_of(const Ultrametric& u, double tol) {
  const std::size_t n = u.leaf_count();
  const auto entries = u.entries();
  for (double x : entries)
    if (!std::isfinite(x) || x < 0.0) throw std::invalid_argument("ultrametric entries must be finite and >= 0");
  if (auto bad = find_three_point_violation(entries, tol))
    throw NotUltrametricError("three-point condition fails on triple " + triple_names(u.labels(), *bad), *bad);

  std::vector<RootedTree::HeightNode> nodes;
  nodes.reserve(2 * n);
  for (const auto& l : u.labels()) nodes.push_back({l, {}, 0.0});

  struct Pair {
    double d;
    std::size_t i;
    std::size_t j;
  };
  std::vector<Pair> pairs;
  pairs.reserve(entries.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({u.at(i, j), i, j});
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.d < b.d; });

  DisjointSets sets(n);
  std::vector<std::size_t> cluster_node(n);
  std::iota(cluster_node.begin(), cluster_node.end(), std::size_t{0});

  // Distances within 2 * tol are one height level (height tolerance tol).
  std::size_t g = 0;
  while (g < pairs.size()) {
    std::size_t end = g;
    while (end < pairs.size() && pairs[end].d - pairs[g].d <= 2.0 * tol) ++end;
    const double height = pairs[end - 1].d / 2.0;

    std::vector<std::size_t> old_roots;
    for (std::size_t k = g; k < end; ++k) {
      std::size_t a = sets.find(pairs[k].i);
      std::size_t b = sets.find(pairs[k].j);
      if (a == b) continue;
      old_roots.push_back(a);
      old_roots.push_back(b);
      sets.unite(a, b);
    }
    std::sort(old_roots.begin(), old_roots.end());
    old_roots.erase(std::unique(old_roots.begin(), old_roots.end()), old_roots.end());
    std::map<std::size_t, std::vector<std::size_t>> merged;
    for (std::size_t r : old_roots) merged[sets.find(r)].push_back(cluster_node[r]);
    for (auto& [root, children] : merged) {
      nodes.push_back({{}, std::move(children), height});
      cluster_node[root] = nodes.size() - 1;
    }
    g = end;
  }
  return RootedTree::from_heights(nodes, cluster_node[sets.find(0)]);
}

RootedTree tree_at(const TreeSegment& seg, double lambda, double tol) {
  auto p = seg.segment.point_at(lambda);
  return tree_of(Ultrametric(seg.labels, std::vector<double>(p.coords().begin(), p.coords().end())), tol);
}

TreeSegment tree_segment(const RootedTree& t1, const RootedTree& t2, double tol) {
  require_equidistant(t1, tol);
  require_equidistant(t2, tol);
  require_same_leaves(t1, t2);
  Ultrametric u = ultrametric_of(t1, tol);
  Ultrametric v = ultrametric_of(t2, tol);

  TreeSegment seg;
  seg.labels = u.labels();
  seg.segment = tropical_segment(u.point(), v.point(), tol);
  const std::size_t m = seg.segment.bend_count();
  for (std::size_t i = 0; i < m; ++i) {
    auto p = seg.segment.bend(i);
    seg.bend_points.emplace_back(seg.labels, std::vector<double>(p.coords().begin(), p.coords().end()));
    seg.trees.push_back(tree_of(seg.bend_points.back(), tol));
    seg.bend_topologies.push_back(topology_of(seg.trees.back(), tol));
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    double mid = 0.5 * (seg.segment.bend_lambda(i) + seg.segment.bend_lambda(i + 1));
    seg.piece_topologies.push_back(topology_of(tree_at(seg, mid, tol), tol));
  }
  for (std::size_t pos = 0; pos + 1 < 2 * m; ++pos) {
    const Topology& t = pos % 2 == 0 ? seg.bend_topologies[pos / 2] : seg.piece_topologies[pos / 2];
    if (!seg.runs.empty() && seg.runs.back().topology == t) {
      seg.runs.back().last_position = pos;
    } else {
      seg.runs.push_back({t, pos, pos});
    }
  }
  return seg;
}

std::vector<Topology> topology_sequence(const TreeSegment& seg) {
  std::vector<Topology> out;
  for (const auto& run : seg.runs) out.push_back(run.topology);
  return out;
}

RootedTree star_tree(const std::vector<std::string>& labels, double height) {
  RootedTree t;
  std::size_t root = t.add_node();
  t.set_root(root);
  for (const auto& l : labels) t.add_child(root, t.add_node(l, height));
  return t;
}

std::vector<RootedTree> segment_to_star(const RootedTree& tree, double tol) {
  require_equidistant(tree, tol);
  Ultrametric u = ultrametric_of(tree, tol);
  std::vector<RootedTree> out;
  for (double t : speciation_times(tree, tol)) {
    std::vector<double> lifted(u.entries().begin(), u.entries().end());
    for (double& x : lifted) x = std::max(x, 2.0 * t);
    out.push_back(tree_of(Ultrametric(u.labels(), std::move(lifted)), tol));
  }
  return out;
}

bool star_on_segment(const RootedTree& t1, const RootedTree& t2, double tol) {
  require_equidistant(t1, tol);
  require_equidistant(t2, tol);
  require_same_leaves(t1, t2);
  const double h = t1.height();
  if (!approx_equal(h, t2.height(), tol))
    throw PreconditionError("trees have different heights: " + std::to_string(h) + " vs " +
                            std::to_string(t2.height()));
  Ultrametric u = ultrametric_of(t1, tol);
  Ultrametric v = ultrametric_of(t2, tol);
  for (std::size_t k = 0; k < u.dim(); ++k)
    if (h - std::max(u.entries()[k], v.entries()[k]) / 2.0 > tol) return false;
  return true;
}

bool check_clade_preservation(const RootedTree& t1, const RootedTree& t2, const std::vector<std::string>& leaves,
                              double tol) {
  require_same_leaves(t1, t2);
  if (leaves.size() < 2) throw PreconditionError("a clade needs at least two leaves");
  if (!is_clade(t1, leaves, tol) || !is_clade(t2, leaves, tol))
    throw PreconditionError("leaf set is not a clade of both trees");
  const Topology ref = topology_of(restrict_to_clade(t1, leaves, tol), tol);
  if (topology_of(restrict_to_clade(t2, leaves, tol), tol) != ref)
    throw PreconditionError("clade topologies differ between the two trees");

  auto preserved = [&](const RootedTree& t) {
    return is_clade(t, leaves, tol) && topology_of(restrict_to_clade(t, leaves, tol), tol) == ref;
  };
  TreeSegment seg = tree_segment(t1, t2, tol);
  for (const auto& t : seg.trees)
    if (!preserved(t)) return false;
  for (std::size_t i = 0; i + 1 < seg.trees.size(); ++i) {
    double mid = 0.5 * (seg.segment.bend_lambda(i) + seg.segment.bend_lambda(i + 1));
    if (!preserved(tree_at(seg, mid, tol))) return false;
  }
  return true;
}

NniTheoremReport nni_theorem_report(const RootedTree& t1, const RootedTree& t2, double tol) {
  require_same_leaves(t1, t2);
  const Topology a = topology_of(t1, tol);
  const Topology b = topology_of(t2, tol);
  if (a != b && !one_nni_apart(t1, t2, tol)) throw PreconditionError("trees are not one NNI move apart");

  NniTheoremReport report;
  report.sequence = topology_sequence(tree_segment(t1, t2, tol));
  for (const auto& t : report.sequence) {
    NniCase c = NniCase::kViolation;
    if (t == a) {
      c = NniCase::kEqualsT1;
    } else if (t == b) {
      c = NniCase::kEqualsT2;
    } else if (t.is_contraction_of(a)) {
      c = NniCase::kContractionOfT1;
    } else if (t.is_contraction_of(b)) {
      c = NniCase::kContractionOfT2;
    }
    if (c == NniCase::kViolation) report.holds = false;
    report.cases.push_back(c);
  }
  return report;
}

bool check_nni_theorem(const RootedTree& t1, const RootedTree& t2, double tol) {
  return nni_theorem_report(t1, t2, tol).holds;
}

const char* to_string(NniCase c) {
  switch (c) {
    case NniCase::kEqualsT1: return "equals-t1";
    case NniCase::kEqualsT2: return "equals-t2";
    case NniCase::kContractionOfT1: return "contraction-of-t1";
    case NniCase::kContractionOfT2: return "contraction-of-t2";
    case NniCase::kViolation: return "violation";
  }
  return "unknown";
}

}  // namespace tropseg
