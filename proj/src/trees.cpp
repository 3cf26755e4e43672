#include "tropseg/trees.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "tropseg/errors.hpp"
#include "tropseg/labels.hpp"
#include "tropseg/treespace.hpp"

namespace tropseg {

namespace {

bool clade_order(const Topology::Clade& a, const Topology::Clade& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

bool is_subset(const Topology::Clade& small, const Topology::Clade& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool disjoint(const Topology::Clade& a, const Topology::Clade& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    a[i] < b[j] ? ++i : ++j;
  }
  return true;
}

std::map<std::string, std::uint32_t> index_of(const std::vector<std::string>& labels) {
  std::map<std::string, std::uint32_t> idx;
  for (std::uint32_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], i);
  return idx;
}

std::vector<std::uint32_t> resolve_leaves(const std::vector<std::string>& all, const std::vector<std::string>& leaves) {
  if (leaves.empty()) throw PreconditionError("empty leaf set");
  auto idx = index_of(all);
  std::vector<std::uint32_t> out;
  for (const auto& l : leaves) {
    auto it = idx.find(l);
    if (it == idx.end()) throw LeafSetMismatchError("unknown leaf label '" + l + "'");
    out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw PreconditionError("repeated leaf label");
  return out;
}

void require_binary(const RootedTree& tree) {
  for (std::size_t i = 0; i < tree.size(); ++i)
    if (!tree.is_leaf(i) && tree.node(i).children.size() != 2)
      throw PreconditionError("NNI requires a binary tree; node " + std::to_string(i) + " has " +
                              std::to_string(tree.node(i).children.size()) + " children");
}

}  // namespace

Topology::Topology(std::vector<std::string> labels, std::vector<Clade> clades) : labels_(std::move(labels)) {
  const auto n = static_cast<std::uint32_t>(labels_.size());
  for (auto& c : clades) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (!c.empty() && c.back() >= n) throw InvalidTreeError("clade refers to an unknown leaf");
    if (c.size() >= 2) clades_.push_back(std::move(c));
  }
  if (n >= 2) {
    Clade full(n);
    for (std::uint32_t i = 0; i < n; ++i) full[i] = i;
    clades_.push_back(std::move(full));
  }
  std::sort(clades_.begin(), clades_.end(), clade_order);
  clades_.erase(std::unique(clades_.begin(), clades_.end()), clades_.end());
  for (std::size_t a = 0; a < clades_.size(); ++a)
    for (std::size_t b = a + 1; b < clades_.size(); ++b)
      if (!is_subset(clades_[a], clades_[b]) && !disjoint(clades_[a], clades_[b]))
        throw InvalidTreeError("clades " + std::to_string(a) + " and " + std::to_string(b) + " overlap");
}

bool Topology::contains(const Clade& clade) const {
  return std::binary_search(clades_.begin(), clades_.end(), clade, clade_order);
}

bool Topology::is_binary() const { return labels_.size() < 2 || clades_.size() == labels_.size() - 1; }

bool Topology::is_contraction_of(const Topology& finer) const {
  if (labels_ != finer.labels_) return false;
  return std::all_of(clades_.begin(), clades_.end(), [&](const Clade& c) { return finer.contains(c); });
}

std::string Topology::to_string() const {
  std::string out;
  for (const auto& c : clades_) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ',';
      out += labels_[c[k]];
    }
    out += '}';
  }
  return out;
}

std::string Topology::to_newick() const {
  const std::size_t n = labels_.size();
  if (n == 0) return ";";
  if (n == 1) return labels_[0] + ";";
  // Parent of each clade is the smallest strict superset; clades_ is sorted by size.
  const std::size_t m = clades_.size();
  std::vector<std::vector<std::size_t>> sub(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (is_subset(clades_[a], clades_[b])) {
        sub[b].push_back(a);
        break;
      }
    }
  }
  auto emit = [&](auto&& self, std::size_t c) -> std::string {
    // children: sub-clades and loose leaves, ordered by smallest leaf index
    std::vector<std::pair<std::uint32_t, std::string>> parts;
    std::vector<bool> in_sub(n, false);
    for (std::size_t s : sub[c]) {
      for (auto leaf : clades_[s]) in_sub[leaf] = true;
      parts.emplace_back(clades_[s].front(), self(self, s));
    }
    for (auto leaf : clades_[c])
      if (!in_sub[leaf]) parts.emplace_back(leaf, labels_[leaf]);
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) out += ',';
      out += parts[k].second;
    }
    return out + ")";
  };
  return emit(emit, m - 1);
}

bool is_equidistant(const RootedTree& tree, double tol) {
  auto depth = tree.depths();
  auto leaves = tree.leaves();
  if (leaves.empty()) return true;
  double lo = depth[leaves[0]];
  double hi = lo;
  for (std::size_t l : leaves) {
    lo = std::min(lo, depth[l]);
    hi = std::max(hi, depth[l]);
  }
  return hi - lo <= tol;
}

void require_equidistant(const RootedTree& tree, double tol) {
  tree.validate();
  if (is_equidistant(tree, tol)) return;
  auto depth = tree.depths();
  auto leaves = tree.leaves();
  // Deviant leaf: farthest from the median depth.
  std::vector<double> ds;
  for (std::size_t l : leaves) ds.push_back(depth[l]);
  std::nth_element(ds.begin(), ds.begin() + static_cast<std::ptrdiff_t>(ds.size() / 2), ds.end());
  double median = ds[ds.size() / 2];
  std::size_t worst = leaves[0];
  for (std::size_t l : leaves)
    if (std::abs(depth[l] - median) > std::abs(depth[worst] - median)) worst = l;
  throw NotEquidistantError("tree is not equidistant: leaf '" + tree.node(worst).label + "' has depth " +
                                std::to_string(depth[worst]) + ", expected " + std::to_string(median),
                            tree.node(worst).label);
}

Topology topology_of(const RootedTree& tree, double tol) {
  require_equidistant(tree, tol);
  auto labels = tree.leaf_labels();
  auto idx = index_of(labels);
  std::vector<Topology::Clade> below(tree.size());
  std::vector<Topology::Clade> clades;
  auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& nd = tree.node(*it);
    if (nd.children.empty()) {
      below[*it] = {idx.at(nd.label)};
      continue;
    }
    for (std::size_t c : nd.children) {
      auto& src = below[c];
      below[*it].insert(below[*it].end(), src.begin(), src.end());
      Topology::Clade().swap(src);
    }
    bool keep = *it == tree.root() || nd.length.value_or(0.0) > tol;
    if (keep) clades.push_back(below[*it]);
  }
  return Topology(std::move(labels), std::move(clades));
}

SpeciationTimes speciation_times(const RootedTree& tree, double tol) {
  require_equidistant(tree, tol);
  auto heights = tree.node_heights();
  std::vector<double> internal;
  for (std::size_t i = 0; i < tree.size(); ++i)
    if (!tree.is_leaf(i)) internal.push_back(heights[i]);
  std::sort(internal.begin(), internal.end());
  SpeciationTimes times;
  double group_start = 0.0;
  for (double h : internal) {
    if (times.empty() || h - group_start > tol) {
      times.push_back(h);
      group_start = h;
    } else {
      times.back() = h;
    }
  }
  return times;
}

RootedTree restrict_to_clade(const RootedTree& tree, const std::vector<std::string>& leaves, double tol) {
  require_equidistant(tree, tol);
  auto all = tree.leaf_labels();
  auto chosen = resolve_leaves(all, leaves);
  if (chosen.size() == 1) {
    RootedTree single;
    single.set_root(single.add_node(all[chosen[0]]));
    return single;
  }
  Ultrametric u = ultrametric_of(tree, tol);
  std::vector<std::string> sub_labels;
  for (auto i : chosen) sub_labels.push_back(all[i]);
  std::vector<double> sub;
  for (std::size_t a = 0; a < chosen.size(); ++a)
    for (std::size_t b = a + 1; b < chosen.size(); ++b) sub.push_back(u.at(chosen[a], chosen[b]));
  return tree_of(Ultrametric(std::move(sub_labels), std::move(sub)), tol);
}

bool is_clade(const RootedTree& tree, const std::vector<std::string>& leaves, double tol) {
  require_equidistant(tree, tol);
  auto all = tree.leaf_labels();
  auto chosen = resolve_leaves(all, leaves);
  if (chosen.size() < 2 || chosen.size() == all.size()) return true;
  Ultrametric u = ultrametric_of(tree, tol);
  std::vector<bool> inside(all.size(), false);
  for (auto i : chosen) inside[i] = true;
  for (std::size_t a = 0; a < chosen.size(); ++a)
    for (std::size_t b = a + 1; b < chosen.size(); ++b) {
      double within = u.at(chosen[a], chosen[b]) / 2.0;
      for (std::size_t k = 0; k < all.size(); ++k) {
        if (inside[k]) continue;
        if (!definitely_less(within, u.at(chosen[a], k) / 2.0, tol)) return false;
        if (!definitely_less(within, u.at(chosen[b], k) / 2.0, tol)) return false;
      }
    }
  return true;
}

std::vector<RootedTree> nni_neighbors(const RootedTree& tree, double tol) {
  require_equidistant(tree, tol);
  require_binary(tree);
  auto heights = tree.node_heights();
  std::vector<RootedTree::HeightNode> base(tree.size());
  for (std::size_t i = 0; i < tree.size(); ++i) base[i] = {tree.node(i).label, tree.node(i).children, heights[i]};

  std::vector<RootedTree> out;
  for (std::size_t c : tree.preorder()) {
    if (c == tree.root() || tree.is_leaf(c)) continue;
    const std::size_t p = tree.node(c).parent;
    const auto& pc = tree.node(p).children;
    const std::size_t sibling = pc[0] == c ? pc[1] : pc[0];
    const auto& cc = tree.node(c).children;
    // keep = the child staying under c, moved = the child swapped up to p
    for (auto [keep, moved] : {std::pair{cc[0], cc[1]}, std::pair{cc[1], cc[0]}}) {
      auto nodes = base;
      nodes[c].children = {keep, sibling};
      nodes[p].children = {c, moved};
      double tallest = std::max(nodes[keep].height, nodes[sibling].height);
      if (nodes[c].height - tallest <= tol) nodes[c].height = (tallest + nodes[p].height) / 2.0;
      out.push_back(RootedTree::from_heights(nodes, tree.root()));
    }
  }
  return out;
}

RootedTree shape_tree(const Topology& topology) {
  const auto& labels = topology.labels();
  const auto& clades = topology.clades();
  std::vector<RootedTree::HeightNode> nodes;
  for (const auto& l : labels) nodes.push_back({l, {}, 0.0});
  if (labels.size() < 2) {
    RootedTree t;
    if (!labels.empty()) t.set_root(t.add_node(labels[0]));
    return t;
  }
  // clades are sorted by size, so every clade's sub-clades already have nodes
  std::vector<std::size_t> top(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) top[i] = i;
  for (const auto& c : clades) {
    std::vector<std::size_t> children;
    for (auto leaf : c) children.push_back(top[leaf]);
    std::sort(children.begin(), children.end());
    children.erase(std::unique(children.begin(), children.end()), children.end());
    nodes.push_back({{}, std::move(children), static_cast<double>(c.size() - 1)});
    for (auto leaf : c) top[leaf] = nodes.size() - 1;
  }
  return RootedTree::from_heights(nodes, nodes.size() - 1);
}

bool one_nni_apart(const RootedTree& a, const RootedTree& b, double tol) {
  if (a.leaf_labels() != b.leaf_labels()) throw LeafSetMismatchError("trees have different leaf sets");
  require_binary(b);
  Topology target = topology_of(b, tol);
  for (const auto& nb : nni_neighbors(a, tol))
    if (topology_of(nb, tol) == target) return true;
  return false;
}

}  // namespace tropseg
