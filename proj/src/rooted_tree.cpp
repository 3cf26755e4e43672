#include "tropseg/rooted_tree.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "tropseg/errors.hpp"
#include "tropseg/labels.hpp"

namespace tropseg {

RootedTree RootedTree::from_heights(std::span<const HeightNode> nodes, std::size_t root) {
  RootedTree tree;
  tree.nodes_.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    tree.nodes_[i].label = nodes[i].label;
    tree.nodes_[i].children = nodes[i].children;
    for (std::size_t c : nodes[i].children) {
      tree.nodes_.at(c).parent = i;
      tree.nodes_[c].length = nodes[i].height - nodes[c].height;
    }
  }
  tree.root_ = root;
  return tree;
}

std::size_t RootedTree::add_node(std::string label, std::optional<double> length) {
  nodes_.push_back(Node{std::move(label), kNone, {}, length});
  return nodes_.size() - 1;
}

void RootedTree::add_child(std::size_t parent, std::size_t child) {
  nodes_.at(parent).children.push_back(child);
  nodes_.at(child).parent = parent;
}

std::vector<std::size_t> RootedTree::preorder() const {
  std::vector<std::size_t> order;
  if (root_ == kNone) return order;
  order.reserve(nodes_.size());
  std::vector<std::size_t> stack{root_};
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    order.push_back(i);
    const auto& ch = nodes_[i].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

std::vector<std::size_t> RootedTree::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t i : preorder())
    if (nodes_[i].children.empty()) out.push_back(i);
  return out;
}

std::size_t RootedTree::leaf_count() const { return leaves().size(); }

std::vector<std::string> RootedTree::leaf_labels() const {
  std::vector<std::string> labels;
  for (std::size_t i : leaves()) labels.push_back(nodes_[i].label);
  std::sort(labels.begin(), labels.end(), NaturalLess{});
  return labels;
}

std::vector<double> RootedTree::depths() const {
  std::vector<double> depth(nodes_.size(), 0.0);
  for (std::size_t i : preorder()) {
    if (i == root_) continue;
    depth[i] = depth[nodes_[i].parent] + nodes_[i].length.value_or(0.0);
  }
  return depth;
}

double RootedTree::height() const {
  auto depth = depths();
  double h = 0.0;
  for (std::size_t i : leaves()) h = std::max(h, depth[i]);
  return h;
}

std::vector<double> RootedTree::node_heights() const {
  auto depth = depths();
  double h = 0.0;
  for (std::size_t i : leaves()) h = std::max(h, depth[i]);
  for (double& d : depth) d = h - d;
  return depth;
}

void RootedTree::validate() const {
  if (nodes_.empty() || root_ >= nodes_.size()) throw InvalidTreeError("tree has no root");
  if (nodes_[root_].parent != kNone) throw InvalidTreeError("root has a parent");
  std::vector<bool> seen(nodes_.size(), false);
  std::set<std::string> labels;
  std::size_t reached = 0;
  for (std::size_t i : preorder()) {
    if (seen[i]) throw InvalidTreeError("node " + std::to_string(i) + " reachable twice");
    seen[i] = true;
    ++reached;
    const Node& nd = nodes_[i];
    for (std::size_t c : nd.children)
      if (c >= nodes_.size() || nodes_[c].parent != i)
        throw InvalidTreeError("inconsistent parent link at node " + std::to_string(i));
    if (i != root_ && !nd.length) throw InvalidTreeError("missing branch length on node " + std::to_string(i));
    if (nd.length && (!std::isfinite(*nd.length) || *nd.length < 0.0))
      throw InvalidTreeError("negative or non-finite branch length on node " + std::to_string(i));
    if (nd.children.empty()) {
      if (nd.label.empty()) throw InvalidTreeError("leaf without label");
      if (!labels.insert(nd.label).second) throw InvalidTreeError("duplicate leaf label '" + nd.label + "'");
    } else if (nd.children.size() < 2) {
      throw InvalidTreeError("internal node " + std::to_string(i) + " has a single child");
    }
  }
  if (reached != nodes_.size()) throw InvalidTreeError("tree has nodes unreachable from the root");
}

namespace {

struct CanonicalNode {
  std::string min_label;
  std::vector<std::size_t> sorted_children;
};

// Child lists sorted by smallest leaf label underneath.
std::vector<CanonicalNode> canonical_order(const RootedTree& t) {
  std::vector<CanonicalNode> out(t.size());
  auto order = t.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& nd = t.node(*it);
    auto& cn = out[*it];
    if (nd.children.empty()) {
      cn.min_label = nd.label;
      continue;
    }
    cn.sorted_children = nd.children;
    std::sort(cn.sorted_children.begin(), cn.sorted_children.end(), [&](std::size_t a, std::size_t b) {
      return natural_less(out[a].min_label, out[b].min_label);
    });
    cn.min_label = out[cn.sorted_children.front()].min_label;
  }
  return out;
}

}  // namespace

bool equivalent(const RootedTree& a, const RootedTree& b, double tol) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  auto ca = canonical_order(a);
  auto cb = canonical_order(b);
  std::vector<std::pair<std::size_t, std::size_t>> stack{{a.root(), b.root()}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    const auto& nx = a.node(x);
    const auto& ny = b.node(y);
    if (nx.children.size() != ny.children.size()) return false;
    if (nx.children.empty() && nx.label != ny.label) return false;
    if (x != a.root() || y != b.root()) {
      if (std::abs(nx.length.value_or(0.0) - ny.length.value_or(0.0)) > tol) return false;
    } else if (nx.length && ny.length && std::abs(*nx.length - *ny.length) > tol) {
      return false;
    }
    for (std::size_t k = 0; k < nx.children.size(); ++k)
      stack.emplace_back(ca[x].sorted_children[k], cb[y].sorted_children[k]);
  }
  return true;
}

}  // namespace tropseg
