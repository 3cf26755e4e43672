#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tropseg {

/// Rooted, edge-weighted tree with labelled leaves. Internal labels are not kept.
///
/// Nodes are addressed by index. Every non-root node carries the length of the
/// edge to its parent; the root may or may not carry one.
class RootedTree {
 public:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  struct Node {
    std::string label;  // leaves only
    std::size_t parent = kNone;
    std::vector<std::size_t> children;
    std::optional<double> length;
  };

  /// Node description for `from_heights`: height above the leaves instead of an edge length.
  struct HeightNode {
    std::string label;
    std::vector<std::size_t> children;
    double height = 0.0;
  };

  RootedTree() = default;

  /// Builds a tree whose edge lengths are parent height minus child height.
  static RootedTree from_heights(std::span<const HeightNode> nodes, std::size_t root);

  std::size_t add_node(std::string label = {}, std::optional<double> length = std::nullopt);
  void add_child(std::size_t parent, std::size_t child);
  void set_root(std::size_t node) { root_ = node; }
  void set_length(std::size_t node, std::optional<double> length) { nodes_.at(node).length = length; }

  std::size_t root() const { return root_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const Node& node(std::size_t i) const { return nodes_.at(i); }
  bool is_leaf(std::size_t i) const { return nodes_.at(i).children.empty(); }

  std::vector<std::size_t> preorder() const;
  std::vector<std::size_t> leaves() const;
  std::size_t leaf_count() const;
  /// Leaf labels in natural order.
  std::vector<std::string> leaf_labels() const;

  /// Path length from the root to every node (root-edge excluded).
  std::vector<double> depths() const;
  /// Largest root-to-leaf distance.
  double height() const;
  /// Per-node height above the deepest leaf: height() - depth.
  std::vector<double> node_heights() const;

  /// Throws InvalidTreeError on any broken invariant: one root, consistent parent
  /// links, internal nodes with >= 2 children, unique non-empty leaf labels,
  /// non-negative lengths present on every non-root node.
  void validate() const;

 private:
  std::vector<Node> nodes_;
  std::size_t root_ = kNone;
};

/// Structural equality up to child order: same leaf partition at every node and
/// edge lengths within `tol` (root lengths compared when both present).
bool equivalent(const RootedTree& a, const RootedTree& b, double tol);

}  // namespace tropseg
