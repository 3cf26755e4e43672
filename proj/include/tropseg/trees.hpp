#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropseg/rooted_tree.hpp"
#include "tropseg/tolerance.hpp"

namespace tropseg {

/// Rooted tree shape as a laminar clade family over a labelled leaf set.
///
/// Clades hold indices into `labels()` (natural order), are sorted internally, and
/// the family is ordered by (size, lexicographic). The full leaf set is always
/// present once there are two or more leaves; singletons never are.
class Topology {
 public:
  using Clade = std::vector<std::uint32_t>;

  Topology() = default;
  /// Normalizes and validates: throws InvalidTreeError if the family is not laminar
  /// or mentions an index outside `labels`.
  Topology(std::vector<std::string> labels, std::vector<Clade> clades);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Clade>& clades() const { return clades_; }
  std::size_t leaf_count() const { return labels_.size(); }

  bool contains(const Clade& clade) const;
  /// Fully resolved: n - 1 clades.
  bool is_binary() const;
  /// Every clade of *this is a clade of `finer` (same leaf set).
  bool is_contraction_of(const Topology& finer) const;

  /// Canonical clade-set string, e.g. "{1,2} {1,2,3} {1,2,3,4}".
  std::string to_string() const;
  /// Shape without lengths, e.g. "(((1,2),3),4)".
  std::string to_newick() const;

  friend bool operator==(const Topology&, const Topology&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Clade> clades_;
};

/// Distinct internal-node heights, ascending; the last is the tree height.
using SpeciationTimes = std::vector<double>;

bool is_equidistant(const RootedTree& tree, double tol = kDefaultTol);
/// Throws NotEquidistantError naming the leaf whose depth deviates most.
void require_equidistant(const RootedTree& tree, double tol = kDefaultTol);

/// Clade set after collapsing internal edges of length <= tol.
Topology topology_of(const RootedTree& tree, double tol = kDefaultTol);

SpeciationTimes speciation_times(const RootedTree& tree, double tol = kDefaultTol);

/// Equidistant tree induced by the pairwise distances among `leaves`.
RootedTree restrict_to_clade(const RootedTree& tree, const std::vector<std::string>& leaves,
                             double tol = kDefaultTol);

/// For all i, j in `leaves` and k outside: LCA(i, j) lies strictly (by more than tol)
/// below LCA(i, k).
bool is_clade(const RootedTree& tree, const std::vector<std::string>& leaves, double tol = kDefaultTol);

/// All trees one rooted NNI away. For every internal non-root node c with children
/// X1, X3 and sibling X2 this yields ((X1,X2),X3) and ((X3,X2),X1). Node heights are
/// kept; if the moved subtree now reaches above c, c is re-seated halfway between
/// its tallest child and its parent.
std::vector<RootedTree> nni_neighbors(const RootedTree& tree, double tol = kDefaultTol);

/// Equidistant tree with the given shape; each clade's node sits at height
/// (clade size - 1), so every internal edge has positive length.
RootedTree shape_tree(const Topology& topology);

/// topology_of(b) is the topology of some member of nni_neighbors(a).
bool one_nni_apart(const RootedTree& a, const RootedTree& b, double tol = kDefaultTol);

}  // namespace tropseg
