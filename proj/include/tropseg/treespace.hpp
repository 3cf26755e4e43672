#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropseg/rooted_tree.hpp"
#include "tropseg/tolerance.hpp"
#include "tropseg/trees.hpp"
#include "tropseg/tropical.hpp"

namespace tropseg {

/// Pairwise leaf distances u_ij (full path length, twice the LCA height) for
/// i < j in lexicographic pair order over the labels.
class Ultrametric {
 public:
  Ultrametric() = default;
  /// Throws std::invalid_argument if entries.size() != n(n-1)/2 or labels are fewer than two.
  Ultrametric(std::vector<std::string> labels, std::vector<double> entries);

  std::size_t leaf_count() const { return labels_.size(); }
  std::size_t dim() const { return entries_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::span<const double> entries() const { return entries_; }
  double at(std::size_t i, std::size_t j) const;
  /// Half the largest entry.
  double height() const;
  TorusPoint point() const { return TorusPoint(entries_); }

  static std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);

 private:
  std::vector<std::string> labels_;
  std::vector<double> entries_;
};

/// Number of leaves n with n(n-1)/2 == size, if any.
std::optional<std::size_t> leaves_for_dim(std::size_t size);

/// First triple (i < j < k) whose maximum is attained only once.
std::optional<std::array<std::size_t, 3>> find_three_point_violation(std::span<const double> entries,
                                                                     double tol = kDefaultTol);
/// Throws std::invalid_argument if the length is not triangular.
bool is_ultrametric(std::span<const double> entries, double tol = kDefaultTol);

/// Cophenetic distances over the leaves in natural label order.
Ultrametric ultrametric_of(const RootedTree& tree, double tol = kDefaultTol);

/// Equidistant tree realizing `u`, built by merging clusters at height u_ij / 2.
/// Heights within tol of each other merge into one node. Throws NotUltrametricError.
RootedTree tree_of(const Ultrametric& u, double tol = kDefaultTol);

/// A maximal stretch of the segment carrying one topology. Positions interleave
/// bend points and pieces: position 2i is bend i, 2i + 1 the open piece from bend i
/// to bend i + 1.
struct TopologyRun {
  Topology topology;
  std::size_t first_position = 0;
  std::size_t last_position = 0;
};

/// Tropical segment between two equidistant trees with the tree at every bend.
/// Bend 0 is `t2` (the v end) and the last bend is `t1` (the u end).
struct TreeSegment {
  std::vector<std::string> labels;
  TropicalSegment segment;
  std::vector<Ultrametric> bend_points;
  std::vector<RootedTree> trees;
  std::vector<Topology> bend_topologies;
  /// Topology at the midpoint of piece i, constant on the open piece.
  std::vector<Topology> piece_topologies;
  std::vector<TopologyRun> runs;
};

TreeSegment tree_segment(const RootedTree& t1, const RootedTree& t2, double tol = kDefaultTol);

/// Tree at parameter `lambda` of the segment (see TropicalSegment::point_at).
RootedTree tree_at(const TreeSegment& seg, double lambda, double tol = kDefaultTol);

/// Topologies met from the t2 end to the t1 end, consecutive repeats removed.
std::vector<Topology> topology_sequence(const TreeSegment& seg);

/// T^1 = tree, ..., T^k = star: T^i lifts every node below the i-th speciation
/// time up to it.
std::vector<RootedTree> segment_to_star(const RootedTree& tree, double tol = kDefaultTol);

/// True iff max(u, v) is the constant 2h. Throws PreconditionError on unequal heights.
bool star_on_segment(const RootedTree& t1, const RootedTree& t2, double tol = kDefaultTol);

/// Star tree of height `height` on `labels`.
RootedTree star_tree(const std::vector<std::string>& labels, double height);

/// Whether `leaves` stays a clade with the same restricted topology at every bend
/// and every piece of tree_segment(t1, t2). Throws PreconditionError unless
/// `leaves` is a clade of both inputs with equal restricted topology.
bool check_clade_preservation(const RootedTree& t1, const RootedTree& t2, const std::vector<std::string>& leaves,
                              double tol = kDefaultTol);

enum class NniCase {
  kEqualsT1,
  kEqualsT2,
  kContractionOfT1,
  kContractionOfT2,
  kViolation,
};

struct NniTheoremReport {
  bool holds = true;
  std::vector<Topology> sequence;
  std::vector<NniCase> cases;
};

/// Classifies every topology on the segment against the two endpoint topologies.
/// Inputs must be one NNI apart or share a topology (PreconditionError otherwise).
NniTheoremReport nni_theorem_report(const RootedTree& t1, const RootedTree& t2, double tol = kDefaultTol);
bool check_nni_theorem(const RootedTree& t1, const RootedTree& t2, double tol = kDefaultTol);

const char* to_string(NniCase c);

}  // namespace tropseg
