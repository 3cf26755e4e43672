#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tropseg/rooted_tree.hpp"
#include "tropseg/tolerance.hpp"

namespace tropseg {

inline constexpr const char* kCoalescentModel = "coalescent-uniform-heights";

enum class PairMode {
  kIndependent,  // two independent draws
  kOneNni,       // a draw and a uniformly chosen NNI neighbour of it
};

struct SampleConfig {
  std::size_t n = 5;
  double height = 1.0;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::string model = kCoalescentModel;
  PairMode pairs = PairMode::kIndependent;
  double tol = kDefaultTol;
};

/// Throws std::invalid_argument unless n >= 3, height > 0, samples >= 1 and the
/// model is known.
void validate(const SampleConfig& cfg);

struct Violation {
  std::size_t pair_index = 0;
  std::string newick_t1;
  std::string newick_t2;
  std::size_t transition_index = 0;
};

struct ExperimentReport {
  std::string kind;
  SampleConfig config;
  std::size_t hits = 0;
  double rate = 0.0;
  /// number of topology changes along a segment -> number of pairs
  std::map<std::size_t, std::size_t> transition_histogram;
  std::size_t transitions = 0;         // between consecutive binary runs
  std::size_t single_nni = 0;
  std::size_t multi_nni = 0;
  std::size_t boundary_mismatches = 0; // degenerate topology not a contraction of both neighbours
  std::size_t tolerance_artifacts = 0; // violations that vanished at tol / 100
  double single_nni_fraction = 1.0;    // single_nni / transitions, 1 when there are none
  std::vector<Violation> violations;
  double wall_seconds = 0.0;
};

/// Independent generator for sample `index`; the stream depends only on (seed, index).
std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index);

/// Binary equidistant tree of height exactly `height` on leaves "1".."n": coalescent
/// ranked topology (uniform pair merged at each step), n - 2 internal heights
/// i.i.d. uniform(0, height) sorted, root pinned at `height`.
RootedTree random_equidistant_tree(std::size_t n, double height, std::mt19937_64& rng);

/// Draws the pair for sample `index` of `cfg`.
std::pair<RootedTree, RootedTree> sample_pair(const SampleConfig& cfg, std::uint64_t index);

/// Counts pairs whose segment passes through the star tree.
ExperimentReport estimate_star_probability(const SampleConfig& cfg);

/// Tests every change between consecutive binary topologies along each segment
/// for being a single NNI.
ExperimentReport check_nni_conjecture(const SampleConfig& cfg);

}  // namespace tropseg
