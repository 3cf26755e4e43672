#pragma once

#include <string>
#include <string_view>

#include "tropseg/rooted_tree.hpp"

namespace tropseg {

inline constexpr int kDefaultPrecision = 10;

/// Parses one Newick tree terminated by ';'.
///
/// Branch lengths are mandatory on every node except the root. Internal node
/// labels are accepted and dropped; whitespace between tokens is ignored.
/// Throws ParseError carrying the byte offset of the first problem.
RootedTree parse_newick(std::string_view text);

/// Serializes with children ordered by the smallest leaf label (natural order) in
/// their clade. Lengths use `precision` significant digits, trailing zeros trimmed.
std::string write_newick(const RootedTree& tree, int precision = kDefaultPrecision);

}  // namespace tropseg
