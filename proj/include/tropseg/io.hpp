#pragma once

#include <string>
#include <string_view>

#include "tropseg/newick.hpp"
#include "tropseg/sim.hpp"
#include "tropseg/treespace.hpp"

namespace tropseg {

/// RFC 4180 quoting when the field holds a comma, quote or newline.
std::string csv_field(std::string_view field);

/// Header `index,lambda,<one column per leaf pair>,newick,topology`, then one row per bend.
std::string segment_csv(const TreeSegment& seg, int precision = kDefaultPrecision);
/// One Newick string per bend, in segment order.
std::string segment_newick(const TreeSegment& seg, int precision = kDefaultPrecision);
std::string segment_json(const TreeSegment& seg, int precision = kDefaultPrecision);

/// Deterministic for a given report; `wall_seconds` is written only when asked.
std::string report_json(const ExperimentReport& report, bool include_timing = false);
/// `pair_index,newick_t1,newick_t2,transition_index` rows.
std::string violations_csv(const ExperimentReport& report);

std::string format_number(double value, int precision = kDefaultPrecision);

}  // namespace tropseg
