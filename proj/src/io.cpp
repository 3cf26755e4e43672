#include "tropseg/io.hpp"

#include <cstdio>

#include "json.hpp"

namespace tropseg {

namespace {

const char* pair_mode_name(PairMode m) { return m == PairMode::kOneNni ? "one-nni" : "independent"; }

}  // namespace

std::string format_number(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, value == 0.0 ? 0.0 : value);  // no "-0"
  return buf;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string segment_csv(const TreeSegment& seg, int precision) {
  std::string out = "index,lambda";
  const auto& labels = seg.labels;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) out += "," + csv_field("u_" + labels[i] + "_" + labels[j]);
  out += ",newick,topology\n";
  for (std::size_t b = 0; b < seg.bend_points.size(); ++b) {
    out += std::to_string(b) + "," + format_number(seg.segment.bend_lambda(b), precision);
    for (double x : seg.bend_points[b].entries()) out += "," + format_number(x, precision);
    out += "," + csv_field(write_newick(seg.trees[b], precision));
    out += "," + csv_field(seg.bend_topologies[b].to_string()) + "\n";
  }
  return out;
}

std::string segment_newick(const TreeSegment& seg, int precision) {
  std::string out;
  for (const auto& t : seg.trees) out += write_newick(t, precision) + "\n";
  return out;
}

std::string segment_json(const TreeSegment& seg, int precision) {
  nlohmann::ordered_json j;
  j["labels"] = seg.labels;
  j["length"] = seg.segment.length();
  auto& bends = j["bends"] = nlohmann::ordered_json::array();
  for (std::size_t b = 0; b < seg.bend_points.size(); ++b) {
    nlohmann::ordered_json row;
    row["index"] = b;
    row["lambda"] = seg.segment.bend_lambda(b);
    row["ultrametric"] = std::vector<double>(seg.bend_points[b].entries().begin(), seg.bend_points[b].entries().end());
    row["newick"] = write_newick(seg.trees[b], precision);
    row["topology"] = seg.bend_topologies[b].to_string();
    bends.push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

std::string report_json(const ExperimentReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["kind"] = r.kind;
  j["config"] = {{"n", r.config.n},          {"height", r.config.height}, {"samples", r.config.samples},
                 {"seed", r.config.seed},    {"model", r.config.model},   {"pairs", pair_mode_name(r.config.pairs)},
                 {"tol", r.config.tol}};
  j["hits"] = r.hits;
  j["rate"] = r.rate;
  auto& hist = j["transition_histogram"] = nlohmann::ordered_json::object();
  for (const auto& [changes, count] : r.transition_histogram) hist[std::to_string(changes)] = count;
  j["transitions"] = r.transitions;
  j["single_nni"] = r.single_nni;
  j["multi_nni"] = r.multi_nni;
  j["single_nni_fraction"] = r.single_nni_fraction;
  j["boundary_mismatches"] = r.boundary_mismatches;
  j["tolerance_artifacts"] = r.tolerance_artifacts;
  j["violations"] = r.violations.size();
  if (include_timing) j["wall_seconds"] = r.wall_seconds;
  return j.dump(2) + "\n";
}

std::string violations_csv(const ExperimentReport& r) {
  std::string out = "pair_index,newick_t1,newick_t2,transition_index\n";
  for (const auto& v : r.violations)
    out += std::to_string(v.pair_index) + "," + csv_field(v.newick_t1) + "," + csv_field(v.newick_t2) + "," +
           std::to_string(v.transition_index) + "\n";
  return out;
}

}  // namespace tropseg
