#include "cli.hpp"

#include <fstream>
#include <optional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropseg/errors.hpp"
#include "tropseg/io.hpp"
#include "tropseg/newick.hpp"
#include "tropseg/sim.hpp"
#include "tropseg/treespace.hpp"
#include "tropseg/trees.hpp"

namespace tropseg::cli {

namespace {

class FileError : public Error {
 public:
  using Error::Error;
};

RootedTree load_tree(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_newick(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.offset());
  }
}

struct Transition {
  std::size_t from;
  std::size_t to;
  const char* flag;
};

// Changes between consecutive binary topologies. Polytomies in between are the
// boundary; one that is not a contraction of both sides is flagged degenerate.
std::vector<Transition> transitions(const std::vector<Topology>& seq, double tol) {
  std::vector<Transition> out;
  std::optional<std::size_t> last;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (!seq[k].is_binary()) continue;
    if (last) {
      bool boundary_ok = true;
      for (std::size_t m = *last + 1; m < k; ++m)
        boundary_ok = boundary_ok && seq[m].is_contraction_of(seq[*last]) && seq[m].is_contraction_of(seq[k]);
      const char* flag = !boundary_ok ? "degenerate"
                         : one_nni_apart(shape_tree(seq[*last]), shape_tree(seq[k]), tol) ? "yes"
                                                                                           : "no";
      out.push_back({*last, k, flag});
    }
    last = k;
  }
  return out;
}

bool crosses_star(const TreeSegment& seg, double tol) {
  const std::vector<TorusPoint> gens{seg.segment.u(), seg.segment.v()};
  return in_tropical_hull(gens, TorusPoint(std::vector<double>(seg.segment.u().dim(), 0.0)), tol);
}

struct Options {
  std::string t1;
  std::string t2;
  std::string format;
  double tol = kDefaultTol;
  int precision = kDefaultPrecision;
};

int cmd_segment(const Options& o, std::ostream& out) {
  TreeSegment seg = tree_segment(load_tree(o.t1), load_tree(o.t2), o.tol);
  if (o.format == "newick") {
    out << segment_newick(seg, o.precision);
  } else if (o.format == "json") {
    out << segment_json(seg, o.precision);
  } else {
    out << segment_csv(seg, o.precision);
  }
  return kOk;
}

int cmd_topologies(const Options& o, std::ostream& out) {
  TreeSegment seg = tree_segment(load_tree(o.t1), load_tree(o.t2), o.tol);
  auto seq = topology_sequence(seg);
  const bool star = crosses_star(seg, o.tol);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    auto& topo = j["topologies"] = nlohmann::ordered_json::array();
    for (const auto& t : seq) topo.push_back({{"clades", t.to_string()}, {"shape", t.to_newick()}});
    j["star_crossing"] = star;
    auto& tr = j["transitions"] = nlohmann::ordered_json::array();
    for (const auto& t : transitions(seq, o.tol)) tr.push_back({{"from", t.from}, {"to", t.to}, {"single_nni", t.flag}});
    out << j.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t k = 0; k < seq.size(); ++k)
    out << "topology\t" << k << "\t" << seq[k].to_string() << "\t" << seq[k].to_newick() << "\n";
  out << "star-crossing\t" << (star ? "yes" : "no") << "\n";
  for (const auto& t : transitions(seq, o.tol)) out << "transition\t" << t.from << "\t" << t.to << "\t" << t.flag << "\n";
  return kOk;
}

int cmd_dist(const Options& o, std::ostream& out) {
  RootedTree a = load_tree(o.t1);
  RootedTree b = load_tree(o.t2);
  if (a.leaf_labels() != b.leaf_labels()) throw LeafSetMismatchError("trees have different leaf sets");
  out << format_number(trop_dist(ultrametric_of(a, o.tol).point(), ultrametric_of(b, o.tol).point()), o.precision)
      << "\n";
  return kOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  RootedTree t = load_tree(o.t1);
  Ultrametric u = ultrametric_of(t, o.tol);
  if (auto bad = find_three_point_violation(u.entries(), o.tol))
    throw NotUltrametricError("three-point condition fails on (" + u.labels()[(*bad)[0]] + "," +
                                  u.labels()[(*bad)[1]] + "," + u.labels()[(*bad)[2]] + ")",
                              *bad);
  out << "ok\t" << u.leaf_count() << " leaves\theight " << format_number(u.height(), o.precision) << "\n";
  return kOk;
}

struct SimOptions {
  std::string kind;
  SampleConfig cfg;
  std::string pairs = "independent";
  std::string violations_path;
  bool timing = false;
};

int cmd_simulate(SimOptions s, std::ostream& out) {
  s.cfg.pairs = s.pairs == "one-nni" ? PairMode::kOneNni : PairMode::kIndependent;
  ExperimentReport r =
      s.kind == "star-prob" ? estimate_star_probability(s.cfg) : check_nni_conjecture(s.cfg);
  out << report_json(r, s.timing);
  if (!s.violations_path.empty()) {
    std::ofstream f(s.violations_path, std::ios::binary);
    if (!f) throw std::invalid_argument(s.violations_path + ": cannot write");
    f << violations_csv(r);
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tropical line segments between equidistant trees"};
  app.require_subcommand(1);
  Options opt;
  SimOptions sim;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", opt.tol, "absolute tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--precision", opt.precision, "significant digits in output")
        ->capture_default_str()
        ->check(CLI::Range(1, 17));
  };

  auto* segment = app.add_subcommand("segment", "bend points of the segment from T2 to T1");
  segment->add_option("t1", opt.t1, "Newick file of T1 (u end)")->required();
  segment->add_option("t2", opt.t2, "Newick file of T2 (v end)")->required();
  opt.format = "csv";
  segment->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "newick", "json"}))->capture_default_str();
  add_common(segment);

  auto* topologies = app.add_subcommand("topologies", "topology sequence along the segment");
  topologies->add_option("t1", opt.t1)->required();
  topologies->add_option("t2", opt.t2)->required();
  topologies->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  add_common(topologies);

  auto* dist = app.add_subcommand("dist", "tropical distance between the two ultrametrics");
  dist->add_option("t1", opt.t1)->required();
  dist->add_option("t2", opt.t2)->required();
  add_common(dist);

  auto* validate_cmd = app.add_subcommand("validate", "check that a tree is equidistant");
  validate_cmd->add_option("tree", opt.t1)->required();
  add_common(validate_cmd);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo experiments on random tree pairs");
  simulate->add_option("kind", sim.kind)->required()->check(CLI::IsMember({"star-prob", "nni-conjecture"}));
  simulate->add_option("--n", sim.cfg.n, "number of leaves")->capture_default_str();
  simulate->add_option("--samples", sim.cfg.samples, "number of pairs")->capture_default_str();
  simulate->add_option("--height", sim.cfg.height, "tree height")->capture_default_str();
  simulate->add_option("--seed", sim.cfg.seed)->capture_default_str();
  simulate->add_option("--pairs", sim.pairs, "independent or one-nni")
      ->check(CLI::IsMember({"independent", "one-nni"}))
      ->capture_default_str();
  simulate->add_option("--tol", sim.cfg.tol)->capture_default_str();
  simulate->add_option("--violations", sim.violations_path, "write the violation log (CSV) here");
  simulate->add_flag("--timing", sim.timing, "include wall-clock seconds in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*segment) return cmd_segment(opt, out);
    if (*topologies) return cmd_topologies(opt, out);
    if (*dist) return cmd_dist(opt, out);
    if (*validate_cmd) return cmd_validate(opt, out);
    if (*simulate) return cmd_simulate(sim, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const FileError& e) {
    err << e.what() << "\n";
    return kParseError;
  } catch (const NotEquidistantError& e) {
    err << e.what() << "\n";
    return kNotEquidistant;
  } catch (const NotUltrametricError& e) {
    err << e.what() << "\n";
    return kNotEquidistant;
  } catch (const LeafSetMismatchError& e) {
    err << e.what() << "\n";
    return kLeafMismatch;
  } catch (const InvalidTreeError& e) {
    err << "invalid tree: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace tropseg::cli
