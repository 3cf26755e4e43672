#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "tropseg/errors.hpp"
#include "tropseg/io.hpp"
#include "tropseg/newick.hpp"
#include "tropseg/sim.hpp"
#include "tropseg/treespace.hpp"
#include "tropseg/trees.hpp"
#include "tropseg/tropical.hpp"

namespace py = pybind11;
using namespace tropseg;

namespace {

std::vector<double> to_vector(const TorusPoint& p) { return {p.coords().begin(), p.coords().end()}; }

std::vector<std::vector<std::string>> clades_as_labels(const Topology& t) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : t.clades()) {
    std::vector<std::string> names;
    for (auto i : c) names.push_back(t.labels()[i]);
    out.push_back(std::move(names));
  }
  return out;
}

py::dict report_dict(const ExperimentReport& r) {
  py::dict d;
  d["kind"] = r.kind;
  d["n"] = r.config.n;
  d["height"] = r.config.height;
  d["samples"] = r.config.samples;
  d["seed"] = r.config.seed;
  d["model"] = r.config.model;
  d["hits"] = r.hits;
  d["rate"] = r.rate;
  d["transition_histogram"] = r.transition_histogram;
  d["transitions"] = r.transitions;
  d["single_nni"] = r.single_nni;
  d["multi_nni"] = r.multi_nni;
  d["single_nni_fraction"] = r.single_nni_fraction;
  d["violations"] = r.violations.size();
  d["wall_seconds"] = r.wall_seconds;
  return d;
}

SampleConfig make_config(std::size_t n, std::size_t samples, double height, std::uint64_t seed,
                         const std::string& pairs, double tol) {
  SampleConfig cfg;
  cfg.n = n;
  cfg.samples = samples;
  cfg.height = height;
  cfg.seed = seed;
  cfg.tol = tol;
  if (pairs == "one-nni") {
    cfg.pairs = PairMode::kOneNni;
  } else if (pairs != "independent") {
    throw std::invalid_argument("pairs must be 'independent' or 'one-nni'");
  }
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tropical line segments between equidistant phylogenetic trees";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<NotEquidistantError>(m, "NotEquidistantError", base.ptr());
  py::register_exception<NotUltrametricError>(m, "NotUltrametricError", base.ptr());
  py::register_exception<LeafSetMismatchError>(m, "LeafSetMismatchError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());

  m.attr("DEFAULT_TOL") = kDefaultTol;

  py::class_<RootedTree>(m, "Tree")
      .def_property_readonly("leaf_labels", &RootedTree::leaf_labels)
      .def_property_readonly("height", &RootedTree::height)
      .def("newick", [](const RootedTree& t, int precision) { return write_newick(t, precision); },
           py::arg("precision") = kDefaultPrecision)
      .def("__repr__", [](const RootedTree& t) { return "Tree('" + write_newick(t) + "')"; });

  py::class_<Topology>(m, "Topology")
      .def_property_readonly("labels", &Topology::labels)
      .def_property_readonly("clades", &clades_as_labels)
      .def_property_readonly("is_binary", &Topology::is_binary)
      .def("shape", &Topology::to_newick)
      .def("is_contraction_of", &Topology::is_contraction_of)
      .def("__str__", &Topology::to_string)
      .def("__repr__", [](const Topology& t) { return "Topology('" + t.to_newick() + "')"; })
      .def(py::self == py::self);

  py::class_<Ultrametric>(m, "Ultrametric")
      .def(py::init<std::vector<std::string>, std::vector<double>>(), py::arg("labels"), py::arg("entries"))
      .def_property_readonly("labels", &Ultrametric::labels)
      .def_property_readonly("entries",
                             [](const Ultrametric& u) { return std::vector<double>(u.entries().begin(), u.entries().end()); })
      .def_property_readonly("height", &Ultrametric::height);

  py::class_<TropicalSegment>(m, "TropicalSegment")
      .def_property_readonly("lambdas",
                             [](const TropicalSegment& s) { return std::vector<double>(s.lambdas().begin(), s.lambdas().end()); })
      .def_property_readonly("length", &TropicalSegment::length)
      .def("bends", [](const TropicalSegment& s) {
        std::vector<std::vector<double>> out;
        for (const auto& p : s.bends()) out.push_back(to_vector(p));
        return out;
      })
      .def("bend_lambdas", [](const TropicalSegment& s) {
        std::vector<double> out;
        for (std::size_t i = 0; i < s.bend_count(); ++i) out.push_back(s.bend_lambda(i));
        return out;
      })
      .def("point_at", [](const TropicalSegment& s, double l) { return to_vector(s.point_at(l)); });

  py::class_<TreeSegment>(m, "TreeSegment")
      .def_readonly("labels", &TreeSegment::labels)
      .def_readonly("segment", &TreeSegment::segment)
      .def_readonly("trees", &TreeSegment::trees)
      .def_readonly("bend_topologies", &TreeSegment::bend_topologies)
      .def_readonly("piece_topologies", &TreeSegment::piece_topologies)
      .def_property_readonly("bend_points",
                             [](const TreeSegment& s) {
                               std::vector<std::vector<double>> out;
                               for (const auto& u : s.bend_points) out.emplace_back(u.entries().begin(), u.entries().end());
                               return out;
                             })
      .def("csv", [](const TreeSegment& s, int precision) { return segment_csv(s, precision); },
           py::arg("precision") = kDefaultPrecision);

  // newick
  m.def("parse_newick", &parse_newick, py::arg("text"));
  m.def("write_newick", &write_newick, py::arg("tree"), py::arg("precision") = kDefaultPrecision);

  // trees
  m.def("is_equidistant", &is_equidistant, py::arg("tree"), py::arg("tol") = kDefaultTol);
  m.def("topology_of", &topology_of, py::arg("tree"), py::arg("tol") = kDefaultTol);
  m.def("speciation_times", &speciation_times, py::arg("tree"), py::arg("tol") = kDefaultTol);
  m.def("restrict_to_clade", &restrict_to_clade, py::arg("tree"), py::arg("leaves"), py::arg("tol") = kDefaultTol);
  m.def("is_clade", &is_clade, py::arg("tree"), py::arg("leaves"), py::arg("tol") = kDefaultTol);
  m.def("nni_neighbors", &nni_neighbors, py::arg("tree"), py::arg("tol") = kDefaultTol);
  m.def("one_nni_apart", &one_nni_apart, py::arg("a"), py::arg("b"), py::arg("tol") = kDefaultTol);

  // tropical
  m.def("trop_dist", [](std::vector<double> u, std::vector<double> v) {
    return trop_dist(TorusPoint(std::move(u)), TorusPoint(std::move(v)));
  });
  m.def("trop_combine", [](const std::vector<double>& coeffs, const std::vector<std::vector<double>>& points) {
    std::vector<TorusPoint> pts(points.begin(), points.end());
    return to_vector(trop_combine(coeffs, pts));
  });
  m.def("tropical_segment",
        [](std::vector<double> u, std::vector<double> v, double tol) {
          return tropical_segment(TorusPoint(std::move(u)), TorusPoint(std::move(v)), tol);
        },
        py::arg("u"), py::arg("v"), py::arg("tol") = kDefaultTol);
  m.def("point_type",
        [](const std::vector<std::vector<double>>& gens, std::vector<double> x, double tol) {
          std::vector<TorusPoint> g(gens.begin(), gens.end());
          return point_type(g, TorusPoint(std::move(x)), tol).sets;
        },
        py::arg("generators"), py::arg("x"), py::arg("tol") = kDefaultTol);
  m.def("in_tropical_hull",
        [](const std::vector<std::vector<double>>& gens, std::vector<double> x, double tol) {
          std::vector<TorusPoint> g(gens.begin(), gens.end());
          return in_tropical_hull(g, TorusPoint(std::move(x)), tol);
        },
        py::arg("generators"), py::arg("x"), py::arg("tol") = kDefaultTol);

  // treespace
  m.def("ultrametric_of", &ultrametric_of, py::arg("tree"), py::arg("tol") = kDefaultTol);
  m.def("tree_of", &tree_of, py::arg("u"), py::arg("tol") = kDefaultTol);
  m.def("is_ultrametric",
        [](const std::vector<double>& e, double tol) { return is_ultrametric(e, tol); },
        py::arg("entries"), py::arg("tol") = kDefaultTol);
  m.def("tree_segment", &tree_segment, py::arg("t1"), py::arg("t2"), py::arg("tol") = kDefaultTol);
  m.def("topology_sequence", &topology_sequence, py::arg("segment"));
  m.def("segment_to_star", &segment_to_star, py::arg("tree"), py::arg("tol") = kDefaultTol);
  m.def("star_on_segment", &star_on_segment, py::arg("t1"), py::arg("t2"), py::arg("tol") = kDefaultTol);
  m.def("check_clade_preservation", &check_clade_preservation, py::arg("t1"), py::arg("t2"), py::arg("leaves"),
        py::arg("tol") = kDefaultTol);
  m.def("check_nni_theorem", &check_nni_theorem, py::arg("t1"), py::arg("t2"), py::arg("tol") = kDefaultTol);

  // sim
  m.def("random_equidistant_tree",
        [](std::size_t n, double height, std::uint64_t seed, std::uint64_t index) {
          auto rng = sample_stream(seed, index);
          return random_equidistant_tree(n, height, rng);
        },
        py::arg("n"), py::arg("height") = 1.0, py::arg("seed") = 1, py::arg("index") = 0);
  m.def("estimate_star_probability",
        [](std::size_t n, std::size_t samples, double height, std::uint64_t seed, const std::string& pairs, double tol) {
          return report_dict(estimate_star_probability(make_config(n, samples, height, seed, pairs, tol)));
        },
        py::arg("n"), py::arg("samples"), py::arg("height") = 1.0, py::arg("seed") = 1,
        py::arg("pairs") = "independent", py::arg("tol") = kDefaultTol);
  m.def("check_nni_conjecture",
        [](std::size_t n, std::size_t samples, double height, std::uint64_t seed, const std::string& pairs, double tol) {
          return report_dict(check_nni_conjecture(make_config(n, samples, height, seed, pairs, tol)));
        },
        py::arg("n"), py::arg("samples"), py::arg("height") = 1.0, py::arg("seed") = 1,
        py::arg("pairs") = "independent", py::arg("tol") = kDefaultTol);
}
