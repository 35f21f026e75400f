#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oddred/cli.hpp"
#include "oddred/json_io.hpp"
#include "oddred/oddred.hpp"

namespace py = pybind11;
using namespace oddred;

namespace {

// Results cross the boundary as JSON text; rationals stay "p/q" strings.
std::string dump(const Json& j) { return j.dump(); }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(e.what());
  }
}

Json unwrap(const Json& j, const char* key) { return j.is_object() && j.contains(key) ? j.at(key) : j; }

std::string c_induced(int n, std::vector<int> cycle) {
  CInducedSpec spec(n, std::move(cycle));
  Graph kn = complete_graph(n);
  Json j{{"graph", graph_to_json(kn)}, {"constraint", constraint_to_json(build_c_induced(spec), kn)}};
  j["s"] = spec.s();
  j["t"] = spec.t();
  return dump(j);
}

std::string certify_dominant(int n, std::vector<int> cycle) {
  auto cert = certify_dominant_facet(CInducedSpec(n, std::move(cycle)));
  return dump(Json{{"polytope_dim", cert.polytope_dim}, {"face_dim", cert.face_dim}});
}

std::string certify_matching(int n, std::vector<int> cycle) {
  TransferContext ctx(complete_graph(n));
  OddRedMatchingSet vertices(ctx.doubled());
  auto r = analyze_matching_facet(vertices, canonical_transform(build_c_induced(CInducedSpec(n, std::move(cycle))), ctx));
  return dump(Json{{"certified", r.certified()},
                   {"valid", r.valid()},
                   {"polytope_dim", r.polytope_dim},
                   {"face_dim", r.face_dim},
                   {"vertices", r.generator_count},
                   {"tight", r.tight_count}});
}

std::string alternating(int n, std::vector<int> cycle, std::vector<int> sequence) {
  TransferContext ctx(complete_graph(n));
  auto m = to_matrix(canonical_transform(build_c_induced(CInducedSpec(n, std::move(cycle))), ctx), ctx);
  return to_string(alternating_sum(m, sequence));
}

std::string matrix(int n, std::vector<int> cycle, bool low_complexity) {
  CInducedSpec spec(n, std::move(cycle));
  TransferContext ctx(complete_graph(n));
  auto m = to_matrix(canonical_transform(build_c_induced(spec), ctx), ctx);
  if (low_complexity) m = apply_mu_lambda(m, build_low_complexity_lambda(spec));
  Json j = matrix_to_json(m);
  j["report"] = complexity_to_json(check_complexity_bounds(m, n));
  if (low_complexity) {
    auto p = shift_parameters(n);
    j["m1"] = p.m1;
    j["m2"] = p.m2;
    j["bound"] = to_string(distinct_count_bound(n, p));
  }
  return dump(j);
}

std::string counterexample() {
  auto ce = build_counterexample();
  return dump(Json{{"graph", graph_to_json(ce.graph)}, {"point", point_to_json(ce.point, ce.graph.graph())}});
}

std::string membership(const std::string& graph, const std::string& point, int threads) {
  auto h = red_blue_from_json(unwrap(parse(graph), "graph"));
  auto x = point_from_json(unwrap(parse(point), "point"), h.graph());
  return dump(membership_to_json(q_membership(h, x, threads), h.graph()));
}

std::string reduce(const std::string& graph, int k) {
  auto inst = reduce_maxcut_to_separation(graph_from_json(unwrap(parse(graph), "graph")), k);
  return dump(Json{{"graph", graph_to_json(inst.doubled)},
                   {"point", point_to_json(inst.point, inst.doubled.graph())},
                   {"alpha", to_string(inst.alpha)},
                   {"k", inst.k}});
}

int max_cut(const std::string& graph) { return brute_force_max_cut(graph_from_json(unwrap(parse(graph), "graph"))); }

std::string bimodularity(const std::string& graph, const std::string& scope) {
  auto h = red_blue_from_json(unwrap(parse(graph), "graph"));
  if (scope != "rank" && scope != "nonnegativity") throw InvalidArgument("scope must be 'rank' or 'nonnegativity'");
  auto s = build_bimodular_system(h);
  auto r = check_bimodularity(s, kDefaultColumnCap,
                              scope == "rank" ? MinorScope::SystemRank : MinorScope::EdgeNonnegativity);
  Json j = bimodularity_to_json(r);
  j["system"] = system_to_json(s);
  return dump(j);
}

std::string solve(const std::string& graph) {
  auto h = red_blue_from_json(unwrap(parse(graph), "graph"));
  auto r = solve_odd_red_pm(h);
  Json j{{"iterations", r.iterations}};
  if (auto* m = std::get_if<Matching>(&r.outcome)) {
    j["status"] = "found";
    j["edges"] = edge_list_to_json(h.graph(), m->edges);
    j["red_count"] = h.red_count(m->edges);
  } else if (std::holds_alternative<NoOddRedMatching>(r.outcome)) {
    j["status"] = "no_odd_red_matching";
  } else {
    j["status"] = "no_perfect_matching";
  }
  return dump(j);
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact odd-red perfect matching polytope computations";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);
  py::register_exception<CertificationError>(m, "CertificationError", PyExc_RuntimeError);

  m.def("c_induced", &c_induced, py::arg("n"), py::arg("cycle"));
  m.def("certify_dominant", &certify_dominant, py::arg("n"), py::arg("cycle"));
  m.def("certify_matching", &certify_matching, py::arg("n"), py::arg("cycle"));
  m.def("alternating_sum", &alternating, py::arg("n"), py::arg("cycle"), py::arg("sequence"));
  m.def("matrix", &matrix, py::arg("n"), py::arg("cycle"), py::arg("low_complexity") = false);
  m.def("f_value", &f_value, py::arg("j"), py::arg("m1"), py::arg("m2"));
  m.def("counterexample", &counterexample);
  m.def("q_membership", &membership, py::arg("graph"), py::arg("point"), py::arg("threads") = 1);
  m.def("reduce_maxcut", &reduce, py::arg("graph"), py::arg("k"));
  m.def("max_cut", &max_cut, py::arg("graph"));
  m.def("bimodularity", &bimodularity, py::arg("graph"), py::arg("scope") = "rank");
  m.def("solve", &solve, py::arg("graph"));
  m.def("run_cli", &cli, py::arg("args"));

  m.attr("__version__") = "0.1.0";
}
