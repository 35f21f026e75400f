#include "oddred/json_io.hpp"

#include <fstream>
#include <ostream>

#include "oddred/errors.hpp"

namespace oddred {

namespace {

std::vector<Edge> edges_from_json(const Json& j, const char* field) {
  std::vector<Edge> out;
  if (!j.is_array()) throw FormatError(std::string("'") + field + "' must be an array of vertex pairs");
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      throw FormatError(std::string("'") + field + "' entries must be [u, v] integer pairs");
    }
    out.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return out;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw FormatError(std::string("missing field '") + name + "'");
  return *it;
}

int parse_vertex(std::string_view text, const std::string& key) {
  if (text.empty()) throw FormatError("bad edge key '" + key + "'");
  int value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw FormatError("bad edge key '" + key + "'");
    value = value * 10 + (ch - '0');
  }
  return value;
}

int edge_from_key(const std::string& key, const Graph& g) {
  auto dash = key.find('-');
  if (dash == std::string::npos) throw FormatError("edge key '" + key + "' is not of the form u-v");
  int u = parse_vertex(std::string_view(key).substr(0, dash), key);
  int v = parse_vertex(std::string_view(key).substr(dash + 1), key);
  auto idx = g.edge_index(u, v);
  if (!idx) throw FormatError("edge key '" + key + "' is not an edge of the graph");
  return *idx;
}

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw FormatError("rationals must be strings of the form \"p/q\"");
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  if (g.bipartition()) {
    j["bipartition"] = Json::array({g.bipartition()->left, g.bipartition()->right});
  } else {
    j["bipartition"] = nullptr;
  }
  j["edges"] = Json::array();
  for (const auto& e : g.edges()) j["edges"].push_back(edge_json(e));
  j["red"] = Json::array();
  return j;
}

Json graph_to_json(const RedBlueGraph& h) {
  Json j = graph_to_json(h.graph());
  for (int e : h.red_edges()) j["red"].push_back(edge_json(h.graph().edge(e)));
  return j;
}

Graph graph_from_json(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<long>() < 0) throw FormatError("'n' must be a nonnegative integer");
  std::optional<Bipartition> bip;
  if (auto it = j.find("bipartition"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_array() || !(*it)[1].is_array()) {
      throw FormatError("'bipartition' must be [[...], [...]] or null");
    }
    bip = Bipartition{};
    try {
      bip->left = (*it)[0].get<std::vector<int>>();
      bip->right = (*it)[1].get<std::vector<int>>();
    } catch (const nlohmann::json::exception&) {
      throw FormatError("'bipartition' entries must be integers");
    }
  }
  try {
    return Graph(n.get<int>(), edges_from_json(field(j, "edges"), "edges"), std::move(bip));
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("invalid graph: ") + e.what());
  }
}

RedBlueGraph red_blue_from_json(const Json& j) {
  Graph g = graph_from_json(j);
  if (!g.bipartition()) throw FormatError("a red-blue graph needs a bipartition");
  std::vector<Edge> red;
  if (auto it = j.find("red"); it != j.end()) red = edges_from_json(*it, "red");
  try {
    return RedBlueGraph::with_red_edges(std::move(g), red);
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("invalid red edge set: ") + e.what());
  }
}

Json constraint_to_json(const Constraint& c, const Graph& g) {
  if (c.dimension() != static_cast<std::size_t>(g.edge_count())) {
    throw DimensionMismatch("constraint does not match the graph");
  }
  Json j;
  j["coeffs"] = Json::object();
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& a = c.coefficients[static_cast<std::size_t>(e)];
    if (sgn(a) != 0) j["coeffs"][edge_key(g.edge(e))] = to_string(a);
  }
  j["rhs"] = to_string(c.rhs);
  j["sense"] = c.sense == Sense::GreaterEqual ? ">=" : "=";
  return j;
}

Constraint constraint_from_json(const Json& j, const Graph& g) {
  Constraint c;
  c.coefficients.assign(static_cast<std::size_t>(g.edge_count()), Rational(0));
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_object()) throw FormatError("'coeffs' must be an object keyed by \"u-v\"");
  for (const auto& [key, value] : coeffs.items()) {
    c.coefficients[static_cast<std::size_t>(edge_from_key(key, g))] = rational_from_json(value);
  }
  c.rhs = rational_from_json(field(j, "rhs"));
  std::string sense = ">=";
  if (auto it = j.find("sense"); it != j.end()) {
    if (!it->is_string()) throw FormatError("'sense' must be \">=\" or \"=\"");
    sense = it->get<std::string>();
  }
  if (sense == ">=") {
    c.sense = Sense::GreaterEqual;
  } else if (sense == "=") {
    c.sense = Sense::Equal;
  } else {
    throw FormatError("'sense' must be \">=\" or \"=\"");
  }
  return c;
}

Json point_to_json(std::span<const Rational> x, const Graph& g) {
  if (x.size() != static_cast<std::size_t>(g.edge_count())) throw DimensionMismatch("point does not match the graph");
  Json values = Json::object();
  for (int e = 0; e < g.edge_count(); ++e) {
    if (sgn(x[static_cast<std::size_t>(e)]) != 0) values[edge_key(g.edge(e))] = to_string(x[static_cast<std::size_t>(e)]);
  }
  return Json{{"values", values}};
}

RationalVector point_from_json(const Json& j, const Graph& g) {
  RationalVector x(static_cast<std::size_t>(g.edge_count()));
  const Json& values = field(j, "values");
  if (!values.is_object()) throw FormatError("'values' must be an object keyed by \"u-v\"");
  for (const auto& [key, value] : values.items()) {
    x[static_cast<std::size_t>(edge_from_key(key, g))] = rational_from_json(value);
  }
  return x;
}

Json rational_vector_to_json(std::span<const Rational> v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json edge_list_to_json(const Graph& g, std::span<const int> edge_indices) {
  Json j = Json::array();
  for (int e : edge_indices) j.push_back(edge_json(g.edge(e)));
  return j;
}

Json cycle_to_json(const Cycle& c) {
  Json j{{"vertices", c.vertices}, {"length", c.length()}};
  if (c.degenerate) j["degenerate"] = true;
  return j;
}

Json certificate_to_json(const FacetCertificate& cert, const Graph& g) {
  Json j;
  j["constraint"] = constraint_to_json(cert.constraint, g);
  j["polytope_dim"] = cert.polytope_dim;
  j["face_dim"] = cert.face_dim;
  j["tight_generators"] = Json::array();
  for (const auto& gen : cert.tight_generators) j["tight_generators"].push_back(point_to_json(gen, g)["values"]);
  return j;
}

Json system_to_json(const BimodularSystem& s) {
  Json j;
  j["rows"] = s.rows();
  j["cols"] = s.cols();
  j["matrix"] = s.matrix;
  j["rhs"] = s.rhs;
  j["row_tags"] = Json::array();
  for (const auto& tag : s.tags) {
    switch (tag.kind) {
      case RowTag::Kind::Degree:
        j["row_tags"].push_back({{"kind", "degree"}, {"vertex", tag.index}});
        break;
      case RowTag::Kind::Parity:
        j["row_tags"].push_back({{"kind", "parity"}});
        break;
      case RowTag::Kind::Nonnegativity:
        j["row_tags"].push_back({{"kind", "nonnegativity"}, {"column", tag.index}});
        break;
    }
  }
  return j;
}

Json bimodularity_to_json(const BimodularityReport& r) {
  Json j;
  j["order"] = r.order;
  j["minors"] = r.minors;
  j["values"] = Json::array();
  for (const auto& v : r.values) j["values"].push_back(v.get_str());
  j["ok"] = r.ok;
  if (r.bad_value) {
    j["violation"] = {{"rows", *r.bad_rows}, {"cols", *r.bad_cols}, {"determinant", r.bad_value->get_str()}};
  }
  return j;
}

Json matrix_to_json(const CoefficientMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.n(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.n(); ++c) {
      if (m.present(r, c)) {
        row.push_back(to_string(m.at(r, c)));
      } else {
        row.push_back(nullptr);
      }
    }
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.n()}, {"rows", rows}};
}

Json complexity_to_json(const ComplexityReport& r) {
  return Json{{"max_abs", r.max_abs.get_str()},
              {"distinct", r.distinct},
              {"distinct_off_diagonal", r.distinct_off_diagonal},
              {"max_abs_ok", r.max_abs_ok},
              {"distinct_ok", r.distinct_ok}};
}

Json membership_to_json(const QMembership& m, const Graph& g) {
  return std::visit(
      [&](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, InQ>) {
          return Json{{"status", "inside"}};
        } else if constexpr (std::is_same_v<T, NegativeEntry>) {
          return Json{{"status", "negative_entry"}, {"edge", edge_key(g.edge(v.edge))}};
        } else if constexpr (std::is_same_v<T, DegreeViolation>) {
          return Json{{"status", "degree_violation"}, {"vertex", v.vertex}, {"sum", to_string(v.sum)}};
        } else {
          return Json{{"status", "label_violation"},
                      {"labeling", v.labeling.bitstring()},
                      {"value", to_string(v.value)}};
        }
      },
      m);
}

void write_matrix_csv(std::ostream& out, const CoefficientMatrix& m) {
  out << "row";
  for (int c = 0; c < m.n(); ++c) out << "," << c << "-";
  out << "\n";
  for (int r = 0; r < m.n(); ++r) {
    out << r << "+";
    for (int c = 0; c < m.n(); ++c) {
      out << ",";
      if (!m.present(r, c)) continue;
      const auto& v = m.at(r, c);
      out << (is_integral(v) ? v.get_num().get_str() : to_string(v));
    }
    out << "\n";
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace oddred
