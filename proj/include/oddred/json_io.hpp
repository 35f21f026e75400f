#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "json.hpp"

#include "oddred/bimodular.hpp"
#include "oddred/complexity.hpp"
#include "oddred/graph.hpp"
#include "oddred/labels.hpp"
#include "oddred/polyhedra.hpp"
#include "oddred/solver.hpp"

namespace oddred {

using Json = nlohmann::ordered_json;

// Graph JSON: {"n", "bipartition": [[...],[...]] | null, "edges": [[u,v]...], "red": [[u,v]...]}.
Json graph_to_json(const Graph& g);
Json graph_to_json(const RedBlueGraph& h);
Graph graph_from_json(const Json& j);
// Requires a bipartition.
RedBlueGraph red_blue_from_json(const Json& j);

// Constraint JSON: {"coeffs": {"u-v": "p/q"}, "rhs": "p/q", "sense": ">=" | "="}.
// Zero coefficients are omitted.
Json constraint_to_json(const Constraint& c, const Graph& g);
Constraint constraint_from_json(const Json& j, const Graph& g);

// Point JSON: {"values": {"u-v": "p/q"}}; missing edges are zero.
Json point_to_json(std::span<const Rational> x, const Graph& g);
RationalVector point_from_json(const Json& j, const Graph& g);

Json rational_vector_to_json(std::span<const Rational> v);
Json edge_list_to_json(const Graph& g, std::span<const int> edge_indices);
Json cycle_to_json(const Cycle& c);
Json certificate_to_json(const FacetCertificate& cert, const Graph& g);
Json system_to_json(const BimodularSystem& s);
Json bimodularity_to_json(const BimodularityReport& r);
Json matrix_to_json(const CoefficientMatrix& m);
Json complexity_to_json(const ComplexityReport& r);
Json membership_to_json(const QMembership& m, const Graph& g);

// Rows V+ in vertex order, columns V-; absent cells are empty.
void write_matrix_csv(std::ostream& out, const CoefficientMatrix& m);

Rational rational_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace oddred
