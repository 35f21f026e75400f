#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oddred/rational.hpp"

namespace oddred {

// Undirected edge, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b);

  auto operator<=>(const Edge&) const = default;
  bool has(int x) const { return u == x || v == x; }
  int other(int x) const { return x == u ? v : u; }
};

struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;
};

// Simple undirected graph. Edges are kept in sorted order, and that order is the
// coordinate order of every edge-indexed vector.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges, std::optional<Bipartition> bipartition = std::nullopt);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }
  const std::optional<Bipartition>& bipartition() const { return bipartition_; }

  std::optional<int> edge_index(int u, int v) const;
  // Throws InvalidArgument if {u,v} is not an edge.
  int require_edge(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_index(u, v).has_value(); }

  std::span<const int> incident_edges(int v) const { return incidence_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(incident_edges(v).size()); }
  std::vector<int> neighbors(int v) const;

  // Side of v in the bipartition (0 = left, 1 = right); requires a bipartition.
  int side(int v) const;

  bool operator==(const Graph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::optional<Bipartition> bipartition_;
  std::vector<int> side_;
  std::vector<int> index_;  // vertex_count^2 lookup, -1 when absent
  std::vector<std::vector<int>> incidence_;
};

class RedBlueGraph {
 public:
  RedBlueGraph() = default;
  // Requires a bipartition on graph.
  RedBlueGraph(Graph graph, std::vector<bool> red);
  static RedBlueGraph with_red_edges(Graph graph, std::span<const Edge> red_edges);

  const Graph& graph() const { return graph_; }
  bool is_red(int edge_index) const { return red_.at(static_cast<std::size_t>(edge_index)) != 0; }
  std::vector<int> red_edges() const;
  int red_count(std::span<const int> edge_indices) const;

 private:
  Graph graph_;
  std::vector<char> red_;
};

// Perfect or partial matching as sorted edge indices of its host graph.
struct Matching {
  std::vector<int> edges;
  auto operator<=>(const Matching&) const = default;
};

struct Cycle {
  std::vector<int> vertices;
  // Two-vertex cycles arise when a doubled matching uses both copies of one edge.
  bool degenerate = false;

  int length() const { return static_cast<int>(vertices.size()); }
  bool is_odd() const { return !degenerate && vertices.size() % 2 == 1; }
  auto operator<=>(const Cycle&) const = default;
};

// Lexicographically smallest rotation/reflection of a closed vertex sequence.
std::vector<int> canonical_cycle(std::span<const int> vertices);

// Edge indices of a (non-degenerate) cycle in the host graph; throws if a pair is not an edge.
std::vector<int> cycle_edges(const Graph& g, const Cycle& c);

Graph complete_graph(int n);
Graph cycle_graph(int n);

// Which edges of the doubled graph are red.
enum class RedConvention {
  CrossEdges,     // {u+,v-} and {u-,v+} are red, identity edges blue
  IdentityEdges,  // {v+,v-} red, cross edges blue
};

// V+ = 0..n-1, V- = n..2n-1.
RedBlueGraph doubled_graph(const Graph& g, RedConvention convention = RedConvention::CrossEdges);
inline int plus_vertex(int v) { return v; }
inline int minus_vertex(int n, int v) { return n + v; }

// Visits every perfect matching of a bipartite graph as a list of edge indices
// ordered by left vertex. The visitor returns false to stop.
void for_each_perfect_matching(const Graph& g, const std::function<bool(std::span<const int>)>& visit);
std::vector<Matching> enumerate_perfect_matchings(const Graph& g);
std::vector<Matching> enumerate_odd_red_perfect_matchings(const RedBlueGraph& h);
std::uint64_t count_perfect_matchings(const Graph& g);

// All cycles (length >= 3) in canonical form, sorted by (length, vertices).
std::vector<Cycle> enumerate_cycles(const Graph& g);
// Throws InvalidArgument on an even length filter.
std::vector<Cycle> enumerate_odd_cycles(const Graph& g, std::optional<int> length_filter = std::nullopt);

enum class Orientation { Forward, Backward };

// Lifts an odd cycle of g to a perfect matching of doubled_graph(g).
Matching cycle_to_matching(const Graph& g, const RedBlueGraph& doubled, const Cycle& c,
                           Orientation orientation = Orientation::Forward);
// Projects a perfect matching of a doubled graph back to cycles of the base graph.
std::vector<Cycle> matching_to_cycle_cover(const Matching& m, const RedBlueGraph& doubled);

RationalVector incidence_vector(int edge_count, std::span<const int> edge_indices);
IntVector incidence_int(int edge_count, std::span<const int> edge_indices);

bool is_perfect_matching(const Graph& g, std::span<const int> edge_indices);
bool is_connected(const Graph& g);
bool is_cubic(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);
// Connected 3-regular simple graphs on n vertices, one per isomorphism class.
std::vector<Graph> connected_cubic_graphs(int n);

std::string edge_key(const Edge& e);

}  // namespace oddred
