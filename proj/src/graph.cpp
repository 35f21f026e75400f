#include "oddred/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "oddred/errors.hpp"

namespace oddred {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

std::string edge_key(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::optional<Bipartition> bipartition)
    : vertex_count_(vertex_count), edges_(std::move(edges)), bipartition_(std::move(bipartition)) {
  if (vertex_count_ < 0) throw InvalidArgument("negative vertex count");
  for (auto& e : edges_) {
    e = Edge(e.u, e.v);
    if (e.u < 0 || e.v >= vertex_count_) {
      throw InvalidArgument("edge " + edge_key(e) + " references a missing vertex");
    }
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw InvalidArgument("parallel edge " + edge_key(*dup));
  }

  const auto n = static_cast<std::size_t>(vertex_count_);
  index_.assign(n * n, -1);
  incidence_.assign(n, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    index_[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = static_cast<int>(i);
    index_[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = static_cast<int>(i);
    incidence_[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(i));
    incidence_[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(i));
  }

  if (bipartition_) {
    side_.assign(n, -1);
    auto mark = [&](std::vector<int>& part, int label) {
      std::sort(part.begin(), part.end());
      for (int v : part) {
        if (v < 0 || v >= vertex_count_) throw InvalidArgument("bipartition references a missing vertex");
        if (side_[static_cast<std::size_t>(v)] != -1) {
          throw InvalidArgument("vertex " + std::to_string(v) + " appears twice in the bipartition");
        }
        side_[static_cast<std::size_t>(v)] = label;
      }
    };
    mark(bipartition_->left, 0);
    mark(bipartition_->right, 1);
    for (std::size_t v = 0; v < n; ++v) {
      if (side_[v] == -1) throw InvalidArgument("bipartition misses vertex " + std::to_string(v));
    }
    for (const auto& e : edges_) {
      if (side_[static_cast<std::size_t>(e.u)] == side_[static_cast<std::size_t>(e.v)]) {
        throw InvalidArgument("edge " + edge_key(e) + " does not cross the bipartition");
      }
    }
  }
}

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) return std::nullopt;
  int idx = index_[static_cast<std::size_t>(u) * static_cast<std::size_t>(vertex_count_) + static_cast<std::size_t>(v)];
  if (idx < 0) return std::nullopt;
  return idx;
}

int Graph::require_edge(int u, int v) const {
  auto idx = edge_index(u, v);
  if (!idx) throw InvalidArgument("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  return *idx;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int e : incident_edges(v)) out.push_back(edges_[static_cast<std::size_t>(e)].other(v));
  std::sort(out.begin(), out.end());
  return out;
}

int Graph::side(int v) const {
  if (!bipartition_) throw InvalidArgument("graph has no bipartition");
  return side_.at(static_cast<std::size_t>(v));
}

RedBlueGraph::RedBlueGraph(Graph graph, std::vector<bool> red) : graph_(std::move(graph)) {
  if (!graph_.bipartition()) throw InvalidArgument("red-blue graph requires a bipartition");
  if (red.size() != static_cast<std::size_t>(graph_.edge_count())) {
    throw DimensionMismatch("red mask has " + std::to_string(red.size()) + " entries for " +
                            std::to_string(graph_.edge_count()) + " edges");
  }
  red_.assign(red.begin(), red.end());
}

RedBlueGraph RedBlueGraph::with_red_edges(Graph graph, std::span<const Edge> red_edges) {
  std::vector<bool> mask(static_cast<std::size_t>(graph.edge_count()), false);
  for (const auto& e : red_edges) {
    mask[static_cast<std::size_t>(graph.require_edge(e.u, e.v))] = true;
  }
  return RedBlueGraph(std::move(graph), std::move(mask));
}

std::vector<int> RedBlueGraph::red_edges() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < red_.size(); ++i) {
    if (red_[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

int RedBlueGraph::red_count(std::span<const int> edge_indices) const {
  int count = 0;
  for (int e : edge_indices) count += is_red(e) ? 1 : 0;
  return count;
}

std::vector<int> canonical_cycle(std::span<const int> vertices) {
  const std::size_t t = vertices.size();
  if (t == 0) return {};
  std::size_t start = static_cast<std::size_t>(std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
  std::vector<int> fwd(t), bwd(t);
  for (std::size_t i = 0; i < t; ++i) {
    fwd[i] = vertices[(start + i) % t];
    bwd[i] = vertices[(start + t - i) % t];
  }
  return std::min(fwd, bwd);
}

std::vector<int> cycle_edges(const Graph& g, const Cycle& c) {
  std::vector<int> out;
  const auto& vs = c.vertices;
  if (c.degenerate) {
    int e = g.require_edge(vs.at(0), vs.at(1));
    return {e, e};
  }
  out.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) out.push_back(g.require_edge(vs[i], vs[(i + 1) % vs.size()]));
  return out;
}

Graph complete_graph(int n) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle graph needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

RedBlueGraph doubled_graph(const Graph& g, RedConvention convention) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(plus_vertex(v), minus_vertex(n, v));
  for (const auto& e : g.edges()) {
    edges.emplace_back(plus_vertex(e.u), minus_vertex(n, e.v));
    edges.emplace_back(plus_vertex(e.v), minus_vertex(n, e.u));
  }
  Bipartition bip;
  for (int v = 0; v < n; ++v) {
    bip.left.push_back(plus_vertex(v));
    bip.right.push_back(minus_vertex(n, v));
  }
  Graph doubled(2 * n, std::move(edges), std::move(bip));
  std::vector<bool> red(static_cast<std::size_t>(doubled.edge_count()));
  for (int i = 0; i < doubled.edge_count(); ++i) {
    const auto& e = doubled.edge(i);
    bool identity = e.v - e.u == n;
    red[static_cast<std::size_t>(i)] = (convention == RedConvention::CrossEdges) ? !identity : identity;
  }
  return RedBlueGraph(std::move(doubled), std::move(red));
}

void for_each_perfect_matching(const Graph& g, const std::function<bool(std::span<const int>)>& visit) {
  if (!g.bipartition()) throw InvalidArgument("perfect matching enumeration needs a bipartite graph");
  const auto& left = g.bipartition()->left;
  const auto& right = g.bipartition()->right;
  if (left.size() != right.size()) return;
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> chosen;
  chosen.reserve(left.size());
  bool stop = false;

  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (stop) return;
    if (depth == left.size()) {
      if (!visit(chosen)) stop = true;
      return;
    }
    const int u = left[depth];
    for (int e : g.incident_edges(u)) {
      const int w = g.edge(e).other(u);
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      chosen.push_back(e);
      self(self, depth + 1);
      chosen.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
      if (stop) return;
    }
  };
  recurse(recurse, 0);
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g) {
  std::vector<Matching> out;
  for_each_perfect_matching(g, [&](std::span<const int> edges) {
    Matching m{{edges.begin(), edges.end()}};
    std::sort(m.edges.begin(), m.edges.end());
    out.push_back(std::move(m));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matching> enumerate_odd_red_perfect_matchings(const RedBlueGraph& h) {
  std::vector<Matching> out;
  for_each_perfect_matching(h.graph(), [&](std::span<const int> edges) {
    if (h.red_count(edges) % 2 == 1) {
      Matching m{{edges.begin(), edges.end()}};
      std::sort(m.edges.begin(), m.edges.end());
      out.push_back(std::move(m));
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_perfect_matchings(const Graph& g) {
  std::uint64_t count = 0;
  for_each_perfect_matching(g, [&](std::span<const int>) {
    ++count;
    return true;
  });
  return count;
}

namespace {

// Cycles whose smallest vertex is the start, visited once per direction and kept
// when the second vertex is smaller than the last.
std::vector<Cycle> cycles_by_dfs(const Graph& g, std::optional<int> max_length, bool odd_only) {
  const int n = g.vertex_count();
  std::vector<Cycle> out;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::vector<int> path;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);

  for (int start = 0; start < n; ++start) {
    path.assign(1, start);
    on_path[static_cast<std::size_t>(start)] = 1;
    auto extend = [&](auto&& self, int v) -> void {
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (w == start && path.size() >= 3 && path[1] < path.back()) {
          bool parity_ok = !odd_only || path.size() % 2 == 1;
          bool length_ok = !max_length || static_cast<int>(path.size()) == *max_length;
          if (parity_ok && length_ok) out.push_back(Cycle{path, false});
          continue;
        }
        if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
        if (max_length && static_cast<int>(path.size()) >= *max_length) continue;
        on_path[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        self(self, w);
        path.pop_back();
        on_path[static_cast<std::size_t>(w)] = 0;
      }
    };
    extend(extend, start);
    on_path[static_cast<std::size_t>(start)] = 0;
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return out;
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g) { return cycles_by_dfs(g, std::nullopt, false); }

std::vector<Cycle> enumerate_odd_cycles(const Graph& g, std::optional<int> length_filter) {
  if (length_filter) {
    if (*length_filter % 2 == 0) throw InvalidArgument("odd cycle length filter must be odd");
    if (*length_filter < 3) return {};
  }
  return cycles_by_dfs(g, length_filter, true);
}

Matching cycle_to_matching(const Graph& g, const RedBlueGraph& doubled, const Cycle& c, Orientation orientation) {
  if (!c.is_odd()) throw InvalidArgument("only odd cycles lift to odd-red perfect matchings");
  const int n = g.vertex_count();
  if (doubled.graph().vertex_count() != 2 * n) throw DimensionMismatch("doubled graph does not match base graph");
  const auto& vs = c.vertices;
  std::vector<char> on_cycle(static_cast<std::size_t>(n), 0);
  Matching m;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    int a = vs[i];
    int b = vs[(i + 1) % vs.size()];
    g.require_edge(a, b);
    on_cycle[static_cast<std::size_t>(a)] = 1;
    if (orientation == Orientation::Backward) std::swap(a, b);
    m.edges.push_back(doubled.graph().require_edge(plus_vertex(a), minus_vertex(n, b)));
  }
  for (int v = 0; v < n; ++v) {
    if (!on_cycle[static_cast<std::size_t>(v)]) {
      m.edges.push_back(doubled.graph().require_edge(plus_vertex(v), minus_vertex(n, v)));
    }
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

std::vector<Cycle> matching_to_cycle_cover(const Matching& m, const RedBlueGraph& doubled) {
  const Graph& h = doubled.graph();
  if (h.vertex_count() % 2 != 0) throw InvalidArgument("not a doubled graph");
  if (!is_perfect_matching(h, m.edges)) throw InvalidArgument("matching is not perfect");
  const int n = h.vertex_count() / 2;
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  for (int e : m.edges) {
    const auto& edge = h.edge(e);
    if (!(edge.u < n && edge.v >= n)) throw InvalidArgument("edge " + edge_key(edge) + " is not between V+ and V-");
    image[static_cast<std::size_t>(edge.u)] = edge.v - n;
  }
  std::vector<Cycle> out;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (seen[static_cast<std::size_t>(v)] || image[static_cast<std::size_t>(v)] == v) continue;
    std::vector<int> orbit;
    for (int w = v; !seen[static_cast<std::size_t>(w)]; w = image[static_cast<std::size_t>(w)]) {
      seen[static_cast<std::size_t>(w)] = 1;
      orbit.push_back(w);
    }
    Cycle c{canonical_cycle(orbit), orbit.size() == 2};
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RationalVector incidence_vector(int edge_count, std::span<const int> edge_indices) {
  RationalVector x(static_cast<std::size_t>(edge_count));
  for (int e : edge_indices) x.at(static_cast<std::size_t>(e)) += 1;
  return x;
}

IntVector incidence_int(int edge_count, std::span<const int> edge_indices) {
  IntVector x(static_cast<std::size_t>(edge_count), 0);
  for (int e : edge_indices) x.at(static_cast<std::size_t>(e)) += 1;
  return x;
}

bool is_perfect_matching(const Graph& g, std::span<const int> edge_indices) {
  std::vector<int> cover(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int e : edge_indices) {
    if (e < 0 || e >= g.edge_count()) return false;
    const auto& edge = g.edge(e);
    if (++cover[static_cast<std::size_t>(edge.u)] > 1 || ++cover[static_cast<std::size_t>(edge.v)] > 1) return false;
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : g.incident_edges(v)) {
      int w = g.edge(e).other(v);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_cubic(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

namespace {

// Per-vertex invariant: degree, triangles through the vertex, size of the second
// neighbourhood.
std::vector<std::int64_t> vertex_invariants(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::int64_t> inv(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    std::int64_t triangles = 0;
    std::vector<char> second(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) triangles += g.has_edge(nb[i], nb[j]) ? 1 : 0;
      for (int w : g.neighbors(nb[i])) second[static_cast<std::size_t>(w)] = 1;
    }
    second[static_cast<std::size_t>(v)] = 0;
    for (int w : nb) second[static_cast<std::size_t>(w)] = 0;
    std::int64_t reach2 = std::count(second.begin(), second.end(), 1);
    inv[static_cast<std::size_t>(v)] = (static_cast<std::int64_t>(nb.size()) * 1000 + triangles) * 1000 + reach2;
  }
  return inv;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto ia = vertex_invariants(a);
  auto ib = vertex_invariants(b);
  {
    auto sa = ia, sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto recurse = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || ia[static_cast<std::size_t>(v)] != ib[static_cast<std::size_t>(w)]) continue;
      bool consistent = true;
      for (int u = 0; u < v && consistent; ++u) {
        consistent = a.has_edge(u, v) == b.has_edge(map[static_cast<std::size_t>(u)], w);
      }
      if (!consistent) continue;
      map[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      if (self(self, v + 1)) return true;
      used[static_cast<std::size_t>(w)] = 0;
    }
    map[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  return recurse(recurse, 0);
}

std::vector<Graph> connected_cubic_graphs(int n) {
  if (n < 4 || n % 2 != 0) return {};
  // Graphs are built in breadth-first label order: vertex i is joined to already
  // discovered later vertices and then to fresh labels, so every connected cubic
  // graph is reached at least once.
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::map<std::vector<std::int64_t>, std::vector<Graph>> classes;
  std::vector<Graph> result;

  auto link = [&](int u, int v, bool on) {
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = on;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = on;
    deg[static_cast<std::size_t>(u)] += on ? 1 : -1;
    deg[static_cast<std::size_t>(v)] += on ? 1 : -1;
  };

  auto record = [&]() {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
      }
    }
    Graph g(n, std::move(edges));
    auto inv = vertex_invariants(g);
    std::sort(inv.begin(), inv.end());
    auto& bucket = classes[inv];
    for (const auto& other : bucket) {
      if (are_isomorphic(g, other)) return;
    }
    bucket.push_back(g);
    result.push_back(std::move(g));
  };

  auto process = [&](auto&& self, int i, int next_new) -> void {
    if (i == n) {
      record();
      return;
    }
    if (i >= next_new) return;  // vertex never discovered: disconnected
    const int need = 3 - deg[static_cast<std::size_t>(i)];
    if (need < 0) return;
    std::vector<int> candidates;
    for (int j = i + 1; j < next_new; ++j) {
      if (deg[static_cast<std::size_t>(j)] < 3 && !adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        candidates.push_back(j);
      }
    }
    std::vector<int> picked;
    auto choose = [&](auto&& again, std::size_t from) -> void {
      const int fresh = need - static_cast<int>(picked.size());
      if (next_new + fresh <= n) {
        for (int f = 0; f < fresh; ++f) link(i, next_new + f, true);
        self(self, i + 1, next_new + fresh);
        for (int f = 0; f < fresh; ++f) link(i, next_new + f, false);
      }
      if (static_cast<int>(picked.size()) == need) return;
      for (std::size_t c = from; c < candidates.size(); ++c) {
        picked.push_back(candidates[c]);
        link(i, candidates[c], true);
        again(again, c + 1);
        link(i, candidates[c], false);
        picked.pop_back();
      }
    };
    choose(choose, 0);
  };
  process(process, 0, 1);
  return result;
}

}  // namespace oddred
