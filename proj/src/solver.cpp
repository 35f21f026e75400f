#include "oddred/solver.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "oddred/errors.hpp"

namespace oddred {

namespace {

const Bipartition& require_bipartition(const Graph& g) {
  if (!g.bipartition()) throw InvalidArgument("the solver needs a bipartite graph");
  return *g.bipartition();
}

}  // namespace

std::optional<Matching> find_perfect_matching(const RedBlueGraph& h) {
  const Graph& g = h.graph();
  const auto& bip = require_bipartition(g);
  if (bip.left.size() != bip.right.size()) return std::nullopt;
  const int n = g.vertex_count();
  constexpr int kFree = -1;
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> mate(static_cast<std::size_t>(n), kFree);  // partner vertex
  std::vector<int> dist(static_cast<std::size_t>(n), kInf);

  auto bfs = [&]() {
    std::deque<int> queue;
    bool reachable_free = false;
    for (int u : bip.left) {
      if (mate[static_cast<std::size_t>(u)] == kFree) {
        dist[static_cast<std::size_t>(u)] = 0;
        queue.push_back(u);
      } else {
        dist[static_cast<std::size_t>(u)] = kInf;
      }
    }
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int e : g.incident_edges(u)) {
        int w = g.edge(e).other(u);
        int next = mate[static_cast<std::size_t>(w)];
        if (next == kFree) {
          reachable_free = true;
        } else if (dist[static_cast<std::size_t>(next)] == kInf) {
          dist[static_cast<std::size_t>(next)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(next);
        }
      }
    }
    return reachable_free;
  };

  auto dfs = [&](auto&& self, int u) -> bool {
    for (int e : g.incident_edges(u)) {
      int w = g.edge(e).other(u);
      int next = mate[static_cast<std::size_t>(w)];
      if (next == kFree ||
          (dist[static_cast<std::size_t>(next)] == dist[static_cast<std::size_t>(u)] + 1 && self(self, next))) {
        mate[static_cast<std::size_t>(u)] = w;
        mate[static_cast<std::size_t>(w)] = u;
        return true;
      }
    }
    dist[static_cast<std::size_t>(u)] = kInf;
    return false;
  };

  std::size_t size = 0;
  while (bfs()) {
    for (int u : bip.left) {
      if (mate[static_cast<std::size_t>(u)] == kFree && dfs(dfs, u)) ++size;
    }
  }
  if (size != bip.left.size()) return std::nullopt;
  Matching m;
  for (int u : bip.left) m.edges.push_back(g.require_edge(u, mate[static_cast<std::size_t>(u)]));
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

std::optional<Cycle> find_odd_red_alternating_cycle(const RedBlueGraph& h, const Matching& m) {
  const Graph& g = h.graph();
  const auto& bip = require_bipartition(g);
  if (!is_perfect_matching(g, m.edges)) throw InvalidArgument("alternating cycle search needs a perfect matching");
  const int n = g.vertex_count();
  std::vector<char> matched(static_cast<std::size_t>(g.edge_count()), 0);
  for (int e : m.edges) matched[static_cast<std::size_t>(e)] = 1;

  // Arcs: matched edges leave the left side, unmatched edges leave the right side.
  // State index = 2 * vertex + red parity of the walk so far.
  auto out_edges = [&](int v) {
    std::vector<int> out;
    const bool left = g.side(v) == 0;
    for (int e : g.incident_edges(v)) {
      if ((matched[static_cast<std::size_t>(e)] != 0) == left) out.push_back(e);
    }
    return out;
  };
  std::vector<std::vector<int>> arcs(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) arcs[static_cast<std::size_t>(v)] = out_edges(v);

  for (int start : bip.left) {
    const std::size_t states = static_cast<std::size_t>(2 * n);
    std::vector<int> parent_edge(states, -1);
    std::vector<int> parent_state(states, -1);
    std::vector<char> seen(states, 0);
    const int source = 2 * start;
    const int target = 2 * start + 1;
    std::deque<int> queue{source};
    seen[static_cast<std::size_t>(source)] = 1;
    while (!queue.empty() && !seen[static_cast<std::size_t>(target)]) {
      int state = queue.front();
      queue.pop_front();
      int v = state / 2;
      int parity = state % 2;
      for (int e : arcs[static_cast<std::size_t>(v)]) {
        int w = g.edge(e).other(v);
        int next = 2 * w + (parity ^ (h.is_red(e) ? 1 : 0));
        if (seen[static_cast<std::size_t>(next)]) continue;
        seen[static_cast<std::size_t>(next)] = 1;
        parent_edge[static_cast<std::size_t>(next)] = e;
        parent_state[static_cast<std::size_t>(next)] = state;
        queue.push_back(next);
      }
    }
    if (!seen[static_cast<std::size_t>(target)]) continue;

    // Closed walk from start back to start with odd red count.
    std::vector<int> walk_edges;
    std::vector<int> walk_vertices;
    for (int state = target; state != source; state = parent_state[static_cast<std::size_t>(state)]) {
      walk_edges.push_back(parent_edge[static_cast<std::size_t>(state)]);
      walk_vertices.push_back(state / 2);
    }
    walk_vertices.push_back(start);
    std::reverse(walk_edges.begin(), walk_edges.end());
    std::reverse(walk_vertices.begin(), walk_vertices.end());

    // Split the walk at repeated vertices; the red parities of the pieces add up to
    // the walk's odd parity, so one piece is an odd-red simple cycle.
    std::vector<int> stack_vertices{walk_vertices.front()};
    std::vector<int> stack_edges;
    std::vector<int> where(static_cast<std::size_t>(n), -1);
    where[static_cast<std::size_t>(walk_vertices.front())] = 0;
    for (std::size_t i = 0; i < walk_edges.size(); ++i) {
      const int w = walk_vertices[i + 1];
      stack_edges.push_back(walk_edges[i]);
      const int pos = where[static_cast<std::size_t>(w)];
      if (pos < 0) {
        where[static_cast<std::size_t>(w)] = static_cast<int>(stack_vertices.size());
        stack_vertices.push_back(w);
        continue;
      }
      std::vector<int> piece_vertices(stack_vertices.begin() + pos, stack_vertices.end());
      std::vector<int> piece_edges(stack_edges.begin() + pos, stack_edges.end());
      if (h.red_count(piece_edges) % 2 == 1) {
        // Rotate so the cycle starts on the left side with a matched edge.
        std::size_t shift = 0;
        while (g.side(piece_vertices[shift]) != 0) ++shift;
        std::rotate(piece_vertices.begin(), piece_vertices.begin() + static_cast<std::ptrdiff_t>(shift),
                    piece_vertices.end());
        return Cycle{std::move(piece_vertices), false};
      }
      for (auto it = stack_vertices.begin() + pos + 1; it != stack_vertices.end(); ++it) {
        where[static_cast<std::size_t>(*it)] = -1;
      }
      stack_vertices.resize(static_cast<std::size_t>(pos) + 1);
      stack_edges.resize(static_cast<std::size_t>(pos));
    }
    throw std::logic_error("odd closed walk without an odd simple cycle");
  }
  return std::nullopt;
}

Matching swap_along(const RedBlueGraph& h, const Matching& m, const Cycle& c) {
  const Graph& g = h.graph();
  std::vector<char> in(static_cast<std::size_t>(g.edge_count()), 0);
  for (int e : m.edges) in[static_cast<std::size_t>(e)] = 1;
  for (int e : cycle_edges(g, c)) in[static_cast<std::size_t>(e)] ^= 1;
  Matching out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (in[static_cast<std::size_t>(e)]) out.edges.push_back(e);
  }
  return out;
}

SolverResult solve_odd_red_pm(const RedBlueGraph& h) {
  SolverResult result;
  auto pm = find_perfect_matching(h);
  result.iterations = 1;
  if (!pm) {
    result.outcome = NoPerfectMatching{};
    return result;
  }
  Matching current = std::move(*pm);
  if (h.red_count(current.edges) % 2 == 0) {
    auto cycle = find_odd_red_alternating_cycle(h, current);
    if (!cycle) {
      result.outcome = NoOddRedMatching{};
      return result;
    }
    current = swap_along(h, current, *cycle);
    ++result.iterations;
  }
  if (!is_perfect_matching(h.graph(), current.edges) || h.red_count(current.edges) % 2 == 0) {
    throw std::logic_error("solver produced an invalid odd-red perfect matching");
  }
  result.outcome = std::move(current);
  return result;
}

}  // namespace oddred
