#include <array>
#include <algorithm>
#include <random>

#include "doctest.h"
#include "oddred/errors.hpp"
#include "oddred/labels.hpp"
#include "oddred/solver.hpp"

using namespace oddred;

namespace {

RedBlueGraph even_cycle6(bool with_red) {
  std::vector<Edge> all{Edge(0, 3), Edge(1, 3), Edge(1, 4), Edge(2, 4), Edge(2, 5), Edge(0, 5)};
  std::vector<Edge> red;
  if (with_red) red.push_back(Edge(0, 3));
  return RedBlueGraph::with_red_edges(Graph(6, all, Bipartition{{0, 1, 2}, {3, 4, 5}}), red);
}

RedBlueGraph random_bipartite(std::mt19937_64& rng, int side, double p, double red_p) {
  std::bernoulli_distribution edge(p), red(red_p);
  std::vector<Edge> edges;
  std::vector<bool> colors;
  for (int u = 0; u < side; ++u) {
    for (int v = 0; v < side; ++v) {
      if (edge(rng)) {
        edges.emplace_back(u, side + v);
      }
    }
  }
  Bipartition bip;
  for (int i = 0; i < side; ++i) {
    bip.left.push_back(i);
    bip.right.push_back(side + i);
  }
  Graph g(2 * side, edges, bip);
  for (int e = 0; e < g.edge_count(); ++e) colors.push_back(red(rng));
  return RedBlueGraph(std::move(g), colors);
}

// Perfect matchings reachable as (matched right set, red parity), filled row by row.
bool oracle_has_odd_red(const RedBlueGraph& h) {
  const Graph& g = h.graph();
  const auto& bip = *g.bipartition();
  if (bip.left.size() != bip.right.size()) return false;
  const std::size_t side = bip.left.size();
  std::vector<int> right_pos(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < side; ++i) right_pos[static_cast<std::size_t>(bip.right[i])] = static_cast<int>(i);
  std::vector<std::array<bool, 2>> reach(std::size_t{1} << side, {false, false});
  reach[0][0] = true;
  for (std::size_t mask = 0; mask < reach.size(); ++mask) {
    std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row >= side) continue;
    for (int parity = 0; parity < 2; ++parity) {
      if (!reach[mask][static_cast<std::size_t>(parity)]) continue;
      int u = bip.left[row];
      for (int e : g.incident_edges(u)) {
        int col = right_pos[static_cast<std::size_t>(g.edge(e).other(u))];
        std::size_t bit = std::size_t{1} << col;
        if (mask & bit) continue;
        reach[mask | bit][static_cast<std::size_t>(parity ^ static_cast<int>(h.is_red(e)))] = true;
      }
    }
  }
  return reach.back()[1];
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("perfect matchings") {
    auto k3 = doubled_graph(complete_graph(3));
    auto m = find_perfect_matching(k3);
    REQUIRE(m);
    const Graph& g = k3.graph();
    for (int e : m->edges) CHECK(g.edge(e).v == g.edge(e).u + 3);

    Graph star(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)}, Bipartition{{0}, {1, 2, 3}});
    CHECK_FALSE(find_perfect_matching(RedBlueGraph(star, {false, false, false})));

    auto c6 = even_cycle6(false);
    auto mc = find_perfect_matching(c6);
    REQUIRE(mc);
    CHECK(mc->edges.size() == 3);
    CHECK(is_perfect_matching(c6.graph(), mc->edges));
  }

  TEST_CASE("odd-red alternating cycles") {
    auto k3 = doubled_graph(complete_graph(3));
    auto id = *find_perfect_matching(k3);
    auto c = find_odd_red_alternating_cycle(k3, id);
    REQUIRE(c);
    CHECK(c->length() == 6);
    auto edges = cycle_edges(k3.graph(), *c);
    CHECK(k3.red_count(edges) == 3);
    int matched = 0;
    for (int e : edges) matched += std::binary_search(id.edges.begin(), id.edges.end(), e);
    CHECK(matched == 3);
    auto swapped = swap_along(k3, id, *c);
    CHECK(is_perfect_matching(k3.graph(), swapped.edges));
    CHECK(k3.red_count(swapped.edges) == 3);

    auto blue = even_cycle6(false);
    CHECK_FALSE(find_odd_red_alternating_cycle(blue, *find_perfect_matching(blue)));

    Graph small(4, {Edge(0, 2), Edge(1, 3), Edge(0, 3)}, Bipartition{{0, 1}, {2, 3}});
    RedBlueGraph h = RedBlueGraph::with_red_edges(small, std::vector<Edge>{Edge(0, 3)});
    Matching pm{{small.require_edge(0, 2), small.require_edge(1, 3)}};
    std::sort(pm.edges.begin(), pm.edges.end());
    CHECK_FALSE(find_odd_red_alternating_cycle(h, pm));

    CHECK_THROWS_AS(find_odd_red_alternating_cycle(k3, Matching{{0}}), InvalidArgument);
  }

  TEST_CASE("solver outcomes") {
    auto ce = build_counterexample();
    auto r = solve_odd_red_pm(ce.graph);
    REQUIRE(r.found());
    const auto& m = std::get<Matching>(r.outcome);
    CHECK(is_perfect_matching(ce.graph.graph(), m.edges));
    CHECK(ce.graph.red_count(m.edges) % 2 == 1);

    auto blue = even_cycle6(false);
    CHECK(std::holds_alternative<NoOddRedMatching>(solve_odd_red_pm(blue).outcome));

    Graph star(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)}, Bipartition{{0}, {1, 2, 3}});
    CHECK(std::holds_alternative<NoPerfectMatching>(solve_odd_red_pm(RedBlueGraph(star, {true, true, true})).outcome));

    auto k3 = doubled_graph(complete_graph(3));
    CHECK(enumerate_odd_red_perfect_matchings(k3).size() == 2);
    auto rk = solve_odd_red_pm(k3);
    REQUIRE(rk.found());
    CHECK(k3.red_count(std::get<Matching>(rk.outcome).edges) == 3);
    CHECK(rk.iterations == 2);

    auto single = even_cycle6(true);
    auto rs = solve_odd_red_pm(single);
    REQUIRE(rs.found());
    CHECK(single.red_count(std::get<Matching>(rs.outcome).edges) == 1);
  }

  TEST_CASE("agrees with enumeration on random graphs") {
    std::mt19937_64 rng(2024);
    int found = 0;
    for (int trial = 0; trial < 300; ++trial) {
      int side = 1 + static_cast<int>(rng() % 6);
      double p = 0.3 + 0.1 * static_cast<double>(rng() % 6);
      auto h = random_bipartite(rng, side, p, 0.3);
      bool expected = !enumerate_odd_red_perfect_matchings(h).empty();
      CHECK(oracle_has_odd_red(h) == expected);
      auto r = solve_odd_red_pm(h);
      CHECK(r.found() == expected);
      CHECK(r.iterations <= 2);
      if (r.found()) {
        ++found;
        const auto& m = std::get<Matching>(r.outcome);
        CHECK(is_perfect_matching(h.graph(), m.edges));
        CHECK(h.red_count(m.edges) % 2 == 1);
      }
      auto pm = find_perfect_matching(h);
      if (pm && h.red_count(pm->edges) % 2 == 0 && expected) {
        auto c = find_odd_red_alternating_cycle(h, *pm);
        REQUIRE(c);
        auto swapped = swap_along(h, *pm, *c);
        CHECK(is_perfect_matching(h.graph(), swapped.edges));
        CHECK(h.red_count(swapped.edges) % 2 == 1);
      }
    }
    CHECK(found > 30);
  }

  TEST_CASE("larger random graphs against the subset oracle") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
      int side = 8 + static_cast<int>(rng() % 5);
      auto h = random_bipartite(rng, side, 0.25, 0.2);
      CHECK(solve_odd_red_pm(h).found() == oracle_has_odd_red(h));
    }
  }
}
