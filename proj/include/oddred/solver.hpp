#pragma once

#include <optional>
#include <variant>

#include "oddred/graph.hpp"

namespace oddred {

struct NoPerfectMatching {};
struct NoOddRedMatching {};

// Maximum matching by Hopcroft-Karp; returns the matching only when it is perfect.
std::optional<Matching> find_perfect_matching(const RedBlueGraph& h);

// Alternating cycle (as a vertex sequence starting on the left side, first edge
// matched) with an odd number of red edges. Throws InvalidArgument if m is not perfect.
std::optional<Cycle> find_odd_red_alternating_cycle(const RedBlueGraph& h, const Matching& m);

// m with the edges of an alternating cycle swapped.
Matching swap_along(const RedBlueGraph& h, const Matching& m, const Cycle& c);

struct SolverResult {
  std::variant<Matching, NoPerfectMatching, NoOddRedMatching> outcome;
  int iterations = 0;

  bool found() const { return std::holds_alternative<Matching>(outcome); }
};

SolverResult solve_odd_red_pm(const RedBlueGraph& h);

}  // namespace oddred
