#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "oddred/graph.hpp"
#include "oddred/polyhedra.hpp"

namespace oddred {

struct RowTag {
  enum class Kind { Degree, Parity, Nonnegativity };
  Kind kind = Kind::Degree;
  int index = -1;  // vertex for degree rows, column for nonnegativity rows
};

// Degree rows per vertex and the parity row x(R) - 2y = 1. Columns are the edges of
// the host graph followed by y.
struct BimodularSystem {
  std::vector<IntVector> matrix;
  IntVector rhs;
  std::vector<RowTag> tags;
  int edge_count = 0;

  std::size_t rows() const { return matrix.size(); }
  std::size_t cols() const { return static_cast<std::size_t>(edge_count) + 1; }
};

BimodularSystem build_bimodular_system(const RedBlueGraph& h);

enum class MinorScope {
  // r x r minors of the system matrix, r its rank.
  SystemRank,
  // maximal minors of the system stacked with -I on the edge columns, the
  // form obtained by writing x >= 0 as rows.
  EdgeNonnegativity,
};

struct BimodularityReport {
  int order = 0;  // size of the minors examined
  std::size_t minors = 0;
  std::set<Integer> values;
  bool ok = false;
  // First minor outside {-2,0,2}.
  std::optional<std::vector<std::size_t>> bad_rows;
  std::optional<std::vector<std::size_t>> bad_cols;
  std::optional<Integer> bad_value;
};

inline constexpr int kDefaultColumnCap = 20;
inline constexpr std::size_t kMinorLimit = 50'000'000;

// Throws LimitExceeded when the system has more than column_cap columns or the minor
// count exceeds kMinorLimit.
BimodularityReport check_bimodularity(const BimodularSystem& s, int column_cap = kDefaultColumnCap,
                                      MinorScope scope = MinorScope::SystemRank);

// Appends y = (x(R) - 1) / 2.
RationalVector lift_point(std::span<const Rational> x, const RedBlueGraph& h);

// a + (c/2) chi^R >= b + c/2 on the edges.
Constraint translate_facet(std::span<const Rational> a, const Rational& c, const Rational& b,
                           const RedBlueGraph& h);

// Nonnegative integral solutions (x, y) of the system.
std::vector<IntVector> integral_solutions(const BimodularSystem& s, const RedBlueGraph& h);

}  // namespace oddred
