#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "oddred/graph.hpp"
#include "oddred/polyhedra.hpp"
#include "oddred/transfer.hpp"

namespace oddred {

// 0/1 vertex map of a red-blue graph. Bit i of bits is the label of vertex i.
class Labeling {
 public:
  Labeling() = default;
  Labeling(int vertex_count, std::uint32_t bits);
  static Labeling from_bitstring(const std::string& bits);

  int vertex_count() const { return vertex_count_; }
  int at(int v) const { return static_cast<int>((bits_ >> v) & 1U); }
  std::uint32_t bits() const { return bits_; }
  int ones() const;
  // Vertex 0 first.
  std::string bitstring() const;

  bool operator==(const Labeling&) const = default;

 private:
  int vertex_count_ = 0;
  std::uint32_t bits_ = 0;
};

inline constexpr int kMaxLabelVertices = 24;

// Labelings whose number of ones has the parity of half the vertex count, in
// lexicographic order of their bitstrings.
std::vector<Labeling> enumerate_labelings(const RedBlueGraph& h);

EdgeSet label_edge_set(const RedBlueGraph& h, const Labeling& labeling);

struct InQ {};
struct NegativeEntry {
  int edge = -1;
};
struct DegreeViolation {
  int vertex = -1;
  Rational sum;
};
struct LabelViolation {
  Labeling labeling;
  Rational value;
};
using QMembership = std::variant<InQ, NegativeEntry, DegreeViolation, LabelViolation>;

// Exhaustive over labelings; the lexicographically first violated labeling wins.
// Throws LimitExceeded beyond kMaxLabelVertices vertices.
QMembership q_membership(const RedBlueGraph& h, std::span<const Rational> x, int threads = 1);

struct Counterexample {
  RedBlueGraph graph;
  RationalVector point;
};
Counterexample build_counterexample();

struct ReductionInstance {
  Graph source;
  int k = 0;
  RedBlueGraph doubled;  // identity edges red
  RationalVector point;
  Rational alpha;
};
// Throws InvalidArgument for a non-cubic source or k outside [0, |E|-2].
ReductionInstance reduce_maxcut_to_separation(const Graph& g, int k);

inline constexpr int kMaxCutVertices = 24;
int brute_force_max_cut(const Graph& g);

}  // namespace oddred
