#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "oddred/errors.hpp"
#include "oddred/graph.hpp"
#include "oddred/polyhedra.hpp"

namespace oddred {

// An (n-2)-cycle of K_n together with the two vertices it misses.
class CInducedSpec {
 public:
  // n odd >= 5, cycle of n-2 distinct vertices in [0,n). Throws InvalidArgument.
  CInducedSpec(int n, std::vector<int> cycle);

  int n() const { return n_; }
  int k() const { return (n_ - 3) / 2; }
  std::span<const int> cycle() const { return cycle_; }
  int cycle_vertex(int i) const;  // index taken modulo the cycle length
  int s() const { return s_; }
  int t() const { return t_; }
  // Index of v along the cycle, or nullopt for s and t.
  std::optional<int> position(int v) const;

 private:
  int n_;
  std::vector<int> cycle_;
  int s_ = -1;
  int t_ = -1;
  std::vector<int> position_;
};

// Length of the odd path along the cycle between the endpoints of e.
int ell(const CInducedSpec& spec, const Edge& e);

// Constraint over the edges of complete_graph(spec.n()).
Constraint build_c_induced(const CInducedSpec& spec);

// Odd cycles of a graph with their edge lists, shared across many validity checks.
class OddCycleIndex {
 public:
  explicit OddCycleIndex(const Graph& g);

  const Graph& graph() const { return graph_; }
  std::span<const Cycle> cycles() const { return cycles_; }
  std::span<const int> edges_of(std::size_t i) const { return edges_[i]; }
  std::size_t size() const { return cycles_.size(); }

 private:
  Graph graph_;
  std::vector<Cycle> cycles_;
  std::vector<std::vector<int>> edges_;
};

struct Valid {};
struct Violation {
  Cycle cycle;
  Rational value;
};
using ValidityResult = std::variant<Valid, Violation>;

// Checks the constraint against every odd cycle of K_n; the first violated cycle in
// enumeration order is returned.
ValidityResult verify_validity(const Constraint& c, int n);
ValidityResult verify_validity(const Constraint& c, const OddCycleIndex& cycles);

// Indices into cycles.cycles() of the cycles tight for c.
std::vector<std::size_t> tight_cycles(const Constraint& c, const OddCycleIndex& cycles);

std::vector<Cycle> tight_family(const CInducedSpec& spec);

class RankShortfall : public CertificationError {
 public:
  RankShortfall(int achieved, int required);
  int achieved() const { return achieved_; }
  int required() const { return required_; }

 private:
  int achieved_;
  int required_;
};

// Throws CertificationError if the constraint is invalid, RankShortfall if the tight
// odd cycles do not span the edge space.
FacetCertificate certify_dominant_facet(const CInducedSpec& spec);
FacetCertificate certify_dominant_facet(const CInducedSpec& spec, const OddCycleIndex& cycles);

}  // namespace oddred
