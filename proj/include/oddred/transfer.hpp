#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "oddred/errors.hpp"
#include "oddred/graph.hpp"
#include "oddred/odd_cycle_facets.hpp"
#include "oddred/polyhedra.hpp"

namespace oddred {

// Sorted edge indices.
using EdgeSet = std::vector<int>;

class TransferContext {
 public:
  explicit TransferContext(Graph base);

  const Graph& base() const { return base_; }
  const RedBlueGraph& doubled() const { return doubled_; }
  // Index in the doubled graph of {u+,v-} for base edge e = {u,v}, u < v.
  int forward(int base_edge) const { return forward_.at(static_cast<std::size_t>(base_edge)); }
  // Index of {u-,v+}.
  int backward(int base_edge) const { return backward_.at(static_cast<std::size_t>(base_edge)); }
  int identity(int v) const { return identity_.at(static_cast<std::size_t>(v)); }

 private:
  Graph base_;
  RedBlueGraph doubled_;
  std::vector<int> forward_;
  std::vector<int> backward_;
  std::vector<int> identity_;
};

// Throws InvalidArgument on a negative coefficient or an equality constraint.
Constraint canonical_transform(const Constraint& c, const TransferContext& ctx);

// Midpoint of the two lifts of an odd cycle: 1/2 on both copies of each cycle edge,
// 1 on identity edges of vertices off the cycle.
RationalVector half_point(const TransferContext& ctx, const Cycle& c);

EdgeSet expressible_closure(const Graph& g, const Constraint& c, std::span<const int> seed);
EdgeSet expressible_closure(const OddCycleIndex& cycles, const Constraint& c, std::span<const int> seed);

// Throws InvalidArgument when |seed| > k.
bool check_k_expressing(const Graph& g, const Constraint& c, int k, std::span<const int> seed);

// An odd cycle with strict slack, showing the face is not all of the polytope.
std::optional<Cycle> find_slack_cycle(const OddCycleIndex& cycles, const Constraint& c);

struct TransferHypotheses {
  EdgeSet seed;
  EdgeSet closure;
  bool expressing = false;  // closure == E
  std::optional<Cycle> slack_cycle;
};
TransferHypotheses check_transfer_hypotheses(const OddCycleIndex& cycles, const Constraint& c,
                                             std::span<const int> seed);

// All odd-red perfect matchings of a red-blue graph with their 0/1 vectors and the
// affine dimension of their hull.
class OddRedMatchingSet {
 public:
  explicit OddRedMatchingSet(const RedBlueGraph& h);

  std::span<const Matching> matchings() const { return matchings_; }
  std::span<const IntVector> vectors() const { return vectors_; }
  int polytope_dim() const { return polytope_dim_; }
  int edge_count() const { return edge_count_; }
  std::size_t size() const { return matchings_.size(); }

 private:
  int edge_count_ = 0;
  std::vector<Matching> matchings_;
  std::vector<IntVector> vectors_;
  int polytope_dim_ = -1;
};

struct MatchingFacetReport {
  std::optional<Matching> violating;  // first matching violating the constraint
  int polytope_dim = -1;
  int face_dim = -1;
  std::size_t generator_count = 0;
  std::size_t tight_count = 0;
  FacetCertificate certificate;  // tight_generators filled when certified

  bool valid() const { return !violating.has_value(); }
  bool proper() const { return tight_count > 0 && tight_count < generator_count; }
  bool certified() const { return valid() && proper() && face_dim == polytope_dim - 1; }
};

MatchingFacetReport analyze_matching_facet(const OddRedMatchingSet& vertices, const Constraint& c);

class MatchingFacetError : public CertificationError {
 public:
  explicit MatchingFacetError(MatchingFacetReport report);
  const MatchingFacetReport& report() const { return report_; }

 private:
  MatchingFacetReport report_;
};

// Throws MatchingFacetError with the full report when certification fails.
FacetCertificate certify_matching_facet(const TransferContext& ctx, const Constraint& c);
FacetCertificate certify_matching_facet(const OddRedMatchingSet& vertices, const Constraint& c);

}  // namespace oddred
