#include "oddred/transfer.hpp"

#include <algorithm>

namespace oddred {

TransferContext::TransferContext(Graph base) : base_(std::move(base)), doubled_(doubled_graph(base_)) {
  const int n = base_.vertex_count();
  const Graph& h = doubled_.graph();
  for (const auto& e : base_.edges()) {
    forward_.push_back(h.require_edge(plus_vertex(e.u), minus_vertex(n, e.v)));
    backward_.push_back(h.require_edge(plus_vertex(e.v), minus_vertex(n, e.u)));
  }
  for (int v = 0; v < n; ++v) identity_.push_back(h.require_edge(plus_vertex(v), minus_vertex(n, v)));
}

Constraint canonical_transform(const Constraint& c, const TransferContext& ctx) {
  if (c.dimension() != static_cast<std::size_t>(ctx.base().edge_count())) {
    throw DimensionMismatch("constraint does not match the base graph");
  }
  if (c.sense != Sense::GreaterEqual) throw InvalidArgument("canonical transformation needs a >= constraint");
  Constraint out;
  out.coefficients.assign(static_cast<std::size_t>(ctx.doubled().graph().edge_count()), Rational(0));
  for (int e = 0; e < ctx.base().edge_count(); ++e) {
    const Rational& a = c.coefficients[static_cast<std::size_t>(e)];
    if (sgn(a) < 0) throw InvalidArgument("covering constraint has a negative coefficient on edge " + std::to_string(e));
    out.coefficients[static_cast<std::size_t>(ctx.forward(e))] = a;
    out.coefficients[static_cast<std::size_t>(ctx.backward(e))] = a;
  }
  out.rhs = c.rhs;
  out.sense = Sense::GreaterEqual;
  return out;
}

RationalVector half_point(const TransferContext& ctx, const Cycle& c) {
  const Graph& h = ctx.doubled().graph();
  auto fwd = cycle_to_matching(ctx.base(), ctx.doubled(), c, Orientation::Forward);
  auto bwd = cycle_to_matching(ctx.base(), ctx.doubled(), c, Orientation::Backward);
  RationalVector y(static_cast<std::size_t>(h.edge_count()));
  const Rational half(1, 2);
  for (int e : fwd.edges) y[static_cast<std::size_t>(e)] += half;
  for (int e : bwd.edges) y[static_cast<std::size_t>(e)] += half;
  return y;
}

EdgeSet expressible_closure(const OddCycleIndex& cycles, const Constraint& c, std::span<const int> seed) {
  const Graph& g = cycles.graph();
  auto validity = verify_validity(c, cycles);
  if (std::holds_alternative<Violation>(validity)) {
    throw InvalidArgument("expressibility needs a constraint valid on all odd cycles");
  }
  std::vector<char> in(static_cast<std::size_t>(g.edge_count()), 0);
  for (int e : seed) {
    if (e < 0 || e >= g.edge_count()) throw InvalidArgument("seed edge " + std::to_string(e) + " out of range");
    in[static_cast<std::size_t>(e)] = 1;
  }
  const auto tight = tight_cycles(c, cycles);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t idx : tight) {
      int missing = -1;
      int missing_count = 0;
      for (int e : cycles.edges_of(idx)) {
        if (!in[static_cast<std::size_t>(e)]) {
          missing = e;
          if (++missing_count > 1) break;
        }
      }
      if (missing_count == 1) {
        in[static_cast<std::size_t>(missing)] = 1;
        changed = true;
      }
    }
  }
  EdgeSet out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (in[static_cast<std::size_t>(e)]) out.push_back(e);
  }
  return out;
}

EdgeSet expressible_closure(const Graph& g, const Constraint& c, std::span<const int> seed) {
  return expressible_closure(OddCycleIndex(g), c, seed);
}

bool check_k_expressing(const Graph& g, const Constraint& c, int k, std::span<const int> seed) {
  if (static_cast<int>(seed.size()) > k) {
    throw InvalidArgument("seed has " + std::to_string(seed.size()) + " edges, more than k = " + std::to_string(k));
  }
  return static_cast<int>(expressible_closure(g, c, seed).size()) == g.edge_count();
}

std::optional<Cycle> find_slack_cycle(const OddCycleIndex& cycles, const Constraint& c) {
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (c.evaluate_support(cycles.edges_of(i)) > c.rhs) return cycles.cycles()[i];
  }
  return std::nullopt;
}

TransferHypotheses check_transfer_hypotheses(const OddCycleIndex& cycles, const Constraint& c,
                                             std::span<const int> seed) {
  TransferHypotheses out;
  out.seed.assign(seed.begin(), seed.end());
  std::sort(out.seed.begin(), out.seed.end());
  out.closure = expressible_closure(cycles, c, seed);
  out.expressing = static_cast<int>(out.closure.size()) == cycles.graph().edge_count();
  out.slack_cycle = find_slack_cycle(cycles, c);
  return out;
}

OddRedMatchingSet::OddRedMatchingSet(const RedBlueGraph& h)
    : edge_count_(h.graph().edge_count()), matchings_(enumerate_odd_red_perfect_matchings(h)) {
  vectors_.reserve(matchings_.size());
  for (const auto& m : matchings_) vectors_.push_back(incidence_int(edge_count_, m.edges));
  if (!vectors_.empty()) polytope_dim_ = affine_dimension(std::span<const IntVector>(vectors_));
}

MatchingFacetReport analyze_matching_facet(const OddRedMatchingSet& vertices, const Constraint& c) {
  if (c.dimension() != static_cast<std::size_t>(vertices.edge_count())) {
    throw DimensionMismatch("constraint does not match the doubled graph");
  }
  if (c.sense != Sense::GreaterEqual) throw InvalidArgument("facet certification needs a >= constraint");
  MatchingFacetReport report;
  report.polytope_dim = vertices.polytope_dim();
  report.generator_count = vertices.size();
  report.certificate.constraint = c;
  report.certificate.polytope_dim = vertices.polytope_dim();

  auto scaled = scale_to_int64(c);
  std::vector<IntVector> tight;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& edges = vertices.matchings()[i].edges;
    int cmp_rhs;
    if (scaled) {
      std::int64_t v = scaled->evaluate_support(edges);
      cmp_rhs = v < scaled->rhs ? -1 : v > scaled->rhs ? 1 : 0;
    } else {
      Rational v = c.evaluate_support(edges);
      cmp_rhs = v < c.rhs ? -1 : v > c.rhs ? 1 : 0;
    }
    if (cmp_rhs < 0) {
      report.violating = vertices.matchings()[i];
      return report;
    }
    if (cmp_rhs == 0) tight.push_back(vertices.vectors()[i]);
  }
  report.tight_count = tight.size();
  if (!tight.empty()) {
    auto basis = affine_basis(std::span<const IntVector>(tight), vertices.polytope_dim());
    report.face_dim = static_cast<int>(basis.size()) - 1;
    for (auto i : basis) report.certificate.tight_generators.push_back(to_rational(tight[i]));
  }
  report.certificate.face_dim = report.face_dim;
  return report;
}

namespace {

std::string describe(const MatchingFacetReport& r) {
  if (!r.valid()) return "constraint is violated by an odd-red perfect matching";
  if (!r.proper()) {
    return r.tight_count == 0 ? "no odd-red perfect matching is tight" : "every odd-red perfect matching is tight";
  }
  return "face dimension " + std::to_string(r.face_dim) + " but polytope dimension " + std::to_string(r.polytope_dim);
}

}  // namespace

MatchingFacetError::MatchingFacetError(MatchingFacetReport report)
    : CertificationError(describe(report)), report_(std::move(report)) {}

FacetCertificate certify_matching_facet(const OddRedMatchingSet& vertices, const Constraint& c) {
  auto report = analyze_matching_facet(vertices, c);
  if (!report.certified()) throw MatchingFacetError(std::move(report));
  return report.certificate;
}

FacetCertificate certify_matching_facet(const TransferContext& ctx, const Constraint& c) {
  return certify_matching_facet(OddRedMatchingSet(ctx.doubled()), c);
}

}  // namespace oddred
