#include "oddred/odd_cycle_facets.hpp"

#include <algorithm>
#include <cstdlib>

namespace oddred {

CInducedSpec::CInducedSpec(int n, std::vector<int> cycle) : n_(n), cycle_(std::move(cycle)) {
  if (n_ < 5 || n_ % 2 == 0) throw InvalidArgument("C-induced constraints need odd n >= 5, got " + std::to_string(n_));
  if (static_cast<int>(cycle_.size()) != n_ - 2) {
    throw InvalidArgument("cycle must have n-2 = " + std::to_string(n_ - 2) + " vertices");
  }
  position_.assign(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < cycle_.size(); ++i) {
    int v = cycle_[i];
    if (v < 0 || v >= n_) throw InvalidArgument("cycle vertex " + std::to_string(v) + " out of range");
    if (position_[static_cast<std::size_t>(v)] != -1) {
      throw InvalidArgument("cycle repeats vertex " + std::to_string(v));
    }
    position_[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  for (int v = 0; v < n_; ++v) {
    if (position_[static_cast<std::size_t>(v)] != -1) continue;
    (s_ < 0 ? s_ : t_) = v;
  }
}

int CInducedSpec::cycle_vertex(int i) const {
  const int len = static_cast<int>(cycle_.size());
  return cycle_[static_cast<std::size_t>(((i % len) + len) % len)];
}

std::optional<int> CInducedSpec::position(int v) const {
  if (v < 0 || v >= n_) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  int p = position_[static_cast<std::size_t>(v)];
  if (p < 0) return std::nullopt;
  return p;
}

RankShortfall::RankShortfall(int achieved, int required)
    : CertificationError("tight odd cycles reach rank " + std::to_string(achieved) + ", need " +
                         std::to_string(required)),
      achieved_(achieved),
      required_(required) {}

int ell(const CInducedSpec& spec, const Edge& e) {
  auto i = spec.position(e.u);
  auto j = spec.position(e.v);
  if (!i || !j) throw InvalidArgument("edge " + edge_key(e) + " has an endpoint off the cycle");
  int d = std::abs(*i - *j);
  return d % 2 == 1 ? d : 2 * spec.k() + 1 - d;
}

Constraint build_c_induced(const CInducedSpec& spec) {
  Graph kn = complete_graph(spec.n());
  Constraint c;
  c.coefficients.resize(static_cast<std::size_t>(kn.edge_count()));
  for (int i = 0; i < kn.edge_count(); ++i) {
    const auto& e = kn.edge(i);
    int off_cycle = (spec.position(e.u) ? 0 : 1) + (spec.position(e.v) ? 0 : 1);
    int value = off_cycle == 2 ? 1 : off_cycle == 1 ? spec.k() : ell(spec, e);
    c.coefficients[static_cast<std::size_t>(i)] = value;
  }
  c.rhs = 2 * spec.k() + 1;
  c.sense = Sense::GreaterEqual;
  return c;
}

OddCycleIndex::OddCycleIndex(const Graph& g) : graph_(g), cycles_(enumerate_odd_cycles(g)) {
  edges_.reserve(cycles_.size());
  for (const auto& c : cycles_) edges_.push_back(cycle_edges(graph_, c));
}

namespace {

template <typename Visit>
void evaluate_cycles(const Constraint& c, const OddCycleIndex& cycles, Visit&& visit) {
  if (c.dimension() != static_cast<std::size_t>(cycles.graph().edge_count())) {
    throw DimensionMismatch("constraint has " + std::to_string(c.dimension()) + " coefficients for " +
                            std::to_string(cycles.graph().edge_count()) + " edges");
  }
  // visit(index, cmp) with cmp = sign(value - rhs); returns false to stop.
  if (auto scaled = scale_to_int64(c)) {
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      std::int64_t value = scaled->evaluate_support(cycles.edges_of(i));
      int cmp = value < scaled->rhs ? -1 : value > scaled->rhs ? 1 : 0;
      if (!visit(i, cmp)) return;
    }
    return;
  }
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    Rational value = c.evaluate_support(cycles.edges_of(i));
    if (!visit(i, cmp(value, c.rhs) < 0 ? -1 : cmp(value, c.rhs) > 0 ? 1 : 0)) return;
  }
}

}  // namespace

ValidityResult verify_validity(const Constraint& c, const OddCycleIndex& cycles) {
  std::optional<std::size_t> bad;
  evaluate_cycles(c, cycles, [&](std::size_t i, int cmp) {
    if (cmp < 0) {
      bad = i;
      return false;
    }
    return true;
  });
  if (!bad) return Valid{};
  return Violation{cycles.cycles()[*bad], c.evaluate_support(cycles.edges_of(*bad))};
}

ValidityResult verify_validity(const Constraint& c, int n) {
  return verify_validity(c, OddCycleIndex(complete_graph(n)));
}

std::vector<std::size_t> tight_cycles(const Constraint& c, const OddCycleIndex& cycles) {
  std::vector<std::size_t> out;
  evaluate_cycles(c, cycles, [&](std::size_t i, int cmp) {
    if (cmp == 0) out.push_back(i);
    return true;
  });
  return out;
}

std::vector<Cycle> tight_family(const CInducedSpec& spec) {
  const int len = 2 * spec.k() + 1;
  std::vector<Cycle> out;
  auto add = [&](std::vector<int> vs) { out.push_back(Cycle{canonical_cycle(vs), false}); };
  for (int i = 0; i < len; ++i) add({spec.s(), spec.t(), spec.cycle_vertex(i)});
  for (int i = 0; i < len; ++i) add({spec.s(), spec.cycle_vertex(i), spec.cycle_vertex(i + 1)});
  for (int i = 0; i < len; ++i) add({spec.t(), spec.cycle_vertex(i), spec.cycle_vertex(i + 1)});
  // Chord {v_i, v_j} closed by the even arc between its endpoints.
  for (int i = 0; i < len; ++i) {
    for (int j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      std::vector<int> vs;
      if ((j - i) % 2 == 0) {
        for (int p = i; p <= j; ++p) vs.push_back(spec.cycle_vertex(p));
      } else {
        for (int p = j; p <= i + len; ++p) vs.push_back(spec.cycle_vertex(p));
      }
      add(std::move(vs));
    }
  }
  add(std::vector<int>(spec.cycle().begin(), spec.cycle().end()));
  return out;
}

FacetCertificate certify_dominant_facet(const CInducedSpec& spec, const OddCycleIndex& cycles) {
  const Graph& g = cycles.graph();
  if (g.vertex_count() != spec.n() || g.edge_count() != spec.n() * (spec.n() - 1) / 2) {
    throw DimensionMismatch("cycle index is not over K_" + std::to_string(spec.n()));
  }
  Constraint c = build_c_induced(spec);
  if (std::any_of(c.coefficients.begin(), c.coefficients.end(), [](const Rational& a) { return sgn(a) < 0; })) {
    throw CertificationError("negative coefficient: not valid for the dominant");
  }
  if (sgn(c.rhs) <= 0) throw CertificationError("the origin satisfies the constraint: face is not proper");
  auto validity = verify_validity(c, cycles);
  if (auto* v = std::get_if<Violation>(&validity)) {
    throw CertificationError("odd cycle with value " + to_string(v->value) + " violates the constraint");
  }

  const std::size_t dim = static_cast<std::size_t>(g.edge_count());
  RankAccumulator acc(dim);
  FacetCertificate cert;
  cert.constraint = c;
  cert.polytope_dim = static_cast<int>(dim);
  auto offer = [&](const std::vector<int>& edges) {
    IntVector chi = incidence_int(g.edge_count(), edges);
    if (acc.add(std::span<const std::int64_t>(chi))) cert.tight_generators.push_back(to_rational(chi));
  };
  for (const auto& member : tight_family(spec)) {
    auto edges = cycle_edges(g, member);
    if (c.evaluate_support(edges) != c.rhs) {
      throw CertificationError("tight family member is not tight");
    }
    offer(edges);
  }
  if (!acc.full()) {
    for (std::size_t i : tight_cycles(c, cycles)) {
      offer(std::vector<int>(cycles.edges_of(i).begin(), cycles.edges_of(i).end()));
      if (acc.full()) break;
    }
  }
  if (!acc.full()) throw RankShortfall(acc.rank(), static_cast<int>(dim));
  cert.face_dim = acc.rank() - 1;
  return cert;
}

FacetCertificate certify_dominant_facet(const CInducedSpec& spec) {
  return certify_dominant_facet(spec, OddCycleIndex(complete_graph(spec.n())));
}

}  // namespace oddred
