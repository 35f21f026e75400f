#include <algorithm>
#include <set>

#include "doctest.h"
#include "oddred/errors.hpp"
#include "oddred/odd_cycle_facets.hpp"

using namespace oddred;

namespace {

std::vector<int> iota_cycle(int len) {
  std::vector<int> c(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) c[static_cast<std::size_t>(i)] = i;
  return c;
}

std::set<Rational> distinct_values(const Constraint& c) {
  return {c.coefficients.begin(), c.coefficients.end()};
}

}  // namespace

TEST_SUITE("odd-cycle-facets") {
  TEST_CASE("C-induced input validation") {
    CHECK_THROWS_AS(CInducedSpec(4, {0, 1}), InvalidArgument);
    CHECK_THROWS_AS(CInducedSpec(3, {0}), InvalidArgument);
    CHECK_THROWS_AS(CInducedSpec(5, {0, 1}), InvalidArgument);
    CHECK_THROWS_AS(CInducedSpec(5, {0, 1, 1}), InvalidArgument);
    CHECK_THROWS_AS(CInducedSpec(5, {0, 1, 7}), InvalidArgument);
    CInducedSpec spec(7, {6, 2, 4, 0, 1});
    CHECK(spec.k() == 2);
    CHECK(spec.s() == 3);
    CHECK(spec.t() == 5);
    CHECK(spec.position(4) == 2);
    CHECK_FALSE(spec.position(5).has_value());
  }

  TEST_CASE("ell values") {
    // v1..v7 are vertices 0..6; s = 7, t = 8.
    CInducedSpec spec(9, iota_cycle(7));
    CHECK(ell(spec, Edge(2, 5)) == 3);
    CHECK(ell(spec, Edge(0, 4)) == 3);
    CHECK(ell(spec, Edge(0, 6)) == 1);
    for (int i = 0; i < 7; ++i) CHECK(ell(spec, Edge(i, (i + 1) % 7)) == 1);
    CHECK_THROWS_AS(ell(spec, Edge(0, 7)), InvalidArgument);
    for (int i = 0; i < 7; ++i) {
      for (int j = i + 1; j < 7; ++j) {
        int v = ell(spec, Edge(i, j));
        CHECK(v % 2 == 1);
        CHECK(v >= 1);
        CHECK(v <= 5);
      }
    }
  }

  TEST_CASE("coefficients of the C-induced constraint") {
    CInducedSpec nine(9, iota_cycle(7));
    Graph k9 = complete_graph(9);
    auto c9 = build_c_induced(nine);
    CHECK(c9.rhs == 7);
    CHECK(c9.coefficients[static_cast<std::size_t>(k9.require_edge(7, 8))] == 1);
    for (int v = 0; v < 7; ++v) {
      CHECK(c9.coefficients[static_cast<std::size_t>(k9.require_edge(v, 7))] == 3);
      CHECK(c9.coefficients[static_cast<std::size_t>(k9.require_edge(v, 8))] == 3);
    }
    CHECK(distinct_values(c9) == std::set<Rational>{1, 3, 5});

    auto c5 = build_c_induced(CInducedSpec(5, iota_cycle(3)));
    CHECK(c5.rhs == 3);
    CHECK(distinct_values(c5) == std::set<Rational>{1});

    auto c7 = build_c_induced(CInducedSpec(7, iota_cycle(5)));
    CHECK(c7.rhs == 5);
    CHECK(distinct_values(c7) == std::set<Rational>{1, 2, 3});
  }

  TEST_CASE("cycle representative does not change the constraint") {
    std::vector<int> base{3, 0, 5, 1, 6};
    auto reference = build_c_induced(CInducedSpec(7, base));
    for (int shift = 0; shift < 5; ++shift) {
      std::vector<int> rotated(base.begin() + shift, base.end());
      rotated.insert(rotated.end(), base.begin(), base.begin() + shift);
      CHECK(build_c_induced(CInducedSpec(7, rotated)) == reference);
      std::reverse(rotated.begin(), rotated.end());
      CHECK(build_c_induced(CInducedSpec(7, rotated)) == reference);
    }
  }

  TEST_CASE("validity") {
    for (int n : {5, 7, 9}) {
      auto c = build_c_induced(CInducedSpec(n, iota_cycle(n - 2)));
      CHECK(std::holds_alternative<Valid>(verify_validity(c, n)));
      auto raised = c;
      raised.rhs += 1;
      auto result = verify_validity(raised, n);
      REQUIRE(std::holds_alternative<Violation>(result));
      CHECK(std::get<Violation>(result).value == c.rhs);
    }
    Constraint zero{RationalVector(10), Rational(0), Sense::GreaterEqual};
    CHECK(std::holds_alternative<Valid>(verify_validity(zero, 5)));
    CHECK_THROWS_AS(verify_validity(zero, 7), DimensionMismatch);
  }

  TEST_CASE("tight family") {
    CHECK(tight_family(CInducedSpec(5, iota_cycle(3))).size() == 10);
    CHECK(tight_family(CInducedSpec(7, iota_cycle(5))).size() == 21);
    CHECK(tight_family(CInducedSpec(9, iota_cycle(7))).size() == 36);
    for (int n : {5, 7, 9}) {
      // A cycle through vertices in a scrambled order, missing 0 and n-1.
      std::vector<int> scrambled;
      for (int v = n - 2; v >= 1; v -= 2) scrambled.push_back(v);
      for (int v = n - 3; v >= 1; v -= 2) scrambled.push_back(v);
      CInducedSpec spec(n, scrambled);
      Graph kn = complete_graph(n);
      auto c = build_c_induced(spec);
      auto family = tight_family(spec);
      std::set<std::vector<int>> unique;
      for (const auto& member : family) {
        CHECK(member.is_odd());
        CHECK(c.evaluate_support(cycle_edges(kn, member)) == 2 * spec.k() + 1);
        unique.insert(member.vertices);
      }
      CHECK(unique.size() == family.size());
    }
  }

  TEST_CASE("dominant facet certificates") {
    for (int n : {5, 7, 9}) {
      const int edges = n * (n - 1) / 2;
      auto cert = certify_dominant_facet(CInducedSpec(n, iota_cycle(n - 2)));
      CHECK(cert.polytope_dim == edges);
      CHECK(cert.face_dim == edges - 1);
      CHECK(static_cast<int>(cert.tight_generators.size()) == edges);
      CHECK(rank(cert.tight_generators) == edges);
      for (const auto& g : cert.tight_generators) CHECK(cert.constraint.tight_at(g));
    }
  }

  TEST_CASE("coefficient complexity of the dominant facets") {
    for (int n : {5, 7, 9}) {
      auto c = build_c_induced(CInducedSpec(n, iota_cycle(n - 2)));
      auto values = distinct_values(c);
      CHECK(*values.rbegin() == n - 4);
      CHECK(2 * static_cast<int>(values.size()) >= n - 3);
    }
  }

  TEST_CASE("closed walks of odd length pay at least 2k+1") {
    for (int n : {5, 7, 9}) {
      CInducedSpec spec(n, iota_cycle(n - 2));
      Graph inner = complete_graph(n - 2);
      for (const auto& d : enumerate_odd_cycles(inner)) {
        int total = 0;
        for (std::size_t i = 0; i < d.vertices.size(); ++i) {
          total += ell(spec, Edge(d.vertices[i], d.vertices[(i + 1) % d.vertices.size()]));
        }
        CHECK(total >= 2 * spec.k() + 1);
      }
    }
  }

  TEST_CASE("with k = 1 every triangle induces the same constraint") {
    auto reference = build_c_induced(CInducedSpec(5, {0, 1, 2}));
    for (const auto& c : enumerate_odd_cycles(complete_graph(5), 3)) {
      CHECK(build_c_induced(CInducedSpec(5, c.vertices)) == reference);
    }
  }

  TEST_CASE("distinct cycles give distinct tight sets at n = 7") {
    Graph k7 = complete_graph(7);
    auto cycles = enumerate_odd_cycles(k7, 5);
    REQUIRE(cycles.size() == 252);
    std::vector<ScaledConstraint> constraints;
    std::vector<std::vector<int>> edges;
    for (const auto& c : cycles) {
      constraints.push_back(*scale_to_int64(build_c_induced(CInducedSpec(7, c.vertices))));
      edges.push_back(cycle_edges(k7, c));
    }
    int failures = 0;
    for (std::size_t a = 0; a < cycles.size(); ++a) {
      if (constraints[a].evaluate_support(edges[a]) != constraints[a].rhs) ++failures;
      for (std::size_t b = 0; b < cycles.size(); ++b) {
        if (a != b && constraints[b].evaluate_support(edges[a]) <= constraints[b].rhs) ++failures;
      }
    }
    CHECK(failures == 0);
  }
}
