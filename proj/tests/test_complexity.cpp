#include <fstream>
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "oddred/complexity.hpp"
#include "oddred/errors.hpp"

using namespace oddred;

namespace {

std::vector<int> iota_cycle(int len) {
  std::vector<int> c(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) c[static_cast<std::size_t>(i)] = i;
  return c;
}

CoefficientMatrix transformed_matrix(int n, const TransferContext& ctx) {
  return to_matrix(canonical_transform(build_c_induced(CInducedSpec(n, iota_cycle(n - 2))), ctx), ctx);
}

bool integral(const CoefficientMatrix& m) {
  for (const auto& v : m.values()) {
    if (!is_integral(v)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("coefficient-complexity") {
  TEST_CASE("matrix view") {
    TransferContext ctx(complete_graph(5));
    Constraint zero{RationalVector(25), Rational(0), Sense::GreaterEqual};
    auto mz = to_matrix(zero, ctx);
    for (const auto& v : mz.values()) CHECK(v == 0);

    CInducedSpec spec(5, {0, 1, 2});
    auto c = build_c_induced(spec);
    auto t = canonical_transform(c, ctx);
    auto m = to_matrix(t, ctx);
    for (int u = 0; u < 5; ++u) {
      for (int v = 0; v < 5; ++v) {
        Rational expected = u == v ? Rational(0) : c.coefficients[static_cast<std::size_t>(ctx.base().require_edge(u, v))];
        CHECK(m.at(u, v) == expected);
      }
    }
    CHECK(from_matrix(m, ctx, t.rhs) == t);
    CHECK_THROWS_AS(to_matrix(c, ctx), DimensionMismatch);
  }

  TEST_CASE("mu lambda moves") {
    TransferContext ctx(complete_graph(9));
    auto m = transformed_matrix(9, ctx);
    CHECK(apply_mu_lambda(m, MuLambda{1, RationalVector(18)}) == m);
    auto doubled = apply_mu_lambda(m, MuLambda{2, RationalVector(18)});
    for (int u = 0; u < 9; ++u) {
      for (int v = 0; v < 9; ++v) CHECK(doubled.at(u, v) == 2 * m.at(u, v));
    }
    CHECK_THROWS_AS(apply_mu_lambda(m, MuLambda{0, RationalVector(18)}), InvalidArgument);
    CHECK_THROWS_AS(apply_mu_lambda(m, MuLambda{1, RationalVector(17)}), DimensionMismatch);

    RationalVector lambda(18);
    lambda[2] = 3;
    lambda[9 + 4] = Rational(-1) / 2;
    auto shifted = apply_mu_lambda(m, MuLambda{1, lambda});
    CHECK(shifted.at(2, 4) == m.at(2, 4) + 3 - Rational(1) / 2);
    CHECK(shifted.at(2, 5) == m.at(2, 5) + 3);
    CHECK(shifted.at(0, 4) == m.at(0, 4) - Rational(1) / 2);
  }

  TEST_CASE("alternating sums at n = 9") {
    TransferContext ctx(complete_graph(9));
    auto m = transformed_matrix(9, ctx);
    CHECK(alternating_sum(m, std::vector<int>{7, 8}) == 2);
    CHECK(alternating_sum(m, std::vector<int>{0, 1, 2}) == 7);
    CHECK(alternating_sum(m, std::vector<int>{0, 2}) == 10);
    CHECK_THROWS_AS(alternating_sum(m, std::vector<int>{3}), InvalidArgument);
  }

  TEST_CASE("alternating sums are invariant up to mu") {
    TransferContext ctx(complete_graph(9));
    auto m = transformed_matrix(9, ctx);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      auto t = sample_integral_mu_lambda(9, rng);
      auto image = apply_mu_lambda(m, t);
      CHECK(integral(image));
      CHECK(is_integral(t.mu));
      int len = 2 + static_cast<int>(rng() % 6);
      std::vector<int> seq;
      for (int i = 0; i < len; ++i) seq.push_back(static_cast<int>(rng() % 9));
      CHECK(alternating_sum(image, seq) == t.mu * alternating_sum(m, seq));
    }
  }

  TEST_CASE("fractional mu never gives an integral image") {
    TransferContext ctx(complete_graph(9));
    auto m = transformed_matrix(9, ctx);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      auto t = sample_integral_mu_lambda(9, rng);
      t.mu = Rational(static_cast<long>(2 * (rng() % 5) + 1)) / 2;
      CHECK_FALSE(integral(apply_mu_lambda(m, t)));
    }
  }

  TEST_CASE("complexity bounds") {
    TransferContext ctx(complete_graph(9));
    auto m = transformed_matrix(9, ctx);
    auto r = check_complexity_bounds(m, 9);
    CHECK(r.max_abs == 5);
    CHECK(r.distinct == 4);
    CHECK(r.ok());
    auto r3 = check_complexity_bounds(apply_mu_lambda(m, MuLambda{3, RationalVector(18)}), 9);
    CHECK(r3.max_abs == 15);
    CHECK(r3.distinct == 4);

    auto half = apply_mu_lambda(m, MuLambda{Rational(1) / 2, RationalVector(18)});
    CHECK_THROWS_AS(check_complexity_bounds(half, 9), InvalidArgument);

    // A constant matrix passes neither bound once n is large enough.
    CoefficientMatrix flat(13);
    for (int u = 0; u < 13; ++u) {
      for (int v = 0; v < 13; ++v) flat.set(u, v, 1);
    }
    auto rf = check_complexity_bounds(flat, 13);
    CHECK_FALSE(rf.max_abs_ok);
    CHECK_FALSE(rf.distinct_ok);
  }

  TEST_CASE("bounds hold on random integral images") {
    for (int n : {7, 9, 11}) {
      TransferContext ctx(complete_graph(n));
      auto m = transformed_matrix(n, ctx);
      std::mt19937_64 rng(static_cast<std::uint64_t>(n));
      for (int trial = 0; trial < 300; ++trial) {
        auto image = apply_mu_lambda(m, sample_integral_mu_lambda(n, rng));
        CHECK(check_complexity_bounds(image, n).ok());
      }
    }
  }

  TEST_CASE("f values") {
    CHECK(f_value(0, 3, 9) == 3);
    CHECK(f_value(1, 3, 9) == 2);
    CHECK(f_value(5, 3, 9) == 7);
    for (auto [m1, m2] : {std::pair<int, int>{2, 4}, {3, 9}, {5, 25}}) {
      for (int j = 0; j < 1000; ++j) {
        auto f = f_value(j, m1, m2);
        CHECK(f >= 0);
        CHECK(f <= m1 + m2);
        CHECK((f + j) % m1 == 0);
        auto d = ((f - j) % m2 + m2) % m2;
        CHECK(d <= m1);
      }
    }
    CHECK_THROWS_AS(f_value(0, 0, 3), InvalidArgument);
  }

  TEST_CASE("shift parameters") {
    CHECK(ceil_cube_root(1) == 1);
    CHECK(ceil_cube_root(8) == 2);
    CHECK(ceil_cube_root(9) == 3);
    CHECK(ceil_cube_root(27) == 3);
    CHECK(ceil_cube_root(28) == 4);
    auto p = shift_parameters(27);
    CHECK(p.m1 == 3);
    CHECK(p.m2 == 9);
    CHECK(distinct_count_bound(9, shift_parameters(9)) > 14);
  }

  TEST_CASE("low complexity lambda against golden counts") {
    std::ifstream in(std::string(ODDRED_TEST_DATA_DIR) + "/golden/low_complexity.json");
    REQUIRE(in.good());
    auto golden = nlohmann::json::parse(in);
    for (auto& [key, entry] : golden.items()) {
      int n = std::stoi(key);
      CAPTURE(n);
      TransferContext ctx(complete_graph(n));
      auto m = transformed_matrix(n, ctx);
      auto t = build_low_complexity_lambda(CInducedSpec(n, iota_cycle(n - 2)));
      CHECK(t.mu == 1);
      CHECK(t.lambda.size() == static_cast<std::size_t>(2 * n));
      auto p = shift_parameters(n);
      CHECK(p.m1 == entry["m1"].get<long>());
      CHECK(p.m2 == entry["m2"].get<long>());
      auto image = apply_mu_lambda(m, t);
      auto distinct = count_distinct(image.values());
      CHECK(distinct == entry["distinct"].get<std::size_t>());
      CHECK(Rational(static_cast<long>(distinct)) <= distinct_count_bound(n, p));
      CHECK(check_complexity_bounds(image, n).ok());
    }
    CHECK_THROWS_AS(build_low_complexity_lambda(CInducedSpec(3, {0})), InvalidArgument);
  }

  TEST_CASE("same face") {
    for (int n : {5, 7}) {
      TransferContext ctx(complete_graph(n));
      OddRedMatchingSet vertices(ctx.doubled());
      CInducedSpec spec(n, iota_cycle(n - 2));
      auto t = canonical_transform(build_c_induced(spec), ctx);
      CHECK(same_face_check(t, t, vertices));
      CHECK(same_face_check(t, apply_mu_lambda(t, MuLambda{2, RationalVector(static_cast<std::size_t>(2 * n))}, ctx),
                            vertices));
      auto low = apply_mu_lambda(t, build_low_complexity_lambda(spec), ctx);
      CHECK(same_face_check(t, low, vertices));
      auto off = t;
      off.rhs -= 1;
      CHECK_FALSE(same_face_check(t, off, vertices));
    }
    TransferContext ctx(complete_graph(5));
    auto t = canonical_transform(build_c_induced(CInducedSpec(5, {0, 1, 2})), ctx);
    CHECK_THROWS_AS(apply_mu_lambda(t, MuLambda{-1, RationalVector(10)}, ctx), InvalidArgument);
  }

  TEST_CASE("heuristic search never gets worse") {
    TransferContext ctx(complete_graph(9));
    auto m = transformed_matrix(9, ctx);
    auto a = search_low_complexity(m, 9, 42, 400);
    auto b = search_low_complexity(m, 9, 42, 400);
    CHECK(a.best_distinct <= a.start_distinct);
    CHECK(a.start_distinct == count_distinct(m.values()));
    CHECK(a.best_distinct == b.best_distinct);
    CHECK(a.best.lambda == b.best.lambda);
    CHECK(count_distinct(apply_mu_lambda(m, a.best).values()) == a.best_distinct);
  }
}
