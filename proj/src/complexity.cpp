#include "oddred/complexity.hpp"

#include <algorithm>

namespace oddred {

CoefficientMatrix::CoefficientMatrix(int n)
    : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)), present_(entries_.size(), 0) {
  if (n < 0) throw InvalidArgument("negative matrix size");
}

std::size_t CoefficientMatrix::offset(int row, int col) const {
  if (row < 0 || col < 0 || row >= n_ || col >= n_) throw InvalidArgument("matrix index out of range");
  return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(col);
}

const Rational& CoefficientMatrix::at(int row, int col) const {
  auto i = offset(row, col);
  if (!present_[i]) {
    throw InvalidArgument("no edge between row " + std::to_string(row) + " and column " + std::to_string(col));
  }
  return entries_[i];
}

void CoefficientMatrix::set(int row, int col, Rational value) {
  auto i = offset(row, col);
  entries_[i] = std::move(value);
  present_[i] = 1;
}

bool CoefficientMatrix::present(int row, int col) const { return present_[offset(row, col)] != 0; }

void CoefficientMatrix::clear(int row, int col) {
  auto i = offset(row, col);
  entries_[i] = 0;
  present_[i] = 0;
}

std::vector<Rational> CoefficientMatrix::values(bool include_diagonal) const {
  std::vector<Rational> out;
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      if ((include_diagonal || r != c) && present(r, c)) out.push_back(at(r, c));
    }
  }
  return out;
}

CoefficientMatrix to_matrix(const Constraint& c, const TransferContext& ctx) {
  const Graph& h = ctx.doubled().graph();
  if (c.dimension() != static_cast<std::size_t>(h.edge_count())) {
    throw DimensionMismatch("constraint does not match the doubled graph");
  }
  const int n = ctx.base().vertex_count();
  CoefficientMatrix m(n);
  for (int e = 0; e < h.edge_count(); ++e) {
    const auto& edge = h.edge(e);
    m.set(edge.u, edge.v - n, c.coefficients[static_cast<std::size_t>(e)]);
  }
  return m;
}

Constraint from_matrix(const CoefficientMatrix& m, const TransferContext& ctx, Rational rhs, Sense sense) {
  const Graph& h = ctx.doubled().graph();
  const int n = ctx.base().vertex_count();
  if (m.n() != n) throw DimensionMismatch("matrix size does not match the base graph");
  Constraint c;
  c.coefficients.resize(static_cast<std::size_t>(h.edge_count()));
  for (int e = 0; e < h.edge_count(); ++e) {
    const auto& edge = h.edge(e);
    c.coefficients[static_cast<std::size_t>(e)] = m.at(edge.u, edge.v - n);
  }
  c.rhs = std::move(rhs);
  c.sense = sense;
  return c;
}

namespace {

void check_mu_lambda(const MuLambda& t, int n) {
  if (sgn(t.mu) == 0) throw InvalidArgument("mu must be nonzero");
  if (t.lambda.size() != static_cast<std::size_t>(2 * n)) {
    throw DimensionMismatch("lambda needs " + std::to_string(2 * n) + " entries");
  }
}

}  // namespace

CoefficientMatrix apply_mu_lambda(const CoefficientMatrix& m, const MuLambda& t) {
  const int n = m.n();
  check_mu_lambda(t, n);
  CoefficientMatrix out(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (!m.present(r, c)) continue;
      out.set(r, c, t.mu * m.at(r, c) + t.lambda[static_cast<std::size_t>(r)] + t.lambda[static_cast<std::size_t>(n + c)]);
    }
  }
  return out;
}

Constraint apply_mu_lambda(const Constraint& c, const MuLambda& t, const TransferContext& ctx) {
  check_mu_lambda(t, ctx.base().vertex_count());
  if (sgn(t.mu) < 0 && c.sense == Sense::GreaterEqual) {
    throw InvalidArgument("a negative mu reverses a >= constraint");
  }
  Rational shift = 0;
  for (const auto& l : t.lambda) shift += l;
  return from_matrix(apply_mu_lambda(to_matrix(c, ctx), t), ctx, t.mu * c.rhs + shift, c.sense);
}

Rational alternating_sum(const CoefficientMatrix& m, std::span<const int> sequence) {
  if (sequence.size() < 2) throw InvalidArgument("alternating sums need at least two vertices");
  Rational total = 0;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    int u = sequence[i];
    int next = sequence[(i + 1) % sequence.size()];
    total += m.at(u, next);
    total -= m.at(u, u);
  }
  return total;
}

std::size_t count_distinct(std::span<const Rational> values) {
  std::vector<Rational> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

namespace {

ComplexityReport bound_report(std::span<const Rational> all, std::span<const Rational> off_diagonal, int n,
                              BoundFamily family) {
  ComplexityReport r;
  for (const auto& v : all) {
    if (!is_integral(v)) throw InvalidArgument("complexity bounds need an integral representation");
    Integer a = abs(v.get_num());
    if (a > r.max_abs) r.max_abs = a;
  }
  r.distinct = count_distinct(all);
  r.distinct_off_diagonal = count_distinct(off_diagonal);
  // max >= (n-4)/q and distinct >= sqrt((n-1)/p), compared without division.
  const long q = family == BoundFamily::Matching ? 2 : 3;
  const long p = family == BoundFamily::Matching ? 2 : 8;
  r.max_abs_ok = q * r.max_abs >= Integer(n - 4);
  Integer d = static_cast<unsigned long>(r.distinct);
  r.distinct_ok = p * d * d >= Integer(n - 1);
  return r;
}

}  // namespace

ComplexityReport check_complexity_bounds(const CoefficientMatrix& m, int n, BoundFamily family) {
  auto all = m.values(true);
  auto off = m.values(false);
  return bound_report(all, off, n, family);
}

ComplexityReport check_complexity_bounds(std::span<const Rational> values, int n, BoundFamily family) {
  return bound_report(values, values, n, family);
}

std::int64_t f_value(std::int64_t j, std::int64_t m1, std::int64_t m2) {
  if (j < 0 || m1 < 1 || m2 < 1) throw InvalidArgument("f_value needs j >= 0 and m1, m2 >= 1");
  const std::int64_t r = j % m2;
  return r + m1 - ((r + j) % m1);
}

std::int64_t ceil_cube_root(std::int64_t x) {
  if (x < 0) throw InvalidArgument("cube root of a negative number");
  std::int64_t r = 0;
  while (r * r * r < x) ++r;
  return r;
}

ShiftParameters shift_parameters(std::int64_t n) { return {ceil_cube_root(n), ceil_cube_root(n * n)}; }

Rational distinct_count_bound(std::int64_t n, const ShiftParameters& p) {
  const long m1 = static_cast<long>(p.m1);
  const long m2 = static_cast<long>(p.m2);
  const long spread = 2 * (static_cast<long>(n) + m1 + m2);
  Rational bound = 2 + 2 * (m1 + m2 + 1);
  bound += Rational(spread) / m1 + 1;
  bound += Rational(spread) / m2 * (2 * m1 + 1);
  return bound;
}

MuLambda build_low_complexity_lambda(const CInducedSpec& spec) {
  const int n = spec.n();
  if (n < 5) throw InvalidArgument("low-complexity construction needs n >= 5");
  const auto params = shift_parameters(n);
  const int len = 2 * spec.k() + 1;
  MuLambda t{Rational(1), RationalVector(static_cast<std::size_t>(2 * n), Rational(0))};
  // Cycle vertices are taken every second step (v1, v3, ..., v2, v4, ...); the p-th
  // vertex in that order (1-based) is shifted by f_p.
  for (int p = 1; p <= len; ++p) {
    int v = spec.cycle_vertex(2 * (p - 1));
    auto shift = 2 * f_value(p, params.m1, params.m2);
    t.lambda[static_cast<std::size_t>(v)] = static_cast<long>(shift);
    t.lambda[static_cast<std::size_t>(n + v)] = static_cast<long>(-shift);
  }
  return t;
}

namespace {

std::vector<char> tight_mask(const Constraint& c, const OddRedMatchingSet& vertices) {
  if (c.dimension() != static_cast<std::size_t>(vertices.edge_count())) {
    throw DimensionMismatch("constraint does not match the doubled graph");
  }
  std::vector<char> mask(vertices.size(), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    mask[i] = c.evaluate_support(vertices.matchings()[i].edges) == c.rhs ? 1 : 0;
  }
  return mask;
}

}  // namespace

bool same_face_check(const Constraint& original, const Constraint& transformed, const OddRedMatchingSet& vertices) {
  return tight_mask(original, vertices) == tight_mask(transformed, vertices);
}

bool same_face_check(const Constraint& original, const Constraint& transformed, const TransferContext& ctx) {
  return same_face_check(original, transformed, OddRedMatchingSet(ctx.doubled()));
}

MuLambda sample_integral_mu_lambda(int n, std::mt19937_64& rng, const SamplerOptions& options) {
  if (options.mu_range < 1) throw InvalidArgument("mu range must be positive");
  std::uniform_int_distribution<std::int64_t> mu_dist(1, options.mu_range);
  std::uniform_int_distribution<std::int64_t> lambda_dist(-options.lambda_range, options.lambda_range);
  std::bernoulli_distribution coin(0.5);
  MuLambda t;
  auto mu = mu_dist(rng);
  t.mu = static_cast<long>(coin(rng) ? mu : -mu);
  t.lambda.resize(static_cast<std::size_t>(2 * n));
  const bool half = options.half_shifts && coin(rng);
  for (int i = 0; i < 2 * n; ++i) {
    Rational value = static_cast<long>(lambda_dist(rng));
    if (half) value += Rational(i < n ? 1 : -1, 2);
    t.lambda[static_cast<std::size_t>(i)] = value;
  }
  return t;
}

SearchResult search_low_complexity(const CoefficientMatrix& m, std::int64_t bound, std::uint64_t seed,
                                   std::size_t iterations) {
  const int n = m.n();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(0, 2 * n - 1);
  std::uniform_int_distribution<std::int64_t> value(-bound, bound);
  MuLambda current{Rational(1), RationalVector(static_cast<std::size_t>(2 * n), Rational(0))};
  auto score = [&](const MuLambda& t) { return count_distinct(apply_mu_lambda(m, t).values(true)); };

  SearchResult result;
  std::size_t current_score = score(current);
  result.start_distinct = current_score;
  result.best = current;
  result.best_distinct = current_score;
  result.evaluations = 1;
  for (std::size_t it = 0; it < iterations; ++it) {
    MuLambda candidate = current;
    candidate.lambda[static_cast<std::size_t>(coord(rng))] = static_cast<long>(value(rng));
    std::size_t s = score(candidate);
    ++result.evaluations;
    if (s <= current_score) {
      current = std::move(candidate);
      current_score = s;
      if (s < result.best_distinct) {
        result.best = current;
        result.best_distinct = s;
      }
    }
  }
  return result;
}

}  // namespace oddred
