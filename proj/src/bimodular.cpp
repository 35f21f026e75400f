#include "oddred/bimodular.hpp"

#include <algorithm>

#include "oddred/errors.hpp"

namespace oddred {

BimodularSystem build_bimodular_system(const RedBlueGraph& h) {
  const Graph& g = h.graph();
  BimodularSystem s;
  s.edge_count = g.edge_count();
  const std::size_t cols = s.cols();
  for (int v = 0; v < g.vertex_count(); ++v) {
    IntVector row(cols, 0);
    for (int e : g.incident_edges(v)) row[static_cast<std::size_t>(e)] = 1;
    s.matrix.push_back(std::move(row));
    s.tags.push_back({RowTag::Kind::Degree, v});
  }
  IntVector parity(cols, 0);
  for (int e : h.red_edges()) parity[static_cast<std::size_t>(e)] = 1;
  parity.back() = -2;
  s.matrix.push_back(std::move(parity));
  s.tags.push_back({RowTag::Kind::Parity, -1});
  s.rhs.assign(s.matrix.size(), 1);
  return s;
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMinorLimit * 4) return kMinorLimit * 4;
  }
  return r;
}

// Advances idx to the next k-subset of [0, n) in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

BimodularityReport enumerate_minors(const std::vector<IntVector>& m, std::size_t cols) {
  BimodularityReport report;
  const std::size_t rows = m.size();
  const int r = rank(std::span<const IntVector>(m));
  report.order = r;
  const auto order = static_cast<std::size_t>(r);
  if (order == 0) {
    report.ok = true;
    return report;
  }
  const std::size_t total = binomial(rows, order) * binomial(cols, order);
  if (binomial(rows, order) > kMinorLimit || total > kMinorLimit) {
    throw LimitExceeded("subdeterminant enumeration needs more than " + std::to_string(kMinorLimit) + " minors");
  }
  std::vector<IntVector> sub(order, IntVector(order));
  auto row_idx = first_combination(order);
  do {
    auto col_idx = first_combination(order);
    do {
      for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) sub[i][j] = m[row_idx[i]][col_idx[j]];
      }
      Integer det = determinant(std::span<const IntVector>(sub));
      ++report.minors;
      if (det != 0 && det != 2 && det != -2 && !report.bad_value) {
        report.bad_rows = row_idx;
        report.bad_cols = col_idx;
        report.bad_value = det;
      }
      report.values.insert(std::move(det));
    } while (next_combination(col_idx, cols));
  } while (next_combination(row_idx, rows));
  report.ok = !report.bad_value.has_value();
  return report;
}

}  // namespace

BimodularityReport check_bimodularity(const BimodularSystem& s, int column_cap, MinorScope scope) {
  const std::size_t cols = s.cols();
  if (cols > static_cast<std::size_t>(column_cap)) {
    throw LimitExceeded("system has " + std::to_string(cols) + " columns, cap is " + std::to_string(column_cap));
  }
  for (const auto& row : s.matrix) {
    if (row.size() != cols) throw DimensionMismatch("system row length does not match its column count");
  }
  if (scope == MinorScope::SystemRank) return enumerate_minors(s.matrix, cols);
  std::vector<IntVector> stacked = s.matrix;
  for (int e = 0; e < s.edge_count; ++e) {
    IntVector row(cols, 0);
    row[static_cast<std::size_t>(e)] = -1;
    stacked.push_back(std::move(row));
  }
  return enumerate_minors(stacked, cols);
}

RationalVector lift_point(std::span<const Rational> x, const RedBlueGraph& h) {
  if (x.size() != static_cast<std::size_t>(h.graph().edge_count())) {
    throw DimensionMismatch("point does not match the graph");
  }
  RationalVector out(x.begin(), x.end());
  Rational red_total = 0;
  for (int e : h.red_edges()) red_total += x[static_cast<std::size_t>(e)];
  out.push_back((red_total - 1) / 2);
  return out;
}

Constraint translate_facet(std::span<const Rational> a, const Rational& c, const Rational& b, const RedBlueGraph& h) {
  if (a.size() != static_cast<std::size_t>(h.graph().edge_count())) {
    throw DimensionMismatch("coefficient vector does not match the graph");
  }
  Constraint out;
  out.coefficients.assign(a.begin(), a.end());
  const Rational half_c = c / 2;
  for (int e : h.red_edges()) out.coefficients[static_cast<std::size_t>(e)] += half_c;
  out.rhs = b + half_c;
  out.sense = Sense::GreaterEqual;
  return out;
}

std::vector<IntVector> integral_solutions(const BimodularSystem& s, const RedBlueGraph& h) {
  if (s.edge_count != h.graph().edge_count()) throw DimensionMismatch("system does not match the graph");
  // Degree rows with rhs 1 bound every x_e by 1, so x ranges over 0/1 vectors; branch
  // on columns in order and cut when a degree row overshoots or can no longer reach 1.
  const std::size_t n_cols = static_cast<std::size_t>(s.edge_count);
  std::vector<std::size_t> degree_rows;
  for (std::size_t r = 0; r < s.rows(); ++r) {
    if (s.tags[r].kind == RowTag::Kind::Degree) degree_rows.push_back(r);
  }
  std::vector<std::size_t> last_col(s.rows(), 0);
  std::vector<char> has_col(s.rows(), 0);
  for (std::size_t r : degree_rows) {
    for (std::size_t j = 0; j < n_cols; ++j) {
      if (s.matrix[r][j] != 0) {
        last_col[r] = j;
        has_col[r] = 1;
      }
    }
    if (!has_col[r] && s.rhs[r] != 0) return {};
  }
  std::vector<std::int64_t> sums(s.rows(), 0);
  IntVector x(n_cols, 0);
  std::vector<IntVector> out;

  auto finish = [&]() {
    std::int64_t parity_lhs = 0;
    std::size_t parity_row = s.rows();
    for (std::size_t r = 0; r < s.rows(); ++r) {
      if (s.tags[r].kind == RowTag::Kind::Parity) parity_row = r;
    }
    if (parity_row == s.rows()) return;
    for (std::size_t j = 0; j < n_cols; ++j) parity_lhs += s.matrix[parity_row][j] * x[j];
    const std::int64_t y_coeff = s.matrix[parity_row][n_cols];
    const std::int64_t rest = s.rhs[parity_row] - parity_lhs;
    if (y_coeff == 0 || rest % y_coeff != 0) return;
    const std::int64_t y = rest / y_coeff;
    if (y < 0) return;
    IntVector sol = x;
    sol.push_back(y);
    for (std::size_t r = 0; r < s.rows(); ++r) {
      std::int64_t lhs = 0;
      for (std::size_t j = 0; j < s.cols(); ++j) lhs += s.matrix[r][j] * sol[j];
      if (lhs != s.rhs[r]) return;
    }
    out.push_back(std::move(sol));
  };

  auto branch = [&](auto&& self, std::size_t j) -> void {
    if (j == n_cols) {
      finish();
      return;
    }
    for (std::int64_t value : {std::int64_t{0}, std::int64_t{1}}) {
      bool ok = true;
      for (std::size_t r : degree_rows) {
        sums[r] += s.matrix[r][j] * value;
        if (sums[r] > s.rhs[r] || (has_col[r] && last_col[r] == j && sums[r] != s.rhs[r])) ok = false;
      }
      x[j] = value;
      if (ok) self(self, j + 1);
      for (std::size_t r : degree_rows) sums[r] -= s.matrix[r][j] * value;
      x[j] = 0;
    }
  };
  branch(branch, 0);
  return out;
}

}  // namespace oddred
