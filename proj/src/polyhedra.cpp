#include "oddred/polyhedra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace oddred {

namespace {

void require_dimension(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(expected) + ", got " +
                            std::to_string(got));
  }
}

std::vector<Integer> to_integer_row(std::span<const Rational> v) {
  Integer scale = common_denominator(v);
  std::vector<Integer> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = scale / v[i].get_den();
    out[i] *= v[i].get_num();
  }
  return out;
}

}  // namespace

Rational Constraint::evaluate(std::span<const Rational> x) const {
  require_dimension(coefficients.size(), x.size(), "constraint evaluation");
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(coefficients[i]) != 0 && sgn(x[i]) != 0) sum += coefficients[i] * x[i];
  }
  return sum;
}

Rational Constraint::evaluate_int(std::span<const std::int64_t> x) const {
  require_dimension(coefficients.size(), x.size(), "constraint evaluation");
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) sum += coefficients[i] * Rational(static_cast<long>(x[i]));
  }
  return sum;
}

Rational Constraint::evaluate_support(std::span<const int> support) const {
  Rational sum = 0;
  for (int e : support) sum += coefficients.at(static_cast<std::size_t>(e));
  return sum;
}

bool Constraint::satisfied_by(std::span<const Rational> x) const {
  Rational value = evaluate(x);
  return sense == Sense::Equal ? value == rhs : value >= rhs;
}

std::int64_t ScaledConstraint::evaluate_support(std::span<const int> support) const {
  std::int64_t sum = 0;
  for (int e : support) sum += coefficients[static_cast<std::size_t>(e)];
  return sum;
}

std::optional<ScaledConstraint> scale_to_int64(const Constraint& c) {
  Integer scale = common_denominator(c.coefficients);
  mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.rhs.get_den_mpz_t());
  auto coeffs = scaled_to_int64(c.coefficients, scale);
  Rational rhs_scaled = c.rhs * Rational(scale);
  auto rhs = to_int64(rhs_scaled.get_num());
  if (!coeffs || !rhs) return std::nullopt;
  // Sums over supports must not overflow; keep total magnitude well inside int64.
  Integer total = 0;
  for (auto v : *coeffs) total += Integer(static_cast<long>(v < 0 ? -v : v));
  if (total > Integer(std::numeric_limits<std::int64_t>::max() / 4)) return std::nullopt;
  return ScaledConstraint{std::move(*coeffs), *rhs};
}

RankAccumulator::RankAccumulator(std::size_t dimension) : dimension_(dimension) {}

bool RankAccumulator::add(std::span<const std::int64_t> v) {
  require_dimension(dimension_, v.size(), "rank");
  if (full()) {
    return false;
  }
  if (!big_) {
    if (auto r = add_small(IntVector(v.begin(), v.end()))) return *r;
    promote();
  }
  std::vector<Integer> row(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) row[i] = static_cast<long>(v[i]);
  return add_integer(std::move(row));
}

bool RankAccumulator::add(std::span<const Rational> v) {
  require_dimension(dimension_, v.size(), "rank");
  if (full()) return false;
  auto row = to_integer_row(v);
  if (!big_) {
    IntVector small;
    small.reserve(row.size());
    bool fits = true;
    for (const auto& x : row) {
      auto s = to_int64(x);
      if (!s) {
        fits = false;
        break;
      }
      small.push_back(*s);
    }
    if (fits) {
      if (auto r = add_small(std::move(small))) return *r;
    }
    promote();
  }
  return add_integer(std::move(row));
}

std::optional<bool> RankAccumulator::add_small(IntVector v) {
  for (std::size_t r = 0; r < small_rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p] == 0) continue;
    const IntVector& b = small_rows_[r];
    std::int64_t g = std::gcd(b[p], v[p]);
    std::int64_t fb = b[p] / g;
    std::int64_t fv = v[p] / g;
    // b is zero before its pivot, but v must be scaled there too.
    for (std::size_t j = 0; j < dimension_; ++j) {
      std::int64_t lhs = 0;
      std::int64_t rhs = 0;
      if (__builtin_mul_overflow(fb, v[j], &lhs) || __builtin_mul_overflow(fv, b[j], &rhs) ||
          __builtin_sub_overflow(lhs, rhs, &v[j])) {
        return std::nullopt;
      }
    }
    std::int64_t content = 0;
    for (auto x : v) content = std::gcd(content, x);
    if (content > 1) {
      for (auto& x : v) x /= content;
    }
  }
  auto lead = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
  if (lead == v.end()) return false;
  pivots_.push_back(static_cast<std::size_t>(lead - v.begin()));
  small_rows_.push_back(std::move(v));
  return true;
}

void RankAccumulator::promote() {
  if (big_) return;
  big_ = true;
  for (const auto& row : small_rows_) {
    std::vector<Integer> big(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) big[i] = static_cast<long>(row[i]);
    big_rows_.push_back(std::move(big));
  }
  small_rows_.clear();
}

bool RankAccumulator::add_integer(std::vector<Integer> v) {
  Integer g, fb, fv, content;
  for (std::size_t r = 0; r < big_rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (sgn(v[p]) == 0) continue;
    const auto& b = big_rows_[r];
    mpz_gcd(g.get_mpz_t(), b[p].get_mpz_t(), v[p].get_mpz_t());
    fb = b[p] / g;
    fv = v[p] / g;
    for (std::size_t j = 0; j < dimension_; ++j) v[j] = fb * v[j] - fv * b[j];
    content = 0;
    for (const auto& x : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    if (content > 1) {
      for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    }
  }
  auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; });
  if (lead == v.end()) return false;
  pivots_.push_back(static_cast<std::size_t>(lead - v.begin()));
  big_rows_.push_back(std::move(v));
  return true;
}

int rank(std::span<const RationalVector> vectors) {
  if (vectors.empty()) return 0;
  RankAccumulator acc(vectors.front().size());
  for (const auto& v : vectors) acc.add(std::span<const Rational>(v));
  return acc.rank();
}

int rank(std::span<const IntVector> vectors) {
  if (vectors.empty()) return 0;
  RankAccumulator acc(vectors.front().size());
  for (const auto& v : vectors) acc.add(std::span<const std::int64_t>(v));
  return acc.rank();
}

int affine_dimension(std::span<const RationalVector> points) {
  if (points.empty()) throw InvalidArgument("affine dimension of an empty point set");
  const auto& base = points.front();
  RankAccumulator acc(base.size());
  RationalVector diff(base.size());
  for (std::size_t i = 1; i < points.size(); ++i) {
    require_dimension(base.size(), points[i].size(), "affine dimension");
    for (std::size_t j = 0; j < base.size(); ++j) diff[j] = points[i][j] - base[j];
    acc.add(std::span<const Rational>(diff));
  }
  return acc.rank();
}

int affine_dimension(std::span<const IntVector> points) {
  if (points.empty()) throw InvalidArgument("affine dimension of an empty point set");
  return static_cast<int>(affine_basis(points).size()) - 1;
}

std::vector<std::size_t> affine_basis(std::span<const IntVector> points, std::optional<int> max_dimension) {
  if (points.empty()) return {};
  const auto& base = points.front();
  RankAccumulator acc(base.size());
  std::vector<std::size_t> chosen{0};
  IntVector diff(base.size());
  for (std::size_t i = 1; i < points.size() && !acc.full(); ++i) {
    if (max_dimension && acc.rank() >= *max_dimension) break;
    require_dimension(base.size(), points[i].size(), "affine dimension");
    for (std::size_t j = 0; j < base.size(); ++j) diff[j] = points[i][j] - base[j];
    if (acc.add(std::span<const std::int64_t>(diff))) chosen.push_back(i);
  }
  return chosen;
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) require_dimension(n, row.size(), "determinant");
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(m[swap_row][k]) == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer determinant(std::span<const IntVector> matrix) {
  const std::size_t n = matrix.size();
  for (const auto& row : matrix) require_dimension(n, row.size(), "determinant");
  if (n == 0) return 1;
  std::vector<IntVector> m(matrix.begin(), matrix.end());
  int sign = 1;
  std::int64_t prev = 1;
  bool overflow = false;
  for (std::size_t k = 0; k + 1 < n && !overflow; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n && !overflow; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 value = static_cast<__int128>(m[i][j]) * m[k][k] - static_cast<__int128>(m[i][k]) * m[k][j];
        value /= prev;
        if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min()) {
          overflow = true;
          break;
        }
        m[i][j] = static_cast<std::int64_t>(value);
      }
    }
    prev = m[k][k];
  }
  if (!overflow) return Integer(static_cast<long>(sign * m[n - 1][n - 1]));
  std::vector<std::vector<Integer>> big(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) big[i][j] = static_cast<long>(matrix[i][j]);
  }
  return determinant(std::move(big));
}

namespace {

// Phase-1 simplex on  sum_j w_j g_j = x, sum_j w_j = 1, w >= 0  with one artificial
// variable per row and Bland's rule.
class Phase1 {
 public:
  Phase1(std::span<const RationalVector> generators, std::span<const Rational> x)
      : rows_(x.size() + 1), structural_(generators.size()), cols_(structural_ + rows_) {
    tableau_.assign(rows_, RationalVector(cols_ + 1));
    flip_.assign(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      Rational rhs = i < x.size() ? x[i] : Rational(1);
      flip_[i] = rhs < 0 ? -1 : 1;
      for (std::size_t j = 0; j < structural_; ++j) {
        Rational a = i < x.size() ? generators[j][i] : Rational(1);
        tableau_[i][j] = flip_[i] < 0 ? Rational(-a) : a;
      }
      tableau_[i][structural_ + i] = 1;
      tableau_[i][cols_] = flip_[i] < 0 ? Rational(-rhs) : rhs;
      basis_.push_back(structural_ + i);
    }
    // Reduced costs for minimising the sum of artificials.
    cost_.assign(cols_ + 1, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < structural_; ++j) cost_[j] -= tableau_[i][j];
      cost_[cols_] -= tableau_[i][cols_];
    }
  }

  void solve() {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(cost_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return;
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(tableau_[i][enter]) <= 0) continue;
        Rational ratio = tableau_[i][cols_] / tableau_[i][enter];
        if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_) throw std::logic_error("phase-1 problem is bounded below by zero");
      pivot(leave, enter);
    }
  }

  Rational objective() const {
    Rational total = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] >= structural_) total += tableau_[i][cols_];
    }
    return total;
  }

  RationalVector weights() const {
    RationalVector w(structural_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < structural_) w[basis_[i]] = tableau_[i][cols_];
    }
    return w;
  }

  // Row multipliers y of the original (unflipped) system with y^T A <= 0 on every
  // structural column and y^T b > 0.
  RationalVector farkas() const {
    RationalVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Rational yi = 1 - cost_[structural_ + i];
      y[i] = flip_[i] < 0 ? Rational(-yi) : yi;
    }
    return y;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    Rational p = tableau_[r][c];
    for (auto& v : tableau_[r]) {
      if (sgn(v) != 0) v /= p;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn(tableau_[i][c]) == 0) continue;
      Rational f = tableau_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(tableau_[r][j]) != 0) tableau_[i][j] -= f * tableau_[r][j];
      }
    }
    if (sgn(cost_[c]) != 0) {
      Rational f = cost_[c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(tableau_[r][j]) != 0) cost_[j] -= f * tableau_[r][j];
      }
    }
    basis_[r] = c;
  }

  std::size_t rows_;
  std::size_t structural_;
  std::size_t cols_;
  std::vector<RationalVector> tableau_;
  RationalVector cost_;
  std::vector<std::size_t> basis_;
  std::vector<int> flip_;
};

}  // namespace

Membership conv_membership(std::span<const RationalVector> generators, std::span<const Rational> x) {
  if (generators.empty()) throw InvalidArgument("convex hull membership needs at least one generator");
  for (const auto& g : generators) require_dimension(x.size(), g.size(), "convex hull membership");

  Phase1 lp(generators, x);
  lp.solve();
  if (sgn(lp.objective()) == 0) {
    Inside inside{lp.weights()};
    RationalVector check(x.size());
    Rational total = 0;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      const auto& w = inside.weights[j];
      if (sgn(w) < 0) throw std::logic_error("negative convex weight");
      if (sgn(w) == 0) continue;
      total += w;
      for (std::size_t i = 0; i < x.size(); ++i) check[i] += w * generators[j][i];
    }
    if (total != 1 || !std::equal(check.begin(), check.end(), x.begin())) {
      throw std::logic_error("convex weights do not reproduce the query point");
    }
    return inside;
  }

  RationalVector y = lp.farkas();
  // y_x . g + y_0 <= 0 for generators and > 0 at x, so (-y_x) . z >= y_0 separates.
  Constraint separator;
  separator.coefficients.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) separator.coefficients[i] = -y[i];
  separator.rhs = y[x.size()];
  separator.sense = Sense::GreaterEqual;
  for (const auto& g : generators) {
    if (separator.evaluate(g) < separator.rhs) throw std::logic_error("separator cuts off a generator");
  }
  if (separator.evaluate(x) >= separator.rhs) throw std::logic_error("separator does not cut off the query point");
  return Outside{std::move(separator)};
}

ValidityError::ValidityError(std::size_t index, Rational value)
    : Error("generator " + std::to_string(index) + " violates the constraint (value " + to_string(value) + ")"),
      index_(index),
      value_(std::move(value)) {}

std::vector<std::size_t> tight_indices(std::span<const RationalVector> generators, const Constraint& c) {
  if (c.sense != Sense::GreaterEqual) throw InvalidArgument("tight sets are defined for >= constraints");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    Rational value = c.evaluate(generators[i]);
    if (value < c.rhs) throw ValidityError(i, value);
    if (value == c.rhs) out.push_back(i);
  }
  return out;
}

std::vector<RationalVector> tight_set(std::span<const RationalVector> generators, const Constraint& c) {
  std::vector<RationalVector> out;
  for (auto i : tight_indices(generators, c)) out.push_back(generators[i]);
  return out;
}

}  // namespace oddred
