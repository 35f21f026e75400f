#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "oddred/odd_cycle_facets.hpp"
#include "oddred/polyhedra.hpp"
#include "oddred/transfer.hpp"

namespace oddred {

// Coefficients of a constraint over a doubled graph laid out with rows V+ and
// columns V-. Entries whose edge is absent from the doubled graph are not present.
class CoefficientMatrix {
 public:
  CoefficientMatrix() = default;
  explicit CoefficientMatrix(int n);

  int n() const { return n_; }
  const Rational& at(int row, int col) const;
  void set(int row, int col, Rational value);
  bool present(int row, int col) const;
  void clear(int row, int col);

  // Entries of present cells, row-major.
  std::vector<Rational> values(bool include_diagonal = true) const;

  bool operator==(const CoefficientMatrix&) const = default;

 private:
  std::size_t offset(int row, int col) const;

  int n_ = 0;
  std::vector<Rational> entries_;
  std::vector<char> present_;
};

CoefficientMatrix to_matrix(const Constraint& c, const TransferContext& ctx);
// Inverse of to_matrix; rhs and sense are supplied by the caller.
Constraint from_matrix(const CoefficientMatrix& m, const TransferContext& ctx, Rational rhs,
                       Sense sense = Sense::GreaterEqual);

struct MuLambda {
  Rational mu;
  RationalVector lambda;  // 2n entries: V+ then V-
};

// Throws InvalidArgument on mu == 0, DimensionMismatch on a lambda of the wrong size.
CoefficientMatrix apply_mu_lambda(const CoefficientMatrix& m, const MuLambda& t);
// Same move on the constraint; the rhs becomes mu * rhs + sum(lambda).
Constraint apply_mu_lambda(const Constraint& c, const MuLambda& t, const TransferContext& ctx);

// sum m(u_i+, u_{i+1}-) - sum m(u_i+, u_i-), indices cyclic.
Rational alternating_sum(const CoefficientMatrix& m, std::span<const int> sequence);

enum class BoundFamily {
  Matching,   // max >= (n-4)/2, distinct >= sqrt((n-1)/2)
  Bimodular,  // max >= (n-4)/3, distinct >= sqrt((n-1)/8)
};

struct ComplexityReport {
  Integer max_abs;
  std::size_t distinct = 0;               // all present entries
  std::size_t distinct_off_diagonal = 0;  // identity edges excluded
  bool max_abs_ok = false;
  bool distinct_ok = false;

  bool ok() const { return max_abs_ok && distinct_ok; }
};

// Throws InvalidArgument when an entry is not an integer.
ComplexityReport check_complexity_bounds(const CoefficientMatrix& m, int n,
                                         BoundFamily family = BoundFamily::Matching);
// Bounds over an explicit value list (used for lifted representations).
ComplexityReport check_complexity_bounds(std::span<const Rational> values, int n, BoundFamily family);

std::int64_t f_value(std::int64_t j, std::int64_t m1, std::int64_t m2);

std::int64_t ceil_cube_root(std::int64_t x);
struct ShiftParameters {
  std::int64_t m1 = 0;  // ceil(n^(1/3))
  std::int64_t m2 = 0;  // ceil(n^(2/3))
};
ShiftParameters shift_parameters(std::int64_t n);

// The counting expression for the number of distinct entries after the shift.
Rational distinct_count_bound(std::int64_t n, const ShiftParameters& p);

// Throws InvalidArgument for n < 5.
MuLambda build_low_complexity_lambda(const CInducedSpec& spec);

std::size_t count_distinct(std::span<const Rational> values);

// Compares the tight subsets of the odd-red perfect matchings of ctx.doubled().
bool same_face_check(const Constraint& original, const Constraint& transformed, const TransferContext& ctx);
bool same_face_check(const Constraint& original, const Constraint& transformed,
                     const OddRedMatchingSet& vertices);

struct SamplerOptions {
  std::int64_t mu_range = 5;      // mu in [-mu_range, mu_range] \ {0}
  std::int64_t lambda_range = 10;  // integer part of each lambda entry
  bool half_shifts = true;         // optionally add +1/2 on V+ and -1/2 on V-
};
// Random mu/lambda whose image of an integral matrix is integral.
MuLambda sample_integral_mu_lambda(int n, std::mt19937_64& rng, const SamplerOptions& options = {});

struct SearchResult {
  MuLambda best;
  std::size_t best_distinct = 0;
  std::size_t start_distinct = 0;
  std::size_t evaluations = 0;
};
// Randomized local search over integer lambda in [-bound, bound] with mu = 1.
// Returns the best representation seen; this is an empirical minimum only.
SearchResult search_low_complexity(const CoefficientMatrix& m, std::int64_t bound, std::uint64_t seed,
                                   std::size_t iterations);

}  // namespace oddred
