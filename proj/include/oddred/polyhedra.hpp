#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <span>
#include <variant>
#include <vector>

#include "oddred/errors.hpp"
#include "oddred/rational.hpp"

namespace oddred {

enum class Sense { GreaterEqual, Equal };

struct Constraint {
  RationalVector coefficients;
  Rational rhs;
  Sense sense = Sense::GreaterEqual;

  std::size_t dimension() const { return coefficients.size(); }
  Rational evaluate(std::span<const Rational> x) const;
  Rational evaluate_int(std::span<const std::int64_t> x) const;
  // Sum of coefficients over a 0/1 support given as coordinate indices.
  Rational evaluate_support(std::span<const int> support) const;
  bool satisfied_by(std::span<const Rational> x) const;
  bool tight_at(std::span<const Rational> x) const { return evaluate(x) == rhs; }

  bool operator==(const Constraint&) const = default;
};

// Integer multiple of a constraint for fast evaluation on 0/1 supports.
struct ScaledConstraint {
  IntVector coefficients;
  std::int64_t rhs = 0;

  std::int64_t evaluate_support(std::span<const int> support) const;
};
std::optional<ScaledConstraint> scale_to_int64(const Constraint& c);

struct FacetCertificate {
  Constraint constraint;
  int polytope_dim = 0;
  // An affinely (or linearly, for the dominant) independent subset of tight points
  // whose size proves face_dim.
  std::vector<RationalVector> tight_generators;
  int face_dim = 0;
};

// Incremental exact rank. Rows are reduced fraction-free against the current basis
// with gcd content removal; int64 arithmetic with an mpz fallback on overflow.
class RankAccumulator {
 public:
  explicit RankAccumulator(std::size_t dimension);

  // Returns true when the vector increased the rank.
  bool add(std::span<const std::int64_t> v);
  bool add(std::span<const Rational> v);

  int rank() const { return static_cast<int>(pivots_.size()); }
  std::size_t dimension() const { return dimension_; }
  bool full() const { return pivots_.size() == dimension_; }

 private:
  bool add_integer(std::vector<Integer> v);
  std::optional<bool> add_small(IntVector v);
  void promote();

  std::size_t dimension_;
  bool big_ = false;
  std::vector<std::size_t> pivots_;
  std::vector<IntVector> small_rows_;
  std::vector<std::vector<Integer>> big_rows_;
};

int rank(std::span<const RationalVector> vectors);
int rank(std::span<const IntVector> vectors);

// Throws InvalidArgument on empty input.
int affine_dimension(std::span<const RationalVector> points);
int affine_dimension(std::span<const IntVector> points);
// Indices of a maximal affinely independent subset (first point always included).
// Stops early once the subset spans max_dimension dimensions.
std::vector<std::size_t> affine_basis(std::span<const IntVector> points, std::optional<int> max_dimension = std::nullopt);

Integer determinant(std::vector<std::vector<Integer>> matrix);
// Bareiss in int64 with 128-bit intermediates; falls back to mpz on overflow.
Integer determinant(std::span<const IntVector> matrix);

struct Inside {
  RationalVector weights;  // one per generator
};
struct Outside {
  Constraint separator;  // valid for every generator, violated by the query
};
using Membership = std::variant<Inside, Outside>;

Membership conv_membership(std::span<const RationalVector> generators, std::span<const Rational> x);

// Thrown by tight_set when a generator violates the constraint.
class ValidityError : public Error {
 public:
  ValidityError(std::size_t index, Rational value);
  std::size_t index() const { return index_; }
  const Rational& value() const { return value_; }

 private:
  std::size_t index_;
  Rational value_;
};

std::vector<RationalVector> tight_set(std::span<const RationalVector> generators, const Constraint& c);
std::vector<std::size_t> tight_indices(std::span<const RationalVector> generators, const Constraint& c);

}  // namespace oddred
