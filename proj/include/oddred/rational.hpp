#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oddred {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;

// Canonical "p/q" form with q > 0; integers are written "p/1".
std::string to_string(const Rational& value);

// Accepts "p", "p/q" and surrounding whitespace. Throws FormatError.
Rational parse_rational(std::string_view text);

bool is_integral(const Rational& value);

// Least common multiple of all denominators (1 for an empty span).
Integer common_denominator(std::span<const Rational> values);

// Exact integer image of values * scale, or nullopt if an entry does not fit in int64.
std::optional<IntVector> scaled_to_int64(std::span<const Rational> values, const Integer& scale);

std::optional<std::int64_t> to_int64(const Integer& value);

RationalVector to_rational(std::span<const std::int64_t> values);

}  // namespace oddred
