#include "oddred/rational.hpp"

#include <cctype>
#include <limits>

#include "oddred/errors.hpp"

namespace oddred {

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw FormatError("empty integer in rational literal");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw FormatError("invalid rational literal '" + std::string(s) + "'");
    }
  }
  std::string text(s.front() == '+' ? s.substr(1) : s);
  return Integer(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(trim(text.substr(0, slash)));
  Integer den = parse_integer(trim(text.substr(slash + 1)));
  if (den == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

Integer common_denominator(std::span<const Rational> values) {
  Integer lcm = 1;
  for (const auto& v : values) {
    if (v.get_den() != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  }
  return lcm;
}

std::optional<std::int64_t> to_int64(const Integer& value) {
  if (!mpz_fits_slong_p(value.get_mpz_t())) return std::nullopt;
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return static_cast<std::int64_t>(value.get_si());
}

std::optional<IntVector> scaled_to_int64(std::span<const Rational> values, const Integer& scale) {
  IntVector out;
  out.reserve(values.size());
  Integer scaled;
  for (const auto& v : values) {
    if (!mpz_divisible_p(scale.get_mpz_t(), v.get_den_mpz_t())) {
      throw InvalidArgument("scale is not a multiple of every denominator");
    }
    mpz_divexact(scaled.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    scaled *= v.get_num();
    auto small = to_int64(scaled);
    if (!small) return std::nullopt;
    out.push_back(*small);
  }
  return out;
}

RationalVector to_rational(std::span<const std::int64_t> values) {
  RationalVector out;
  out.reserve(values.size());
  for (auto v : values) out.emplace_back(static_cast<long>(v));
  return out;
}

}  // namespace oddred
