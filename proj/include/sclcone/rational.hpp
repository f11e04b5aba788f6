#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sclcone {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;

/// Thrown when a search or enumeration exceeds its configured node budget.
/// Callers report "unable to certify" instead of returning a partial answer.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Value of q as int64; throws std::overflow_error when q is not a small integer.
std::int64_t to_int64(const Rational& q);

std::int64_t to_int64(const Integer& z);

/// Default node budget for enumerations; honours SCLCONE_MAX_NODES when set.
std::size_t default_max_nodes();

}  // namespace sclcone
