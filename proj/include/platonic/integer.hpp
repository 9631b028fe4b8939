#ifndef PLATONIC_INTEGER_HPP
#define PLATONIC_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace platonic {

/// Arbitrary-precision signed integer used for every sequence value and target.
using Integer = boost::multiprecision::cpp_int;

/// Thrown when an argument lies outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal cross-check fails. Never expected in practice;
/// when raised it means a proven claim did not hold for the computed data.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const Integer& value) { return value.str(); }

/// Parses an optionally signed decimal string. Rejects anything else,
/// including whitespace, hex prefixes and empty input.
inline Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) {
    throw DomainError("not a decimal integer: '" + std::string(text) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw DomainError("not a decimal integer: '" + std::string(text) + "'");
    }
  }
  // Leading zeros would select octal in the string constructor.
  const auto first = std::min(text.find_first_not_of('0', pos), text.size() - 1);
  Integer value{std::string(text.substr(first))};
  return text[0] == '-' ? Integer(-value) : value;
}

namespace detail {

// Division whose exactness is guaranteed by the caller's algebra.
inline Integer exact_div(const Integer& numerator, long divisor) {
  Integer quotient;
  Integer remainder;
  boost::multiprecision::divide_qr(numerator, Integer(divisor), quotient,
                                   remainder);
  if (remainder != 0) {
    throw ConsistencyError("inexact division of " + numerator.str() + " by " +
                           std::to_string(divisor));
  }
  return quotient;
}

// Non-negative residue in [0, modulus).
inline std::uint64_t mod_floor(const Integer& value, std::uint64_t modulus) {
  Integer r = value % modulus;
  if (r < 0) r += modulus;
  return r.convert_to<std::uint64_t>();
}

}  // namespace detail
}  // namespace platonic

#endif  // PLATONIC_INTEGER_HPP
