#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ptolemy {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when a division that must be exact leaves a remainder. Seeing one of
/// these means a formula or an implementation is wrong, never bad user input.
class ExactnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Number of exactness guards evaluated since process start (all threads).
std::uint64_t exactness_checks();

namespace detail {
void note_exactness_check();
}

/// Returns num / den, throwing ExactnessError if den does not divide num.
BigInt divide_exact(const BigInt& num, const BigInt& den, const char* what);

/// Floor division rounding toward negative infinity; den must be positive.
constexpr std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

constexpr std::int64_t floor_mod(std::int64_t num, std::int64_t den) {
  return num - den * floor_div(num, den);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace ptolemy
