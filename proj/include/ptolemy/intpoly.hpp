#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "ptolemy/bigint.hpp"

namespace ptolemy::qpoly {

/// Dense polynomial in q with integer coefficients; index i holds the
/// coefficient of q^i. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coefficients);
  IntPoly(std::initializer_list<long long> coefficients);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(int power, const BigInt& c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<BigInt>& coefficients() const { return c_; }
  BigInt coefficient(int power) const;
  const BigInt& leading() const { return c_.back(); }

  /// Value at q = 1.
  BigInt at_one() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

struct DivModResult {
  IntPoly quotient;
  IntPoly remainder;
};

/// Schoolbook division. The divisor's leading coefficient must be +1 or -1;
/// otherwise std::invalid_argument.
DivModResult divmod(const IntPoly& num, const IntPoly& den);

/// num / den, throwing ExactnessError on a non-zero remainder.
IntPoly divide_exact(const IntPoly& num, const IntPoly& den, const char* what);

/// Remainder modulo q^n - 1 (exponents folded mod n).
IntPoly reduce_mod_cyclic(const IntPoly& p, int n);

std::string to_string(const IntPoly& p);
std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace ptolemy::qpoly
