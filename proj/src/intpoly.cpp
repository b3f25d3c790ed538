#include "ptolemy/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ptolemy::qpoly {

IntPoly::IntPoly(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coefficients)
    : c_(coefficients.begin(), coefficients.end()) {
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(int power, const BigInt& c) {
  if (power < 0) throw std::invalid_argument("negative power");
  std::vector<BigInt> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return c_[static_cast<std::size_t>(power)];
}

BigInt IntPoly::at_one() const {
  BigInt s = 0;
  for (const BigInt& c : c_) s += c;
  return s;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t j = 0; j < b.c_.size(); ++j) {
    if (b.c_[j] == 0) continue;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] != 0) out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return IntPoly(std::move(out));
}

DivModResult divmod(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
  const BigInt& lead = den.leading();
  if (lead != 1 && lead != -1) {
    throw std::invalid_argument("divisor must have leading coefficient +1 or -1");
  }
  const int dd = den.degree();
  if (num.degree() < dd) return {IntPoly{}, num};

  // Only the non-zero lower coefficients of the divisor are touched, which
  // keeps division by sparse divisors such as 1 - q^i linear.
  std::vector<std::pair<int, BigInt>> lower;
  for (int i = 0; i < dd; ++i) {
    if (den.coefficient(i) != 0) lower.emplace_back(i, den.coefficient(i));
  }
  std::vector<BigInt> rem = num.coefficients();
  std::vector<BigInt> quo(static_cast<std::size_t>(num.degree() - dd) + 1);
  for (int top = num.degree(); top >= dd; --top) {
    BigInt& head = rem[static_cast<std::size_t>(top)];
    if (head == 0) continue;
    const BigInt factor = lead == 1 ? head : BigInt(-head);
    quo[static_cast<std::size_t>(top - dd)] = factor;
    const int shift = top - dd;
    for (const auto& [i, c] : lower) rem[static_cast<std::size_t>(shift + i)] -= factor * c;
    head = 0;
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly divide_exact(const IntPoly& num, const IntPoly& den, const char* what) {
  detail::note_exactness_check();
  DivModResult r = divmod(num, den);
  if (!r.remainder.is_zero()) {
    throw ExactnessError(std::string(what) + ": " + to_string(num) + " is not divisible by " +
                         to_string(den));
  }
  return std::move(r.quotient);
}

IntPoly reduce_mod_cyclic(const IntPoly& p, int n) {
  if (n < 1) throw std::invalid_argument("cyclic modulus must be >= 1");
  std::vector<BigInt> out(static_cast<std::size_t>(n));
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) out[i % static_cast<std::size_t>(n)] += c[i];
  return IntPoly(std::move(out));
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const BigInt c = p.coefficient(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << 'q';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }

}  // namespace ptolemy::qpoly
