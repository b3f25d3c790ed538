#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "ptolemy/bigint.hpp"
#include "ptolemy/diagram.hpp"
#include "ptolemy/intpoly.hpp"

namespace ptolemy::qpoly {

/// [n] = 1 + q + ... + q^(n-1); [0] = 0.
IntPoly q_int(int n);

/// [n]! = [n][n-1]...[1]; [0]! = 1.
IntPoly q_factorial(int n);

/// Gaussian binomial with the binom_ext conventions: 1 when top == bottom for
/// any integer, 0 when bottom < 0, top < bottom or top < 0.
IntPoly q_binom(std::int64_t top, std::int64_t bottom);

/// [sum parts]! / prod [part]!. Throws std::invalid_argument on a negative part.
IntPoly q_multinom(std::span<const std::int64_t> parts);
IntPoly q_multinom(std::initializer_list<std::int64_t> parts);

/// The cyclic sieving polynomial for Ptolemy diagrams with the given stats:
/// the q-analogue of count_ptolemy, with the division by [N] checked exact.
IntPoly csp_polynomial(const RegionStats& s);

/// The d-th cyclotomic polynomial.
IntPoly cyclotomic(int d);

/// A polynomial reduced modulo the d-th cyclotomic polynomial, i.e. its value
/// at a primitive d-th root of unity written in the basis 1, w, w^2, ...
struct RootValue {
  IntPoly residue;
  int order = 1;

  bool is_integer() const { return residue.is_constant(); }
  /// Throws NonIntegralRootValue unless is_integer().
  BigInt value() const;

  friend bool operator==(const RootValue&, const RootValue&) = default;
  friend std::ostream& operator<<(std::ostream& os, const RootValue& v) {
    return os << v.residue << " (mod Phi_" << v.order << ")";
  }
};

/// The value at a primitive root of unity is not a rational integer.
class NonIntegralRootValue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RootValue reduce_at_root(const IntPoly& p, int order);

/// p(w) for a primitive order-th root of unity w, computed exactly in
/// Z[q]/(Phi_order). Throws NonIntegralRootValue if the residue is not constant.
BigInt eval_at_primitive_root(const IntPoly& p, int order);

/// q-Lucas: binom(floor(a/d), floor(b/d)) * [a mod d choose b mod d] at w_d,
/// as an element of Z[w_d]. It is a rational integer when d divides b (or the
/// outer binomial vanishes), but not in general.
RootValue q_lucas_binom_at_root(std::int64_t top, std::int64_t bottom, int order);

}  // namespace ptolemy::qpoly
