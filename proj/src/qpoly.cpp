#include "ptolemy/qpoly.hpp"

#include <string>

#include "ptolemy/count.hpp"

namespace ptolemy::qpoly {

namespace {

// 1 - q^n
IntPoly one_minus_q_pow(std::int64_t n) {
  return IntPoly::constant(1) - IntPoly::monomial(static_cast<int>(n));
}

}  // namespace

IntPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int needs n >= 0");
  return IntPoly(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

IntPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial needs n >= 0");
  IntPoly r = IntPoly::constant(1);
  for (int i = 2; i <= n; ++i) r = r * q_int(i);
  return r;
}

IntPoly q_binom(std::int64_t top, std::int64_t bottom) {
  if (top == bottom) return IntPoly::constant(1);
  if (bottom < 0 || top < bottom || top < 0) return {};
  if (bottom > top - bottom) bottom = top - bottom;
  // [top]! / ([bottom]! [top-bottom]!) as a running quotient: after step i it
  // equals [top-bottom+i choose i], so every division is exact.
  IntPoly r = IntPoly::constant(1);
  for (std::int64_t i = 1; i <= bottom; ++i) {
    r = r * one_minus_q_pow(top - bottom + i);
    r = divide_exact(r, one_minus_q_pow(i), "q_binom");
  }
  return r;
}

IntPoly q_multinom(std::span<const std::int64_t> parts) {
  IntPoly r = IntPoly::constant(1);
  std::int64_t running = 0;
  for (std::int64_t p : parts) {
    if (p < 0) throw std::invalid_argument("q-multinomial part must be non-negative");
    running += p;
    r = r * q_binom(running, p);
  }
  return r;
}

IntPoly q_multinom(std::initializer_list<std::int64_t> parts) {
  return q_multinom(std::span<const std::int64_t>(parts.begin(), parts.size()));
}

IntPoly csp_polynomial(const RegionStats& s) {
  if (s.degree < 1 || s.triangles < 0 || s.cliques < 0 || s.empty_cells < 0) {
    throw std::invalid_argument("invalid stats for csp_polynomial");
  }
  const std::int64_t N = s.degree;
  const std::int64_t k = s.triangles;
  const std::int64_t big = static_cast<std::int64_t>(s.cliques) + s.empty_cells;
  const IntPoly numerator = q_multinom({N - 1, k, s.cliques, s.empty_cells}) *
                            q_binom(N - 2 - k - big, big - 1);
  return divide_exact(numerator, q_int(static_cast<int>(N)), "csp_polynomial: division by [N]");
}

IntPoly cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic needs d >= 1");
  IntPoly r = IntPoly::monomial(d) - IntPoly::constant(1);
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) r = divide_exact(r, cyclotomic(e), "cyclotomic");
  }
  return r;
}

BigInt RootValue::value() const {
  if (!is_integer()) {
    throw NonIntegralRootValue("value at a primitive " + std::to_string(order) +
                               "-th root of unity is " + to_string(residue) +
                               " (in powers of the root), not an integer");
  }
  return residue.coefficient(0);
}

RootValue reduce_at_root(const IntPoly& p, int order) {
  return RootValue{divmod(p, cyclotomic(order)).remainder, order};
}

BigInt eval_at_primitive_root(const IntPoly& p, int order) {
  return reduce_at_root(p, order).value();
}

RootValue q_lucas_binom_at_root(std::int64_t top, std::int64_t bottom, int order) {
  if (top < 0 || bottom < 0) throw std::invalid_argument("q-Lucas needs non-negative arguments");
  if (order < 2) throw std::invalid_argument("q-Lucas needs order >= 2");
  const BigInt outer = binom_ext(top / order, bottom / order);
  if (outer == 0) return RootValue{IntPoly(), order};
  const RootValue inner = reduce_at_root(q_binom(top % order, bottom % order), order);
  return RootValue{IntPoly::constant(outer) * inner.residue, order};
}

}  // namespace ptolemy::qpoly
