#include "ptolemy/count.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ptolemy {

namespace {

void check_stats(const RegionStats& s) {
  if (s.degree < 1 || s.triangles < 0 || s.cliques < 0 || s.empty_cells < 0) {
    throw std::invalid_argument("invalid stats: degree must be >= 1 and counts non-negative");
  }
}

BigInt factorial(std::int64_t n) {
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

BigInt binom_ext(std::int64_t top, std::int64_t bottom) {
  if (top == bottom) return 1;
  if (bottom < 0 || top < bottom || top < 0) return 0;
  if (bottom > top - bottom) bottom = top - bottom;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= bottom; ++i) {
    r *= top - bottom + i;
    r /= i;  // r is binom(top - bottom + i, i) here, always integral
  }
  return r;
}

BigInt multinom_ext(std::span<const std::int64_t> parts) {
  std::int64_t total = 0;
  BigInt denom = 1;
  for (std::int64_t p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial part must be non-negative");
    total += p;
    denom *= factorial(p);
  }
  return divide_exact(factorial(total), denom, "multinomial");
}

BigInt multinom_ext(std::initializer_list<std::int64_t> parts) {
  return multinom_ext(std::span<const std::int64_t>(parts.begin(), parts.size()));
}

BigInt count_ptolemy(const RegionStats& s) {
  check_stats(s);
  const std::int64_t N = s.degree;
  const std::int64_t k = s.triangles;
  const std::int64_t big = static_cast<std::int64_t>(s.cliques) + s.empty_cells;
  const BigInt product = multinom_ext({N - 1, k, s.cliques, s.empty_cells}) *
                         binom_ext(N - 2 - k - big, big - 1);
  return divide_exact(product, N, "count_ptolemy: division by N");
}

BigInt count_invariant(const RegionStats& s, int order) {
  check_stats(s);
  const std::int64_t n = s.degree + 1;
  const std::int64_t d = order;
  if (d < 2 || n % d != 0) {
    throw std::invalid_argument("rotation order " + std::to_string(order) +
                                " must be >= 2 and divide " + std::to_string(n));
  }
  const std::int64_t N = s.degree;
  const std::int64_t k = s.triangles;
  const std::int64_t l = s.cliques;
  const std::int64_t m = s.empty_cells;

  if (N - 2 - k - l - m < l + m - 1) return 0;
  const auto mod = [d](std::int64_t v) { return floor_mod(v, d); };
  const bool all_zero = mod(k) == 0 && mod(l) == 0 && mod(m) == 0;
  const bool central_triangle = d == 3 && mod(k) == 1 && mod(l) == 0 && mod(m) == 0;
  const bool central_cell =
      mod(k) == 0 && ((mod(l) == 0 && mod(m) == 1) || (mod(l) == 1 && mod(m) == 0));
  if (!((d == 2 && all_zero) || central_triangle || central_cell)) return 0;

  const std::int64_t sector = n / d;
  return multinom_ext({sector - 1, floor_div(k, d), floor_div(l, d), floor_div(m, d)}) *
         binom_ext(floor_div(N - 2 - k - l - m, d), floor_div(l + m - 1, d));
}

BigInt count_invariant_by_power(const RegionStats& s, std::int64_t steps) {
  check_stats(s);
  if (steps < 0) throw std::invalid_argument("rotation steps must be >= 0");
  const std::int64_t n = s.degree + 1;
  const std::int64_t order = n / std::gcd(n, steps);
  if (order == 1) return count_ptolemy(s);
  return count_invariant(s, static_cast<int>(order));
}

BigInt count_perp_invariant(const RegionStats& s, std::int64_t power) {
  check_stats(s);
  if (power < 0) throw std::invalid_argument("perpendicular power must be >= 0");
  // perp^b = rotate(., b) for even b, since nc is an involution on Ptolemy
  // diagrams; for odd b it is rotate(nc(.), b).
  if (power % 2 == 0) return count_invariant_by_power(s, power);

  const std::int64_t n = s.degree + 1;
  const std::int64_t order = n / std::gcd(n, power);
  const std::int64_t k = s.triangles;
  if (order == 1) {
    // A == nc(A): exactly the triangulations.
    return (s.cliques == 0 && s.empty_cells == 0) ? count_ptolemy(s) : BigInt(0);
  }
  if (order == 2) {
    if (k % 2 != 0 || s.cliques != s.empty_cells) return 0;
    const std::int64_t half = n / 2;
    const std::int64_t e = s.cliques;
    BigInt pow2 = 1;
    pow2 <<= static_cast<unsigned>(e);
    return pow2 * multinom_ext({half - 1, k / 2, e}) * binom_ext(half - 2 - k / 2 - e, e - 1);
  }
  if (order == 3) {
    if (k % 3 != 1 || s.cliques != 0 || s.empty_cells != 0) return 0;
    return count_invariant(s, 3);
  }
  return 0;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_phi needs n >= 1");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors needs n >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

BigInt count_orbits(const RegionStats& s) {
  check_stats(s);
  const std::int64_t n = s.degree + 1;
  BigInt sum = 0;
  for (std::int64_t d : divisors(n)) {
    const BigInt fixed = d == 1 ? count_ptolemy(s) : count_invariant(s, static_cast<int>(d));
    sum += euler_phi(d) * fixed;
  }
  return divide_exact(sum, n, "count_orbits: division by N+1");
}

std::vector<RegionStats> stats_classes(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<RegionStats> out;
  for (int k = 0; k <= degree; ++k) {
    for (int l = 0; l <= degree; ++l) {
      for (int m = 0; l + m <= degree; ++m) {
        const RegionStats s{degree, k, l, m};
        if (count_ptolemy(s) > 0) out.push_back(s);
      }
    }
  }
  return out;
}

void CountQuery::validate() const {
  check_stats(stats);
  const int symmetric = int(rotation_order.has_value()) + int(rotation_steps.has_value()) +
                        int(perp_power.has_value());
  if (symmetric > 1) {
    throw std::invalid_argument("at most one of rotation order, rotation steps and "
                                "perpendicular power may be given");
  }
  if (rotation_order && (*rotation_order < 2 || (stats.degree + 1) % *rotation_order != 0)) {
    throw std::invalid_argument("rotation order must be >= 2 and divide the polygon size");
  }
  if (rotation_steps && *rotation_steps < 0) throw std::invalid_argument("steps must be >= 0");
  if (perp_power && *perp_power < 1) throw std::invalid_argument("perp power must be >= 1");
}

BigInt count(const CountQuery& q) {
  q.validate();
  if (q.rotation_order) return count_invariant(q.stats, *q.rotation_order);
  if (q.rotation_steps) return count_invariant_by_power(q.stats, *q.rotation_steps);
  if (q.perp_power) return count_perp_invariant(q.stats, *q.perp_power);
  return count_ptolemy(q.stats);
}

}  // namespace ptolemy
