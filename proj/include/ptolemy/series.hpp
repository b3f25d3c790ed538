#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ptolemy/bigint.hpp"

namespace ptolemy::series {

/// Exponents of z^z x^x y1^y1 y2^y2. In the Ptolemy generating function z
/// marks vertices minus one, x triangles, y1 cliques and y2 empty cells.
struct Monomial {
  int z = 0;
  int x = 0;
  int y1 = 0;
  int y2 = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Formal power series in z, x, y1, y2 with integer coefficients, truncated
/// above z-degree `max_degree`. Coefficients are stored sparsely per z-degree;
/// absent entries are zero.
class Series {
 public:
  using Key = std::array<int, 3>;  // (x, y1, y2)
  using Slice = std::map<Key, BigInt>;

  explicit Series(int max_degree);

  static Series zero(int max_degree) { return Series(max_degree); }
  static Series one(int max_degree) { return monomial(max_degree, {}); }
  /// c * monomial, or zero if the z-exponent exceeds the truncation.
  static Series monomial(int max_degree, Monomial mono, const BigInt& c = 1);

  int max_degree() const { return max_degree_; }
  BigInt coefficient(Monomial mono) const;
  const Slice& slice(int z) const { return slices_.at(static_cast<std::size_t>(z)); }
  bool is_zero() const;
  /// All non-zero terms ordered by monomial.
  std::map<Monomial, BigInt> terms() const;
  std::size_t term_count() const;

  /// Same coefficients, truncated to a (not larger) degree.
  Series truncated(int max_degree) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b);

 private:
  void add_term(int z, const Key& key, const BigInt& c);
  void prune();

  int max_degree_;
  std::vector<Slice> slices_;

  friend Series geom_inverse(const Series& s);
  friend Series pointed(const Series& s);
  friend Series scale_exponents(const Series& s, int factor, int max_degree);
  friend Series divide_by_z(const Series& s);
};

/// 1 / (1 - s). Throws std::invalid_argument if s has a non-zero constant term.
Series geom_inverse(const Series& s);

/// z * d/dz: multiplies the coefficient of z^n by n.
Series pointed(const Series& s);

/// Substitutes z -> z^f, x -> x^f, y1 -> y1^f, y2 -> y2^f, keeping the
/// truncation degree.
Series scale_exponents(const Series& s, int factor);
/// As above, truncated at `max_degree` instead. Only z-degrees that are
/// multiples of f occur, so the result is exact up to f*(s.max_degree()+1)-1;
/// larger requests throw std::invalid_argument.
Series scale_exponents(const Series& s, int factor, int max_degree);

/// s / z with the truncation degree lowered by one. Throws ExactnessError if s
/// has a z-free term.
Series divide_by_z(const Series& s);

/// The generating function P of Ptolemy diagrams up to z^max_degree, the
/// fixed point of P = z + x P^2 + (y1 + y2) P^3 / (1 - P) reached by
/// iterating from P = z.
Series solve_ptolemy_gf(int max_degree);

/// Left side minus right side of the functional equation for `p`.
Series functional_equation_residual(const Series& p);

/// Generating function of the Ptolemy diagrams invariant under rotation by
/// 2*pi/order, up to z^max_degree, assembled from pointed diagrams around a
/// central region.
Series invariant_gf(int order, int max_degree);

/// CSV table `n,a,b,c,value` of the non-zero coefficients.
std::string to_csv(const Series& s);

}  // namespace ptolemy::series
