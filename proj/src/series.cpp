#include "ptolemy/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ptolemy::series {

namespace {

using Key = Series::Key;
using Slice = Series::Slice;

void accumulate_product(Slice& out, const Slice& a, const Slice& b) {
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      const Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
      out[k] += ca * cb;
    }
  }
}

void drop_zeros(Slice& s) {
  std::erase_if(s, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

Series::Series(int max_degree) : max_degree_(max_degree) {
  if (max_degree < 0) throw std::invalid_argument("series truncation degree must be >= 0");
  slices_.resize(static_cast<std::size_t>(max_degree) + 1);
}

Series Series::monomial(int max_degree, Monomial mono, const BigInt& c) {
  Series s(max_degree);
  if (mono.z <= max_degree) s.add_term(mono.z, {mono.x, mono.y1, mono.y2}, c);
  s.prune();
  return s;
}

void Series::add_term(int z, const Key& key, const BigInt& c) {
  slices_[static_cast<std::size_t>(z)][key] += c;
}

void Series::prune() {
  for (Slice& s : slices_) drop_zeros(s);
}

BigInt Series::coefficient(Monomial mono) const {
  if (mono.z < 0 || mono.z > max_degree_) return 0;
  const Slice& s = slices_[static_cast<std::size_t>(mono.z)];
  const auto it = s.find({mono.x, mono.y1, mono.y2});
  return it == s.end() ? BigInt(0) : it->second;
}

bool Series::is_zero() const {
  return std::all_of(slices_.begin(), slices_.end(), [](const Slice& s) { return s.empty(); });
}

std::map<Monomial, BigInt> Series::terms() const {
  std::map<Monomial, BigInt> out;
  for (std::size_t z = 0; z < slices_.size(); ++z) {
    for (const auto& [k, c] : slices_[z]) out.emplace(Monomial{int(z), k[0], k[1], k[2]}, c);
  }
  return out;
}

std::size_t Series::term_count() const {
  std::size_t n = 0;
  for (const Slice& s : slices_) n += s.size();
  return n;
}

Series Series::truncated(int max_degree) const {
  if (max_degree > max_degree_) {
    throw std::invalid_argument("cannot raise the truncation degree of a series");
  }
  Series out(max_degree);
  std::copy_n(slices_.begin(), max_degree + 1, out.slices_.begin());
  return out;
}

Series operator+(const Series& a, const Series& b) {
  Series out(std::min(a.max_degree_, b.max_degree_));
  for (int z = 0; z <= out.max_degree_; ++z) {
    const auto i = static_cast<std::size_t>(z);
    out.slices_[i] = a.slices_[i];
    for (const auto& [k, c] : b.slices_[i]) out.slices_[i][k] += c;
  }
  out.prune();
  return out;
}

Series operator-(const Series& a, const Series& b) {
  Series out(std::min(a.max_degree_, b.max_degree_));
  for (int z = 0; z <= out.max_degree_; ++z) {
    const auto i = static_cast<std::size_t>(z);
    out.slices_[i] = a.slices_[i];
    for (const auto& [k, c] : b.slices_[i]) out.slices_[i][k] -= c;
  }
  out.prune();
  return out;
}

Series operator*(const Series& a, const Series& b) {
  Series out(std::min(a.max_degree_, b.max_degree_));
  const int top = out.max_degree_;
  for (int za = 0; za <= top; ++za) {
    const Slice& sa = a.slices_[static_cast<std::size_t>(za)];
    if (sa.empty()) continue;
    for (int zb = 0; za + zb <= top; ++zb) {
      const Slice& sb = b.slices_[static_cast<std::size_t>(zb)];
      if (sb.empty()) continue;
      accumulate_product(out.slices_[static_cast<std::size_t>(za + zb)], sa, sb);
    }
  }
  out.prune();
  return out;
}

bool operator==(const Series& a, const Series& b) {
  return a.max_degree_ == b.max_degree_ && a.slices_ == b.slices_;
}

Series geom_inverse(const Series& s) {
  if (!s.slices_[0].empty()) {
    throw std::invalid_argument("geom_inverse needs a series without constant term in z");
  }
  // G = 1 + s G, solved one z-degree at a time.
  Series g(s.max_degree_);
  g.slices_[0][{0, 0, 0}] = 1;
  for (int n = 1; n <= s.max_degree_; ++n) {
    Slice& out = g.slices_[static_cast<std::size_t>(n)];
    for (int i = 1; i <= n; ++i) {
      accumulate_product(out, s.slices_[static_cast<std::size_t>(i)],
                         g.slices_[static_cast<std::size_t>(n - i)]);
    }
    drop_zeros(out);
  }
  return g;
}

Series pointed(const Series& s) {
  Series out(s.max_degree_);
  for (int z = 0; z <= s.max_degree_; ++z) {
    const auto i = static_cast<std::size_t>(z);
    for (const auto& [k, c] : s.slices_[i]) out.slices_[i][k] = c * z;
  }
  out.prune();
  return out;
}

Series scale_exponents(const Series& s, int factor) {
  return scale_exponents(s, factor, s.max_degree());
}

Series scale_exponents(const Series& s, int factor, int max_degree) {
  if (factor < 1) throw std::invalid_argument("scale factor must be >= 1");
  if (max_degree > factor * (s.max_degree_ + 1) - 1) {
    throw std::invalid_argument("scaled series is not known up to the requested degree");
  }
  Series out(max_degree);
  for (int z = 0; z <= s.max_degree_ && z * factor <= max_degree; ++z) {
    for (const auto& [k, c] : s.slices_[static_cast<std::size_t>(z)]) {
      out.slices_[static_cast<std::size_t>(z * factor)][{k[0] * factor, k[1] * factor,
                                                         k[2] * factor}] = c;
    }
  }
  return out;
}

Series divide_by_z(const Series& s) {
  detail::note_exactness_check();
  if (!s.slices_[0].empty()) {
    throw ExactnessError("divide_by_z: series has a z-free term");
  }
  if (s.max_degree_ == 0) return Series(0);
  Series out(s.max_degree_ - 1);
  for (int z = 1; z <= s.max_degree_; ++z) {
    out.slices_[static_cast<std::size_t>(z - 1)] = s.slices_[static_cast<std::size_t>(z)];
  }
  return out;
}

namespace {

Series cells_marker(int degree) {
  return Series::monomial(degree, {.y1 = 1}) + Series::monomial(degree, {.y2 = 1});
}

Series ptolemy_rhs(const Series& p) {
  const int D = p.max_degree();
  const Series z = Series::monomial(D, {.z = 1});
  const Series x = Series::monomial(D, {.x = 1});
  const Series p2 = p * p;
  return z + x * p2 + cells_marker(D) * (p2 * p) * geom_inverse(p);
}

}  // namespace

Series solve_ptolemy_gf(int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("solve_ptolemy_gf needs degree >= 1");
  // Each step fixes at least one more z-degree, so max_degree + 1 steps suffice.
  Series p = Series::monomial(max_degree, {.z = 1});
  for (int step = 0; step <= max_degree; ++step) {
    Series next = ptolemy_rhs(p);
    if (next == p) return p;
    p = std::move(next);
  }
  throw std::logic_error("fixed-point iteration for the Ptolemy series did not converge");
}

Series functional_equation_residual(const Series& p) { return p - ptolemy_rhs(p); }

Series invariant_gf(int order, int max_degree) {
  if (order < 2) throw std::invalid_argument("rotation order must be >= 2");
  if (max_degree < 0) throw std::invalid_argument("degree must be >= 0");
  // Work one degree higher; the final division by z brings it back.
  const int top = max_degree + 1;
  const int base = (top + order - 1) / order;
  const Series p = solve_ptolemy_gf(std::max(base, 1));
  const Series p_bar = scale_exponents(p, order, top);
  const Series pointed_bar = scale_exponents(pointed(p), order, top);

  const Series cells = cells_marker(top);
  const Series after_first = cells * geom_inverse(p_bar);
  Series center(top);
  if (order == 2) {
    center = Series::one(top) + p_bar * after_first;
  } else if (order == 3) {
    center = Series::monomial(top, {.x = 1}) + p_bar * after_first;
  } else {
    center = after_first;
  }
  return divide_by_z(pointed_bar * center);
}

std::string to_csv(const Series& s) {
  std::ostringstream out;
  out << "n,a,b,c,value\n";
  for (const auto& [mono, c] : s.terms()) {
    out << mono.z << ',' << mono.x << ',' << mono.y1 << ',' << mono.y2 << ',' << c << '\n';
  }
  return out.str();
}

}  // namespace ptolemy::series
