#include <atomic>

#include "ptolemy/bigint.hpp"

namespace ptolemy {

namespace {
std::atomic<std::uint64_t> g_checks{0};
}

std::uint64_t exactness_checks() { return g_checks.load(std::memory_order_relaxed); }

namespace detail {
void note_exactness_check() { g_checks.fetch_add(1, std::memory_order_relaxed); }
}  // namespace detail

BigInt divide_exact(const BigInt& num, const BigInt& den, const char* what) {
  detail::note_exactness_check();
  if (den == 0) throw ExactnessError(std::string(what) + ": division by zero");
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw ExactnessError(std::string(what) + ": " + num.str() + " is not divisible by " +
                         den.str());
  }
  return q;
}

}  // namespace ptolemy
