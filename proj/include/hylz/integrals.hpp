#pragma once

// Correlated three-dimensional radial integral
//
//   I(a, b, i, j, k) = int_0^inf int_0^inf int_|r1-r2|^(r1+r2)
//                        r1^(i+1) r2^(j+1) r12^(k+1) e^(-a r1 - b r2) dr12 dr2 dr1
//
// for real i, j and integer k >= -1. The r12 integral is polynomial,
// ((r1+r2)^(k+2) - |r1-r2|^(k+2)) / (k+2); after binomial expansion only odd
// powers of the smaller radius survive, and each wedge r2 < r1 (or r1 < r2)
// reduces to
//
//   W(a, b; u, v) = int_0^inf x^u e^(-a x) int_0^x y^v e^(-b y) dy dx
//                 = sum_n Gamma(u+v+2+n) b^n / ((v+1)_(n+1) (a+b)^(u+v+2+n))
//
// which follows from the power series of the lower incomplete gamma
// function. All terms are positive, so the series is summed without
// cancellation; it converges like (b/(a+b))^n.

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "hylz/errors.hpp"

namespace hylz {

struct IntegralKey {
  double a = 1;  // rate of r1
  double b = 1;  // rate of r2
  double i = 0;  // power offset of r1
  double j = 0;  // power offset of r2
  int k = 0;     // power offset of r12

  /// Convergence domain: a, b > 0, k >= -1, i, j > -3 and i + j + k > -6.
  void validate() const {
    if (!(a > 0) || !(b > 0) || !std::isfinite(a) || !std::isfinite(b)) {
      throw DomainError("hylleraas integral: rates must be positive and finite");
    }
    if (k < -1) throw DomainError("hylleraas integral: k must be >= -1");
    if (!(i > -3) || !(j > -3) || !std::isfinite(i) || !std::isfinite(j)) {
      throw DomainError("hylleraas integral: radial powers must exceed -3");
    }
    if (!(i + j + k + 6 > 0)) throw DomainError("hylleraas integral: divergent at the origin");
  }

  IntegralKey swapped() const { return {b, a, j, i, k}; }
};

namespace detail {

inline constexpr int wedge_max_terms = 200000;

/// int_0^inf x^u e^(-a x) int_0^x y^v e^(-b y) dy dx
inline double wedge(double a, double b, double u, double v) {
  const double s = v + 1;
  const double c = u + v + 2;
  if (!(s > 0) || !(c > 0)) throw DomainError("wedge integral diverges");
  const double t = b / (a + b);

  if (t > 0.75 && u > -1) {
    // Complementary wedge converges like (a/(a+b))^n.
    const double log_full = std::lgamma(u + 1) + std::lgamma(v + 1) - (u + 1) * std::log(a) - (v + 1) * std::log(b);
    if (log_full > 700) throw DomainError("hylleraas integral overflows");
    return std::exp(log_full) - wedge(b, a, v, u);
  }

  const double log_first = std::lgamma(c) - c * std::log(a + b) - std::log(s);
  if (log_first > 700) throw DomainError("hylleraas integral overflows");
  double term = std::exp(log_first);
  double sum = term;
  for (int n = 0; n < wedge_max_terms; ++n) {
    const double ratio = t * (c + n) / (s + n + 1);
    term *= ratio;
    sum += term;
    // The ratio tends to t; bound the tail with whichever is larger.
    const double bound = std::max(ratio, t);
    if (bound < 1 && term * bound / (1 - bound) <= 1e-17 * sum) return sum;
  }
  throw ConvergenceError("wedge series did not converge");
}

inline double binomial(int n, int m) {
  double r = 1;
  for (int q = 1; q <= m; ++q) r = r * (n - m + q) / q;
  return r;
}

} // namespace detail

/// Closed-form I(a, b, i, j, k).
///
/// I(a, b, i, j, k) == I(b, a, j, i, k) holds bit for bit.
inline double hylleraas_integral(const IntegralKey& key) {
  key.validate();
  const int n = key.k + 2;
  double total = 0;
  for (int m = 1; m <= n; m += 2) {
    const double lower = detail::wedge(key.a, key.b, key.i + 1 + (n - m), key.j + 1 + m);  // r2 < r1
    const double upper = detail::wedge(key.b, key.a, key.j + 1 + (n - m), key.i + 1 + m);  // r1 < r2
    total += detail::binomial(n, m) * (lower + upper);
  }
  return 2 * total / n;
}

/// Memo of closed-form integrals keyed on the exact bit patterns of the key.
/// Safe for concurrent readers and writers.
class IntegralCache {
 public:
  double operator()(const IntegralKey& key) {
    const Bits bits = to_bits(key);
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(bits); it != table_.end()) return it->second;
    }
    const double value = hylleraas_integral(key);
    std::unique_lock lock(mutex_);
    table_.emplace(bits, value);
    return value;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  struct Bits {
    std::uint64_t a, b, i, j;
    int k;
    bool operator==(const Bits&) const = default;
  };
  struct BitsHash {
    std::size_t operator()(const Bits& x) const noexcept {
      std::uint64_t h = 1469598103934665603ull;
      for (std::uint64_t w : {x.a, x.b, x.i, x.j, static_cast<std::uint64_t>(x.k)}) {
        h = (h ^ w) * 1099511628211ull;
        h ^= h >> 29;
      }
      return static_cast<std::size_t>(h);
    }
  };

  static Bits to_bits(const IntegralKey& key) {
    return {std::bit_cast<std::uint64_t>(key.a), std::bit_cast<std::uint64_t>(key.b),
            std::bit_cast<std::uint64_t>(key.i), std::bit_cast<std::uint64_t>(key.j), key.k};
  }

  mutable std::shared_mutex mutex_;
  std::unordered_map<Bits, double, BitsHash> table_;
};

} // namespace hylz
