#pragma once

// Independent numerical evaluation of I(a, b, i, j, k) for cross-checking
// the closed form. The r12 integral is done analytically; the remaining
// r1, r2 integrals use nested double-exponential quadrature with the inner
// range split at r2 = r1, where the integrand has a kink.

#include <cmath>
#include <cstddef>
#include <algorithm>
#include <utility>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "hylz/errors.hpp"
#include "hylz/integrals.hpp"

namespace hylz {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  std::size_t max_evaluations = 20'000'000;
};

namespace detail {

/// Odd-binomial part of ((x+y)^n - |x-y|^n) / n: returns sum_{m odd} C(n,m) q^m
/// for q = min/max, so the full moment is 2 max^n sum / n without cancellation.
inline double r12_odd_sum(double q, int n) {
  double sum = 0;
  double qp = q;
  for (int m = 1; m <= n; m += 2) {
    sum += binomial(n, m) * qp;
    qp *= q * q;
  }
  return sum;
}

} // namespace detail

/// Numerical I(a, b, i, j, k). Throws ConvergenceError when the error estimate
/// exceeds rel_tol or the evaluation budget is exhausted.
inline double quadrature_oracle(const IntegralKey& key, const QuadratureOptions& opt = {}) {
  key.validate();
  if (!(opt.rel_tol >= 1e-12 && opt.rel_tol <= 1e-4)) throw DomainError("quadrature oracle: rel_tol must lie in [1e-12, 1e-4]");
  using boost::math::quadrature::exp_sinh;
  using boost::math::quadrature::tanh_sinh;

  const int n = key.k + 2;
  const double inner_tol = opt.rel_tol / 10;
  std::size_t evaluations = 0;
  // Inner (value, error) pairs; only nodes that carry weight are judged.
  std::vector<std::pair<double, double>> inner_log;

  tanh_sinh<double> near;
  exp_sinh<double> tail;
  exp_sinh<double> outer;

  auto integrand = [&](double r1, double r2) {
    ++evaluations;
    if (evaluations > opt.max_evaluations) throw ConvergenceError("quadrature oracle: evaluation budget exhausted");
    if (!(r1 > 0) || !(r2 > 0) || !std::isfinite(r1) || !std::isfinite(r2)) return 0.0;
    const double big = std::max(r1, r2);
    const double q = std::min(r1, r2) / big;
    // Powers combined in log space: the pieces overflow and underflow separately.
    const double log_f = (key.i + 1) * std::log(r1) + (key.j + 1) * std::log(r2) - key.a * r1 - key.b * r2 + n * std::log(big);
    if (log_f < -745) return 0.0;
    return 2 * std::exp(log_f) * detail::r12_odd_sum(q, n) / n;
  };

  auto inner = [&](double r1) {
    if (!(r1 > 0) || !std::isfinite(r1)) return 0.0;
    double e1 = 0, l1 = 0, e2 = 0, l2 = 0;
    // r2 = r1 s keeps the near piece on [0, 1] whatever the size of r1.
    const double lower =
        r1 * near.integrate([&](double s) { return integrand(r1, r1 * s); }, 0.0, 1.0, inner_tol, &e1, &l1);
    e1 *= r1;
    const double upper = tail.integrate([&](double t) { return integrand(r1, r1 + t); }, inner_tol, &e2, &l2);
    const double v = lower + upper;
    inner_log.emplace_back(v, e1 + e2);
    return v;
  };

  double err = 0, l1 = 0;
  const double value = outer.integrate(inner, opt.rel_tol, &err, &l1);
  double peak = 0;
  for (const auto& [v, e] : inner_log) peak = std::max(peak, v);
  bool inner_ok = true;
  for (const auto& [v, e] : inner_log) {
    if (v >= 1e-6 * peak && e > opt.rel_tol * v) inner_ok = false;
  }
  if (!std::isfinite(value) || err > opt.rel_tol * std::abs(value) || !inner_ok) {
    throw ConvergenceError("quadrature oracle: requested tolerance not reached");
  }
  return value;
}

} // namespace hylz
