#pragma once

// Downhill simplex minimization (Nelder-Mead) with the standard
// reflection / expansion / contraction / shrink moves. Deterministic: the
// same start and options always produce the same sequence of probes.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "hylz/errors.hpp"

namespace hylz {

struct NelderMeadOptions {
  double f_tol = 1e-9;                                                // absolute spread of simplex values
  double rel_noise = 64 * std::numeric_limits<double>::epsilon();     // spread floor relative to |f|
  int max_iterations = 500;
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = std::numeric_limits<double>::infinity();
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
  std::vector<double> history;  // best value after each iteration
};

/// Minimize f starting from x0 with initial edge lengths step. f may return
/// +infinity to mark infeasible points.
template <class F>
NelderMeadResult nelder_mead(F&& f, const std::vector<double>& x0, const std::vector<double>& step,
                             const NelderMeadOptions& opt = {}) {
  const std::size_t n = x0.size();
  if (n == 0 || step.size() != n) throw DomainError("nelder_mead: start and step sizes differ");
  if (!(opt.f_tol > 0) || opt.max_iterations < 1) throw DomainError("nelder_mead: invalid options");

  NelderMeadResult res;
  auto eval = [&](const std::vector<double>& x) {
    ++res.evaluations;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  std::vector<std::vector<double>> pts(n + 1, x0);
  for (std::size_t d = 0; d < n; ++d) pts[d + 1][d] += step[d];
  std::vector<double> vals(n + 1);
  for (std::size_t q = 0; q <= n; ++q) vals[q] = eval(pts[q]);

  std::vector<std::size_t> idx(n + 1);
  auto sort_simplex = [&] {
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::vector<std::vector<double>> p2(n + 1);
    std::vector<double> v2(n + 1);
    for (std::size_t q = 0; q <= n; ++q) {
      p2[q] = pts[idx[q]];
      v2[q] = vals[idx[q]];
    }
    pts.swap(p2);
    vals.swap(v2);
  };

  auto along = [&](const std::vector<double>& centroid, double t) {
    std::vector<double> x(n);
    for (std::size_t d = 0; d < n; ++d) x[d] = centroid[d] + t * (pts[n][d] - centroid[d]);
    return x;
  };

  sort_simplex();
  while (res.iterations < opt.max_iterations) {
    const double spread = vals[n] - vals[0];
    if (std::isfinite(spread) && spread <= std::max(opt.f_tol, opt.rel_noise * std::abs(vals[0]))) {
      res.converged = true;
      break;
    }
    ++res.iterations;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t d = 0; d < n; ++d) centroid[d] += pts[q][d] / static_cast<double>(n);
    }

    const auto xr = along(centroid, -opt.reflection);
    const double fr = eval(xr);
    if (fr < vals[0]) {
      const auto xe = along(centroid, -opt.reflection * opt.expansion);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[n] = xe;
        vals[n] = fe;
      } else {
        pts[n] = xr;
        vals[n] = fr;
      }
    } else if (fr < vals[n - 1]) {
      pts[n] = xr;
      vals[n] = fr;
    } else {
      const bool outside = fr < vals[n];
      const auto xc = along(centroid, outside ? -opt.reflection * opt.contraction : opt.contraction);
      const double fc = eval(xc);
      if (fc < (outside ? fr : vals[n])) {
        pts[n] = xc;
        vals[n] = fc;
      } else {
        for (std::size_t q = 1; q <= n; ++q) {
          for (std::size_t d = 0; d < n; ++d) pts[q][d] = pts[0][d] + opt.shrink * (pts[q][d] - pts[0][d]);
          vals[q] = eval(pts[q]);
        }
      }
    }
    sort_simplex();
    res.history.push_back(vals[0]);
  }
  if (!res.converged) {
    const double spread = vals[n] - vals[0];
    res.converged = std::isfinite(spread) && spread <= std::max(opt.f_tol, opt.rel_noise * std::abs(vals[0]));
  }
  res.x = pts[0];
  res.f = vals[0];
  return res;
}

} // namespace hylz
