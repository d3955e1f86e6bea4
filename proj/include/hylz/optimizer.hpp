#pragma once

// Variational minimization of the helium-like functionals.
//
// Inner problem: at fixed exponents the energy is a Rayleigh quotient in b,
// minimized exactly by the lowest root of (N + N^T)/2 v = mu S v.
// Outer problem: a Nelder-Mead simplex over (xi1, xi2).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hylz/errors.hpp"
#include "hylz/functionals.hpp"
#include "hylz/nelder_mead.hpp"
#include "hylz/reference_data.hpp"

namespace hylz {

enum class SeedStrategy { heuristic, table_seed };

struct OptimizerConfig {
  SeedStrategy xi_init_strategy = SeedStrategy::heuristic;
  double outer_tol = 1e-9;      // hartree
  int max_outer_iters = 500;
  double simplex_scale = 0.05;  // initial simplex edge, fraction of Z
  int order = 0;                // 0 selects default_order(Z)
  RadialWeight weight = RadialWeight::as_printed;
  bool ordered_search = true;   // keep the simplex in xi1 <= xi2
  int restarts = 0;             // extra seeded restarts, off by default
  std::uint64_t restart_seed = 0x5eed;

  void validate() const {
    if (!(outer_tol > 0)) throw DomainError("optimizer: outer_tol must be positive");
    if (max_outer_iters < 1) throw DomainError("optimizer: max_outer_iters must be >= 1");
    if (!(simplex_scale > 0)) throw DomainError("optimizer: simplex_scale must be positive");
    if (order < 0 || order > max_order) throw DomainError("optimizer: order must lie in [0, 3] (0 = auto)");
    if (restarts < 0) throw DomainError("optimizer: restarts must be >= 0");
  }
};

/// Basis size used by the reference tables: three correlation terms up to
/// Z = 56, two beyond.
inline int default_order(int z) { return z <= 56 ? 3 : 2; }

struct LinearSolution {
  std::vector<double> coeffs;  // b_0 = 1
  double energy = 0;
};

struct VariationalResult {
  double energy = 0;
  HylleraasState state;
  ModelParameters params;  // pairing matches state after canonicalization
  int outer_iters = 0;
  int evaluations = 0;
  bool converged = false;
  std::vector<double> energy_history;  // accepted best energy per outer iteration
};

/// Exact minimization over the correlation coefficients at fixed exponents.
inline LinearSolution solve_linear(double xi1, double xi2, const ModelParameters& params, int order) {
  const auto m = overlap_and_numerator_rows(xi1, xi2, params, order);
  const Eigen::LLT<Eigen::MatrixXd> llt(m.overlap);
  if (llt.info() != Eigen::Success) throw DomainError("solve_linear: overlap matrix is not positive definite");
  const Eigen::MatrixXd sym = 0.5 * (m.numerator + m.numerator.transpose());
  const Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(sym, m.overlap);
  if (ges.info() != Eigen::Success) throw DomainError("solve_linear: generalized eigensolve failed");

  const Eigen::VectorXd v = ges.eigenvectors().col(0);
  if (!(std::abs(v(0)) > 1e-12 * v.norm())) {
    std::string raw;
    for (Eigen::Index q = 0; q < v.size(); ++q) raw += (q ? ", " : "") + std::to_string(v(q));
    throw DomainError("solve_linear: leading coefficient vanishes, raw eigenvector (" + raw + ")");
  }
  LinearSolution out;
  out.coeffs.resize(static_cast<std::size_t>(v.size()));
  for (Eigen::Index q = 0; q < v.size(); ++q) out.coeffs[static_cast<std::size_t>(q)] = v(q) / v(0);
  out.coeffs[0] = 1.0;
  out.energy = -0.5 * (xi1 * xi1 + xi2 * xi2) + ges.eigenvalues()(0);
  return out;
}

inline LinearSolution solve_linear(double xi1, double xi2, int z, ModelKind kind, int order) {
  return solve_linear(xi1, xi2, ModelParameters::for_model(z, kind), order);
}

/// Starting exponents (xi1, xi2); xi1 carries (A0, B0).
inline std::pair<double, double> initial_exponents(int z, ModelKind kind, SeedStrategy strategy,
                                                   const ReferenceData& data = ReferenceData::embedded()) {
  if (strategy == SeedStrategy::table_seed) {
    const auto& r = data.row(z);
    return kind == ModelKind::schrodinger ? std::pair{r.lambda1, r.lambda2} : std::pair{r.xi1, r.xi2};
  }
  return {z - 0.55, z + 1.1};
}

/// Minimize over (xi1, xi2) starting from the given exponents.
///
/// The seed is canonicalized first, so its order fixes which orbital powers
/// ride with the smaller exponent. With ordered_search the simplex then stays
/// in xi1 <= xi2 and cannot cross into the basin of the other pairing.
inline VariationalResult solve_from(double xi1, double xi2, const ModelParameters& params, const OptimizerConfig& cfg) {
  cfg.validate();
  const int order = cfg.order == 0 ? default_order(params.z) : cfg.order;
  HylleraasState seed{xi1, xi2, {1.0}};
  ModelParameters p = params;
  p.weight = cfg.weight;
  canonicalize(seed, p);
  xi1 = seed.xi1;
  xi2 = seed.xi2;

  auto objective = [&](const std::vector<double>& x) {
    if (!(x[0] > 0) || !(x[1] > 0)) return std::numeric_limits<double>::infinity();
    if (cfg.ordered_search && x[0] > x[1]) return std::numeric_limits<double>::infinity();
    try {
      return solve_linear(x[0], x[1], p, order).energy;
    } catch (const DomainError&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  NelderMeadOptions nm;
  nm.f_tol = cfg.outer_tol;
  nm.max_iterations = cfg.max_outer_iters;
  const double step = cfg.simplex_scale * p.z;

  auto best = nelder_mead(objective, {xi1, xi2}, {step, step}, nm);
  int iters = best.iterations;
  int evals = best.evaluations;
  std::vector<double> history = best.history;

  std::mt19937_64 rng(cfg.restart_seed);
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);
  for (int r = 0; r < cfg.restarts; ++r) {
    std::vector<double> start{std::max(1e-3, best.x[0] + step * jitter(rng)),
                              std::max(1e-3, best.x[1] + step * jitter(rng))};
    if (cfg.ordered_search && start[0] > start[1]) std::swap(start[0], start[1]);
    auto trial = nelder_mead(objective, start, {step, step}, nm);
    iters += trial.iterations;
    evals += trial.evaluations;
    if (trial.f < best.f) {
      best = trial;
      history.push_back(trial.f);
    }
  }
  if (!std::isfinite(best.f)) throw ConvergenceError("optimizer: no feasible point found");

  const auto lin = solve_linear(best.x[0], best.x[1], p, order);
  VariationalResult res;
  res.state = {best.x[0], best.x[1], lin.coeffs};
  res.params = p;
  canonicalize(res.state, res.params);
  res.energy = lin.energy;
  res.outer_iters = iters;
  res.evaluations = evals;
  res.converged = best.converged;
  res.energy_history = std::move(history);
  return res;
}

/// Full variational solve for charge z.
inline VariationalResult solve_full(int z, ModelKind kind, const OptimizerConfig& cfg = {},
                                    const ReferenceData& data = ReferenceData::embedded()) {
  detail::check_charge(z);
  const auto [xi1, xi2] = initial_exponents(z, kind, cfg.xi_init_strategy, data);
  return solve_from(xi1, xi2, ModelParameters::for_model(z, kind), cfg);
}

} // namespace hylz
