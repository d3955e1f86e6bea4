#pragma once

// Exact one-electron eigensolutions of the corrected hydrogen-like problem
//
//   (-1/2 lap - Z/r - d3/r^2 - d2/(r cos)^2 + d1/(r sin)^2) phi = E phi
//
// in separated form phi = Phi(phi) Theta(theta) R(r). Wavefunctions are
// returned un-normalized; radial_norm_squared() integrates |R|^2 r^2 when a
// normalization is needed.

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "hylz/couplings.hpp"
#include "hylz/errors.hpp"

namespace hylz {

/// Quantum-number tuple (n, l, m, J, P).
///
/// Both P = 0 and P = 1 are accepted for every m; the caller picks the
/// branch. Only J = 0 with (m = 0 or P = 1) reduces to Bohr levels in n
/// when the couplings vanish.
struct Orbital {
  int n = 1;
  int l = 0;
  int m = 0;
  int j = 0;
  int p = 0;

  void validate() const {
    if (n < 1) throw DomainError("orbital: n must be >= 1");
    if (l < 0 || l > n - 1) throw DomainError("orbital: l must lie in [0, n-1]");
    if (m < -l || m > l) throw DomainError("orbital: m must lie in [-l, l]");
    if (j != 0 && j != 1) throw DomainError("orbital: J must be 0 or 1");
    if (p != 0 && p != 1) throw DomainError("orbital: P must be 0 or 1");
  }

  bool reduces_to_bohr() const { return j == 0 && (m == 0 || p == 1); }
};

struct OrbitalSolution {
  Orbital orbital;
  int z = 1;
  DeltaSet<double> deltas;
  double t = 0;               // leading cosine power
  double big_l = 0;           // effective angular momentum L
  double sine_power = 0;      // (-1)^(P+1) sqrt(m^2 + 2 d1)
  double radial_power = 0;    // -1/2 + sqrt((L + 1/2)^2 - 2 d3)
  double xi = 0;              // orbital exponent, 1/bohr
  double energy = 0;          // -xi^2 / 2, hartree
  std::vector<double> angular_coeffs;  // a_k, a_0 = 1
  std::vector<double> radial_coeffs;   // b_k, b_0 = 1
};

namespace detail {

inline double sign_pow(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

inline bool is_integer(double x) { return std::floor(x) == x; }

/// cos(theta)^power, defined for negative cosines only at integer powers.
inline double cosine_power(double cosine, double power) {
  if (cosine > 0) return std::pow(cosine, power);
  if (cosine == 0) {
    if (power > 0) return 0.0;
    if (power == 0) return 1.0;
    throw DomainError("angular wavefunction: negative cosine power at theta = pi/2");
  }
  if (!is_integer(power)) throw DomainError("angular wavefunction: non-integer power of a negative cosine");
  return std::pow(cosine, power);
}

} // namespace detail

/// Radial series coefficients b_0..b_{count-1}. Asking for one more than
/// n - l terms exposes the terminating zero.
inline std::vector<double> radial_recursion(double xi, double radial_power, int n, int l, int count) {
  std::vector<double> b;
  b.reserve(static_cast<std::size_t>(count));
  b.push_back(1.0);
  const double two_g1 = 2 * radial_power + 1;  // sqrt((2L+1)^2 - 8 d3)
  for (int k = 1; k < count; ++k) {
    const double denom = k * (k + two_g1);
    if (denom == 0) throw DomainError("radial recursion: vanishing denominator at k = " + std::to_string(k));
    b.push_back(-2 * xi * (n - l - k) / denom * b.back());
  }
  return b;
}

/// Solve one orbital for explicitly given couplings.
inline OrbitalSolution solve_orbital(const Orbital& orb, int z, const DeltaSet<double>& d) {
  orb.validate();
  if (z < 1) throw DomainError("solve_orbital: Z must be >= 1");
  const double r = detail::checked_sqrt(0.25 - 2 * d.d2, "T (sqrt(1/4 - 2 d2))");
  const double sine_root = detail::checked_sqrt(double(orb.m) * orb.m + 2 * d.d1, "L (sqrt(m^2 + 2 d1))");

  OrbitalSolution sol;
  sol.orbital = orb;
  sol.z = z;
  sol.deltas = d;
  const int lm = orb.l - std::abs(orb.m);
  // 1/2 -+ r written so the J = 0 branch never subtracts nearly equal numbers.
  const double half_shift = orb.j == 0 ? 2 * d.d2 / (0.5 + r) : 0.5 + r;
  sol.t = lm + half_shift;
  sol.big_l = sol.t - detail::sign_pow(orb.p) * sine_root;
  sol.sine_power = detail::sign_pow(orb.p + 1) * sine_root;

  const double lp = sol.big_l + 0.5;
  const double x = lp * lp - 2 * d.d3;
  const double root = detail::checked_sqrt(x, "radial power");
  sol.radial_power = (sol.big_l * (sol.big_l + 1) - 2 * d.d3) / (root + 0.5);

  const double denom = orb.n - orb.l + sol.radial_power;
  if (denom <= 0) throw DomainError("solve_orbital: non-positive effective principal number");
  sol.xi = z / denom;
  sol.energy = -0.5 * sol.xi * sol.xi;

  const int kmax = lm / 2;
  sol.angular_coeffs.push_back(1.0);
  for (int k = 1; k <= kmax; ++k) {
    const double den = 2.0 * k * (2 * sol.big_l + 1 - 2 * k);
    if (den == 0) throw DomainError("angular recursion: vanishing denominator at k = " + std::to_string(k));
    const double tk = sol.t - 2 * k;
    sol.angular_coeffs.push_back(-((tk + 2) * (tk + 1) + 2 * d.d2) / den * sol.angular_coeffs.back());
  }
  sol.radial_coeffs = radial_recursion(sol.xi, sol.radial_power, orb.n, orb.l, orb.n - orb.l);
  return sol;
}

/// Solve one orbital with the model couplings of charge z.
inline OrbitalSolution solve_orbital(const Orbital& orb, int z) { return solve_orbital(orb, z, couplings(z).deltas); }

struct RadialSample {
  double value = 0, first = 0, second = 0;
};

/// R(r), R'(r), R''(r) from the closed form.
inline RadialSample radial_derivatives(const OrbitalSolution& sol, double r) {
  if (!(r > 0)) throw DomainError("radial derivatives need r > 0");
  RadialSample s;
  const double decay = std::exp(-sol.xi * r);
  for (std::size_t k = 0; k < sol.radial_coeffs.size(); ++k) {
    const double p = static_cast<double>(k) + sol.radial_power;
    const double f = sol.radial_coeffs[k] * std::pow(r, p) * decay;
    const double g = p / r - sol.xi;
    s.value += f;
    s.first += g * f;
    s.second += (g * g - p / (r * r)) * f;
  }
  return s;
}

/// Un-normalized R(r). At r = 0 with a negative radial power the amplitude
/// diverges and +infinity is returned.
inline double radial_wavefunction(const OrbitalSolution& sol, double r) {
  if (r < 0 || std::isnan(r)) throw DomainError("radial wavefunction needs r >= 0");
  if (r == 0) {
    if (sol.radial_power < 0) return std::numeric_limits<double>::infinity();
    return sol.radial_power == 0 ? sol.radial_coeffs.front() : 0.0;
  }
  return radial_derivatives(sol, r).value;
}

/// Un-normalized Theta(theta) for theta in [0, pi].
inline double angular_wavefunction(const OrbitalSolution& sol, double theta) {
  if (!(theta >= 0 && theta <= std::numbers::pi)) throw DomainError("angular wavefunction needs theta in [0, pi]");
  const double sine = (theta == 0 || theta == std::numbers::pi) ? 0.0 : std::sin(theta);
  double sine_factor = 1.0;
  if (sine == 0) {
    if (sol.sine_power < 0) throw DomainError("angular wavefunction: negative sine power at a pole");
    sine_factor = sol.sine_power == 0 ? 1.0 : 0.0;
  } else {
    sine_factor = std::pow(sine, sol.sine_power);
  }
  const double cosine = theta == std::numbers::pi / 2 ? 0.0 : std::cos(theta);
  double sum = 0;
  for (std::size_t k = 0; k < sol.angular_coeffs.size(); ++k) {
    sum += sol.angular_coeffs[k] * detail::cosine_power(cosine, sol.t - 2.0 * static_cast<double>(k));
  }
  return sine_factor * sum;
}

/// Phi(phi): cos(m phi) for m >= 0, sin(|m| phi) otherwise.
inline double azimuthal_wavefunction(int m, double phi) {
  return m >= 0 ? std::cos(m * phi) : std::sin(-m * phi);
}

/// Residual of the radial equation at r (unscaled).
inline double radial_residual(const OrbitalSolution& sol, double r) {
  const auto s = radial_derivatives(sol, r);
  const double centrifugal = sol.big_l * (sol.big_l + 1) - 2 * sol.deltas.d3;
  return s.second + 2 / r * s.first + (2.0 * sol.z / r - centrifugal / (r * r) + 2 * sol.energy) * s.value;
}

struct AngularSample {
  double value = 0, first = 0, second = 0;
};

/// Theta, Theta', Theta'' at interior theta with cos(theta) > 0.
inline AngularSample angular_derivatives(const OrbitalSolution& sol, double theta) {
  if (!(theta > 0 && theta < std::numbers::pi / 2)) throw DomainError("angular derivatives need theta in (0, pi/2)");
  const double sn = std::sin(theta);
  const double cs = std::cos(theta);
  const double cot = cs / sn;
  const double tn = sn / cs;
  AngularSample s;
  for (std::size_t k = 0; k < sol.angular_coeffs.size(); ++k) {
    const double tau = sol.t - 2.0 * static_cast<double>(k);
    const double sigma = sol.sine_power;
    const double f = sol.angular_coeffs[k] * std::pow(sn, sigma) * std::pow(cs, tau);
    const double g = sigma * cot - tau * tn;
    s.value += f;
    s.first += g * f;
    s.second += (g * g - sigma / (sn * sn) - tau / (cs * cs)) * f;
  }
  return s;
}

inline double angular_residual(const OrbitalSolution& sol, double theta) {
  const auto s = angular_derivatives(sol, theta);
  const double sn = std::sin(theta);
  const double cs = std::cos(theta);
  const double m2 = double(sol.orbital.m) * sol.orbital.m + 2 * sol.deltas.d1;
  const double ll = sol.big_l * (sol.big_l + 1);
  return s.second + cs / sn * s.first + (-m2 / (sn * sn) + 2 * sol.deltas.d2 / (cs * cs) + ll) * s.value;
}

/// Integral of |R|^2 r^2 over [0, inf) by exp-sinh quadrature.
inline double radial_norm_squared(const OrbitalSolution& sol, double rel_tol = 1e-12) {
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [&](double r) {
    if (r <= 0) return 0.0;
    const double v = radial_derivatives(sol, r).value;
    return v * v * r * r;
  };
  double err = 0;
  const double value = integrator.integrate(f, rel_tol, &err);
  if (err > 10 * rel_tol * std::abs(value)) throw ConvergenceError("radial normalization did not converge");
  return value;
}

/// Relativistic correction of the hydrogen-like ground state,
///   -Z^2/2 + (1 - sqrt(1 - (aZ)^2))/a^2 + 0.75 Lamb1S Z^3,
/// rearranged to Z^2 (aZ)^2 / (2 (1 + sqrt(1 - (aZ)^2))^2) + 0.75 Lamb1S Z^3.
inline double dirac_correction(int z, const PhysicalConstants<double>& pc = PhysicalConstants<double>::standard()) {
  const double az = pc.alpha * z;
  if (!(az * az < 1)) throw DomainError("dirac correction needs (alpha Z)^2 < 1");
  const double root = std::sqrt(1 - az * az);
  const double z2 = double(z) * z;
  return z2 * az * az / (2 * (1 + root) * (1 + root)) + 0.75 * pc.lamb_1s * z2 * z;
}

} // namespace hylz
