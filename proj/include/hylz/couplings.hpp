#pragma once

// Z-dependent model constants: the intermediates Lambda1..3, the three
// correction couplings delta1..3 and the non-integer orbital powers derived
// from them.
//
// Two evaluation routes are provided:
//   * lambdas()/deltas(): the production path. Double precision, with every
//     difference of nearly equal quantities rewritten so nothing cancels.
//   * lambdas_literal()/deltas_from_lambdas(): the formulas exactly as
//     written. Instantiated with ExtendedReal they act as the reference
//     the production path is checked against.

#include <array>
#include <cmath>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hylz/errors.hpp"

namespace hylz {

using ExtendedReal = boost::multiprecision::cpp_bin_float_50;

inline constexpr int min_charge = 1;
inline constexpr int max_charge = 99;

template <class Real>
Real from_decimal(const char* text) {
  if constexpr (std::is_floating_point_v<Real>) {
    return static_cast<Real>(std::stod(text));
  } else {
    return Real(text);
  }
}

template <class Real = double>
struct PhysicalConstants {
  Real alpha;    // fine structure constant
  Real lamb_1s;  // hydrogen 1S Lamb shift, hartree
  Real lamb_2s;  // 2S-2P Lamb shift, hartree

  /// The truncated values the reference tables were computed with, not CODATA.
  static PhysicalConstants standard() { return with_alpha(Real(1) / from_decimal<Real>("137.036")); }

  static PhysicalConstants with_alpha(Real a) {
    return {a, from_decimal<Real>("0.5556") * a * a * a, from_decimal<Real>("0.4138") * a * a * a};
  }
};

template <class Real = double>
struct LambdaSet {
  Real l1{}, l2{}, l3{};
  int kdot = 1;
};

template <class Real = double>
struct DeltaSet {
  Real d1{}, d2{}, d3{};
};

template <class Real = double>
struct BasisExponents {
  Real a0{}, a1{}, b0{}, b1{}, c{};

  Real a(int p) const { return p == 0 ? a0 : a1; }
  Real b(int p) const { return p == 0 ? b0 : b1; }
};

namespace detail {

inline void check_charge(int z) {
  if (z < min_charge || z > max_charge) {
    throw DomainError("nuclear charge " + std::to_string(z) + " outside [1, 99]");
  }
}

template <class Real>
Real checked_sqrt(const Real& x, const char* what) {
  using std::sqrt;
  if (x < 0) throw DomainError(std::string("negative radicand in ") + what);
  return sqrt(x);
}

} // namespace detail

/// K-dot = floor(alpha |Z| + 1). Throws once alpha |Z| >= 1.
template <class Real = double>
int kdot(int z, const PhysicalConstants<Real>& pc = PhysicalConstants<Real>::standard()) {
  using std::abs;
  using std::floor;
  if (z < 1) throw DomainError("kdot requires Z >= 1");
  const Real az = pc.alpha * abs(z);
  if (!(az < 1)) throw DomainError("alpha |Z| >= 1: the Lambda square roots are complex");
  return static_cast<int>(floor(az + 1));
}

/// Lambda1..3 exactly as written, for any real type.
template <class Real = double>
LambdaSet<Real> lambdas_literal(int z, const PhysicalConstants<Real>& pc = PhysicalConstants<Real>::standard()) {
  using std::sqrt;
  detail::check_charge(z);
  const int k = kdot(z, pc);
  const Real zr = Real(z);
  const Real kr = Real(k);
  const Real a2 = pc.alpha * pc.alpha;
  const Real root = detail::checked_sqrt(Real(1 - a2 * zr * zr / (kr * kr)), "Lambda (Dirac root)");
  const Real lamb = pc.lamb_1s * a2 * zr * zr * zr / (kr * kr * kr);
  const Real q1 = 2 + Real(1.5) * lamb - 2 * root;
  const Real q2 = 2 - Real(0.5) * lamb - 2 * root;
  const Real s1 = detail::checked_sqrt(q1, "Lambda1");
  const Real s2 = detail::checked_sqrt(q2, "Lambda2");
  const Real twice_az = 2 * pc.alpha * zr;
  LambdaSet<Real> out;
  out.kdot = k;
  out.l1 = (twice_az - (2 * kr - 1) * s1) * (twice_az - (2 * kr - 1) * s1) / q1;
  out.l2 = (twice_az - (2 * kr - 1) * s2) * (twice_az - (2 * kr - 1) * s2) / q2;
  const Real w = 2 * kr + 1 + detail::checked_sqrt(out.l1, "Lambda3 (sqrt Lambda1)");
  const Real kp2 = (kr + 1) * (kr + 1);
  const Real inner = detail::checked_sqrt(Real(kp2 * kp2 - 8 * pc.lamb_2s * a2 * w * w), "Lambda3");
  const Real base = kp2 * w / inner - 2 * kr + 1;
  out.l3 = base * base;
  return out;
}

/// delta1..3 from a LambdaSet, exactly as written.
///
/// delta1 feeds delta2 feeds delta3. A vanishing delta1 makes delta2 a 0/0
/// and raises DegenerateInputError rather than returning NaN.
template <class Real = double>
DeltaSet<Real> deltas_from_lambdas(const LambdaSet<Real>& lam) {
  using std::sqrt;
  const Real u = lam.l2 - lam.l3 + 16;
  const Real disc = detail::checked_sqrt(Real(u * u - 64 * lam.l2 + 64 * lam.l1), "delta1");
  DeltaSet<Real> d;
  d.d1 = (u - disc) * (u - disc) / 2048;
  if (d.d1 == 0) throw DegenerateInputError("delta1 = 0: delta2 is 0/0");
  const Real s = sqrt(2 * d.d1);
  const Real num = 16 * s - lam.l2 + lam.l1;
  d.d2 = Real(1) / 8 - num * num / (1024 * d.d1);
  const Real v = 2 - detail::checked_sqrt(Real(1 - 8 * d.d2), "delta3") - 2 * s;
  d.d3 = v * v / 8 - lam.l1 / 8;
  return d;
}

/// Basis exponents exactly as written.
template <class Real = double>
BasisExponents<Real> basis_exponents_literal(const DeltaSet<Real>& d) {
  using std::sqrt;
  const Real r = detail::checked_sqrt(Real(Real(0.25) - 2 * d.d2), "C");
  const Real s = detail::checked_sqrt(Real(2 * d.d1), "B_p");
  BasisExponents<Real> e;
  const Real base0 = 1 - r - s;
  const Real base1 = 1 - r + s;
  e.a0 = Real(-0.5) + detail::checked_sqrt(Real(base0 * base0 - 2 * d.d3), "A_0");
  e.a1 = Real(-0.5) + detail::checked_sqrt(Real(base1 * base1 - 2 * d.d3), "A_1");
  e.b0 = -s;
  e.b1 = s;
  e.c = Real(0.5) - r;
  return e;
}

/// Lambda1 - 1, Lambda2 - 1, Lambda3 - 9 and Lambda2 - Lambda1 without
/// forming the Lambdas first. Valid for K-dot = 1, i.e. the whole supported
/// charge range.
template <class Real = double>
struct LambdaDeviations {
  Real l1_minus_1{}, l2_minus_1{}, l3_minus_9{}, l2_minus_l1{};
};

template <class Real = double>
LambdaDeviations<Real> lambda_deviations(int z, const PhysicalConstants<Real>& pc = PhysicalConstants<Real>::standard()) {
  using std::sqrt;
  detail::check_charge(z);
  if (kdot(z, pc) != 1) throw DomainError("cancellation-safe Lambda path needs K-dot = 1");
  const Real zr = Real(z);
  const Real az = pc.alpha * zr;
  const Real x = az * az;
  const Real root = detail::checked_sqrt(Real(1 - x), "Lambda (Dirac root)");
  const Real two_minus_root = 2 * x / (1 + root);  // 2 - 2 sqrt(1 - x)
  const Real lamb = pc.lamb_1s * pc.alpha * pc.alpha * zr * zr * zr;
  const Real q1 = two_minus_root + Real(1.5) * lamb;
  const Real q2 = two_minus_root - Real(0.5) * lamb;
  const Real s1 = detail::checked_sqrt(q1, "Lambda1");
  const Real s2 = detail::checked_sqrt(q2, "Lambda2");

  // Lambda_i = (g_i - 1)^2 with g_i = 2 alpha Z / sqrt(q_i) close to 2.
  const Real x_minus_r = -x * x / ((1 + root) * (1 + root));
  const Real g1 = 2 * az / s1;
  const Real g2 = 2 * az / s2;
  const Real g1_minus_2 = 2 * (x_minus_r - Real(1.5) * lamb) / (s1 * (az + s1));
  const Real g2_minus_2 = 2 * (x_minus_r + Real(0.5) * lamb) / (s2 * (az + s2));
  const Real g2_minus_g1 = 2 * az * (2 * lamb) / (s1 * s2 * (s1 + s2));

  LambdaDeviations<Real> dev;
  dev.l1_minus_1 = g1 * g1_minus_2;
  dev.l2_minus_1 = g2 * g2_minus_2;
  dev.l2_minus_l1 = g2_minus_g1 * (g1_minus_2 + g2_minus_2 + 2);

  // Lambda3 = (rho - 1)^2 with rho = 4 w / sqrt(16 - c w^2) close to 4.
  const Real sqrt_l1 = sqrt(1 + dev.l1_minus_1);
  const Real w = 3 + sqrt_l1;
  const Real c = 8 * pc.lamb_2s * pc.alpha * pc.alpha;
  const Real sr = detail::checked_sqrt(Real(16 - c * w * w), "Lambda3");
  const Real w_minus_4 = dev.l1_minus_1 / (sqrt_l1 + 1);
  const Real rho_minus_4 = 4 * (w_minus_4 * (w + 4) + c * w * w) / (sr * (w + sr));
  dev.l3_minus_9 = rho_minus_4 * (rho_minus_4 + 6);
  return dev;
}

template <class Real = double>
LambdaSet<Real> lambdas(int z, const PhysicalConstants<Real>& pc = PhysicalConstants<Real>::standard()) {
  const auto dev = lambda_deviations(z, pc);
  return {1 + dev.l1_minus_1, 1 + dev.l2_minus_1, 9 + dev.l3_minus_9, 1};
}

template <class Real = double>
void check_deltas(const DeltaSet<Real>& d) {
  if (d.d1 < 0) throw DomainError("delta1 < 0: B_p exponents are complex");
  if (Real(0.25) - 2 * d.d2 < 0) throw DomainError("0.25 - 2 delta2 < 0: C exponent is complex");
}

/// delta1..3 for nuclear charge z (cancellation-safe double path).
template <class Real = double>
DeltaSet<Real> deltas(int z, const PhysicalConstants<Real>& pc = PhysicalConstants<Real>::standard()) {
  using std::sqrt;
  const auto dev = lambda_deviations(z, pc);
  const Real diff = dev.l2_minus_l1;
  if (diff == 0) throw DegenerateInputError("Lambda1 = Lambda2: delta1 vanishes");
  if (diff < 0) throw DomainError("Lambda2 < Lambda1 outside the validated regime");

  const Real mu = dev.l2_minus_1 - dev.l3_minus_9;  // u - 8
  const Real u = 8 + mu;
  const Real sd = detail::checked_sqrt(Real(u * u - 64 * diff), "delta1");
  const Real t = 64 * diff / (u + sd);  // u - sqrt(u^2 - 64 (L2 - L1))

  DeltaSet<Real> d;
  d.d1 = t * t / 2048;
  const Real s = t / 32;  // sqrt(2 delta1)

  // delta2 = (nu - 1/2)(3/2 - nu)/2 with nu = (u + sd)/32
  const Real nu_minus_half = (mu + (mu * (u + 8) - 64 * diff) / (sd + 8)) / 32;
  d.d2 = nu_minus_half * (1 - nu_minus_half) / 2;

  const Real r8 = detail::checked_sqrt(Real(1 - 8 * d.d2), "delta3");
  const Real eps = 8 * d.d2 / (1 + r8) - 2 * s;
  d.d3 = (eps * (2 + eps) - dev.l1_minus_1) / 8;
  check_deltas(d);
  return d;
}

/// A_p, B_p, C from the couplings (cancellation-safe).
template <class Real = double>
BasisExponents<Real> basis_exponents(const DeltaSet<Real>& d) {
  using std::sqrt;
  check_deltas(d);
  const Real r = sqrt(Real(0.25) - 2 * d.d2);
  const Real s = sqrt(2 * d.d1);
  BasisExponents<Real> e;
  e.c = 2 * d.d2 / (Real(0.5) + r);
  auto radial = [&](const Real& y) {
    // -1/2 + sqrt((1/2 + y)^2 - 2 delta3)
    const Real x = (Real(0.5) + y) * (Real(0.5) + y) - 2 * d.d3;
    const Real root = detail::checked_sqrt(x, "A_p");
    return (y * (1 + y) - 2 * d.d3) / (root + Real(0.5));
  };
  e.a0 = radial(e.c - s);
  e.a1 = radial(e.c + s);
  e.b0 = -s;
  e.b1 = s;
  if (e.a0 <= Real(-0.5) || e.a1 <= Real(-0.5)) throw DomainError("A_p <= -1/2: orbital not normalizable");
  return e;
}

template <class Real = double>
BasisExponents<Real> basis_exponents(int z) {
  return basis_exponents(deltas<Real>(z));
}

struct Couplings {
  LambdaSet<double> lambdas;
  DeltaSet<double> deltas;
  BasisExponents<double> exponents;
};

/// Per-Z couplings, computed once on first use and shared read-only after.
inline const Couplings& couplings(int z) {
  detail::check_charge(z);
  static const std::array<Couplings, max_charge> table = [] {
    std::array<Couplings, max_charge> t{};
    for (int q = min_charge; q <= max_charge; ++q) {
      auto& row = t[static_cast<std::size_t>(q - 1)];
      row.lambdas = lambdas(q);
      row.deltas = deltas(q);
      row.exponents = basis_exponents(row.deltas);
    }
    return t;
  }();
  return table[static_cast<std::size_t>(z - 1)];
}

} // namespace hylz
