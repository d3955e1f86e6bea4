#pragma once

// Helium-like ground-state energy functionals in a Hylleraas basis
//
//   psi = (phi_1(r1) phi_2(r2) + phi_2(r1) phi_1(r2)) * sum_i b_i r12^i
//
// evaluated as the Rayleigh quotient
//
//   E = -(xi1^2 + xi2^2)/2 + b.N.b / b.S.b
//
// The standard Schrodinger functional and the corrected one share this
// code path: the former is the corrected one with every coupling zeroed.

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hylz/couplings.hpp"
#include "hylz/errors.hpp"
#include "hylz/integrals.hpp"

namespace hylz {

enum class ModelKind { schrodinger, improved };

inline std::string_view to_string(ModelKind kind) {
  return kind == ModelKind::schrodinger ? "schrodinger" : "improved";
}

/// How the orbital powers r^A enter the integrals. as_printed keeps the
/// integer powers of the matrix element as written, which is what the
/// reference energies were computed with; shifted adds 2A (direct) and
/// A0 + A1 (exchange) to the radial powers.
enum class RadialWeight { as_printed, shifted };

/// Which orbital powers ride with xi1. standard: xi1 carries (A0, B0).
enum class Pairing { standard, swapped };

inline constexpr int max_order = 3;

struct OrbitalPowers {
  double a = 0;  // radial power A_p
  double b = 0;  // sine power B_p
};

struct ModelParameters {
  int z = 1;
  OrbitalPowers first;   // rides with xi1
  OrbitalPowers second;  // rides with xi2
  double c = 0;
  RadialWeight weight = RadialWeight::as_printed;
  Pairing pairing = Pairing::standard;

  static ModelParameters zero(int z) {
    detail::check_charge(z);
    ModelParameters p;
    p.z = z;
    return p;
  }

  static ModelParameters from_exponents(int z, const BasisExponents<double>& e) {
    detail::check_charge(z);
    ModelParameters p;
    p.z = z;
    p.first = {e.a0, e.b0};
    p.second = {e.a1, e.b1};
    p.c = e.c;
    return p;
  }

  static ModelParameters from_deltas(int z, const DeltaSet<double>& d) { return from_exponents(z, basis_exponents(d)); }

  static ModelParameters for_model(int z, ModelKind kind) {
    return kind == ModelKind::schrodinger ? zero(z) : from_exponents(z, couplings(z).exponents);
  }

  /// Exchange the roles of the two orbitals.
  ModelParameters swapped() const {
    ModelParameters p = *this;
    std::swap(p.first, p.second);
    p.pairing = pairing == Pairing::standard ? Pairing::swapped : Pairing::standard;
    return p;
  }
};

struct HylleraasState {
  double xi1 = 1;
  double xi2 = 1;
  std::vector<double> coeffs{1.0};  // b_0 = 1

  int order() const { return static_cast<int>(coeffs.size()) - 1; }

  void validate() const {
    if (!(xi1 > 0) || !(xi2 > 0) || !std::isfinite(xi1) || !std::isfinite(xi2)) {
      throw DomainError("orbital exponents must be positive and finite");
    }
    if (coeffs.empty() || order() > max_order) throw DomainError("order must lie in [0, 3]");
    if (coeffs.front() != 1.0) throw DomainError("leading correlation coefficient must be 1");
  }
};

/// Order xi1 <= xi2, moving the orbital powers along with the exponents.
inline void canonicalize(HylleraasState& state, ModelParameters& params) {
  if (state.xi1 > state.xi2) {
    std::swap(state.xi1, state.xi2);
    params = params.swapped();
  }
}

// Numerator bookkeeping. Each term contributes, for the orbital o it is
// attached to and basis row i,
//
//   coefficient(i, xi_o, A_o, B_o, C, Z) *
//     [ I(2 xi_o, 2 xi_o', own, other, i+j+k_offset)
//     + I(xi1 + xi2, xi1 + xi2, own, other, i+j+k_offset) ]
//
// summed over both orbitals.
enum class TermCoefficient {
  nuclear,          // xi (A + i/2 + 1) - Z
  centrifugal,      // -i/2 (A - B - C)
  r12_centrifugal,  // -i/2 (A + B + C + i + 1)
  r12_own,          // +i/2 xi
  r12_other,        // -i/2 xi
  r12_mixed,        // +i/2 (A - B - C)
  repulsion,        // 1/2
};

struct NumeratorTerm {
  std::string_view label;
  TermCoefficient coefficient;
  int own_power;
  int other_power;
  int k_offset;
};

inline constexpr std::array<NumeratorTerm, 7> numerator_terms{{
    {"nuclear", TermCoefficient::nuclear, -1, 0, 0},
    {"centrifugal", TermCoefficient::centrifugal, -2, 0, 0},
    {"r12_centrifugal", TermCoefficient::r12_centrifugal, 0, 0, -2},
    {"r12_own", TermCoefficient::r12_own, 1, 0, -2},
    {"r12_other", TermCoefficient::r12_other, -1, 2, -2},
    {"r12_mixed", TermCoefficient::r12_mixed, -2, 2, -2},
    {"repulsion", TermCoefficient::repulsion, 0, 0, -1},
}};

inline double term_coefficient(TermCoefficient kind, int i, double xi, const OrbitalPowers& o, double c, int z) {
  const double half_i = 0.5 * i;
  switch (kind) {
    case TermCoefficient::nuclear: return xi * (o.a + half_i + 1) - z;
    case TermCoefficient::centrifugal: return -half_i * (o.a - o.b - c);
    case TermCoefficient::r12_centrifugal: return -half_i * (o.a + o.b + c + i + 1);
    case TermCoefficient::r12_own: return half_i * xi;
    case TermCoefficient::r12_other: return -half_i * xi;
    case TermCoefficient::r12_mixed: return half_i * (o.a - o.b - c);
    case TermCoefficient::repulsion: return 0.5;
  }
  return 0;
}

/// Terms that vanish identically on row 0 (and would otherwise ask for k < -1).
inline bool scales_with_row(TermCoefficient kind) {
  return kind != TermCoefficient::nuclear && kind != TermCoefficient::repulsion;
}

struct FunctionalMatrices {
  Eigen::MatrixXd overlap;    // S, symmetric positive definite
  Eigen::MatrixXd numerator;  // N, asymmetric as assembled
};

/// S and N for the given exponents. Rows carry the i/2 factors.
inline FunctionalMatrices overlap_and_numerator_rows(double xi1, double xi2, const ModelParameters& params, int order,
                                                     IntegralCache* cache = nullptr) {
  if (!(xi1 > 0) || !(xi2 > 0)) throw DomainError("orbital exponents must be positive");
  if (order < 0 || order > max_order) throw DomainError("order must lie in [0, 3]");
  IntegralCache local;
  IntegralCache& integrals = cache ? *cache : local;

  const bool shifted = params.weight == RadialWeight::shifted;
  const double sum = xi1 + xi2;
  const double exchange_shift = shifted ? params.first.a + params.second.a : 0.0;

  struct Side {
    double own_xi, other_xi, own_shift, other_shift;
    const OrbitalPowers* powers;
  };
  const std::array<Side, 2> sides{{
      {xi1, xi2, shifted ? 2 * params.first.a : 0.0, shifted ? 2 * params.second.a : 0.0, &params.first},
      {xi2, xi1, shifted ? 2 * params.second.a : 0.0, shifted ? 2 * params.first.a : 0.0, &params.second},
  }};

  auto pair = [&](const Side& s, int own, int other, int k) {
    return integrals({2 * s.own_xi, 2 * s.other_xi, own + s.own_shift, other + s.other_shift, k}) +
           integrals({sum, sum, own + exchange_shift, other + exchange_shift, k});
  };

  const int n = order + 1;
  FunctionalMatrices m{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m.overlap(i, j) = pair(sides[0], 0, 0, i + j);
      double v = 0;
      for (const auto& side : sides) {
        for (const auto& term : numerator_terms) {
          if (i == 0 && scales_with_row(term.coefficient)) continue;
          const double coef = term_coefficient(term.coefficient, i, side.own_xi, *side.powers, params.c, params.z);
          v += coef * pair(side, term.own_power, term.other_power, i + j + term.k_offset);
        }
      }
      m.numerator(i, j) = v;
    }
  }
  return m;
}

namespace detail {

inline double rayleigh_energy(double xi1, double xi2, std::span<const double> b, const ModelParameters& params) {
  const int order = static_cast<int>(b.size()) - 1;
  const auto m = overlap_and_numerator_rows(xi1, xi2, params, order);
  const Eigen::Map<const Eigen::VectorXd> v(b.data(), static_cast<Eigen::Index>(b.size()));
  const double den = v.dot(m.overlap * v);
  if (!(den > 0)) throw DomainError("singular Rayleigh quotient: b.S.b <= 0");
  return -0.5 * (xi1 * xi1 + xi2 * xi2) + v.dot(m.numerator * v) / den;
}

} // namespace detail

/// Energy of a state with explicit model parameters.
inline double energy(const HylleraasState& state, const ModelParameters& params) {
  state.validate();
  return detail::rayleigh_energy(state.xi1, state.xi2, state.coeffs, params);
}

/// Energy of a state for charge z; xi1 carries (A0, B0).
inline double energy(const HylleraasState& state, int z, ModelKind kind) {
  return energy(state, ModelParameters::for_model(z, kind));
}

/// Energy with every coefficient multiplied by c; equal to energy(state)
/// by homogeneity of the quotient.
inline double functional_value_scaling(const HylleraasState& state, const ModelParameters& params, double c) {
  state.validate();
  if (!(c > 0)) throw DomainError("scale factor must be positive");
  std::vector<double> scaled(state.coeffs);
  for (double& x : scaled) x *= c;
  return detail::rayleigh_energy(state.xi1, state.xi2, scaled, params);
}

} // namespace hylz
