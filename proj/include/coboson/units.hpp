#pragma once

// SI layer for the atomic-hydrogen condensate example.

#include <cmath>
#include <numbers>

#include "coboson/analytic.hpp"
#include "coboson/errors.hpp"

namespace coboson::units {

// CODATA 2018. h and k_B are exact in the 2019 SI.
namespace constants {
inline constexpr double planck = 6.62607015e-34;           // J s
inline constexpr double boltzmann = 1.380649e-23;          // J / K
inline constexpr double bohr_radius = 5.29177210903e-11;   // m
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
inline constexpr double hydrogen_atom_mass = 1.00782503223 * atomic_mass_unit;  // 1H, kg
}  // namespace constants

struct GasSample {
  double density;        // m^-3
  double particle_mass;  // kg
  double trap_size_b;    // m

  GasSample(double n, double m, double b) : density(n), particle_mass(m), trap_size_b(b) {
    detail::require(n > 0.0 && m > 0.0 && b > 0.0, "GasSample: all fields must be positive");
  }
};

/// Ideal-gas T_c = h^2/(2 pi m k_B) (n / zeta(3/2))^{2/3}, in kelvin.
inline double critical_temperature(const GasSample& g) {
  using namespace constants;
  const double prefactor =
      planck * planck / (2.0 * std::numbers::pi * g.particle_mass * boltzmann);
  return prefactor * std::pow(g.density / riemann_zeta(1.5), 2.0 / 3.0);
}

/// T_0 = T_c zeta(3)^{1/3}, from (T/T_0)^3 zeta(3) = (T/T_c)^3.
inline double pseudo_critical_temperature(double t_c) {
  detail::require(t_c >= 0.0, "pseudo_critical_temperature: temperature must be nonnegative");
  return t_c * std::cbrt(riemann_zeta(3.0));
}

struct PurityEstimate {
  double purity;
  bool maximally_entangled;  // purity < 1e-6
  bool validity_warning;     // purity > 1: estimate outside its range
};

// Prefactor 33/(4 sqrt(2 pi)) kept as published; 3^3 = 27 would be the
// natural reading, and either way the experimental b gives P << 1.
inline constexpr double kPurityPrefactorNumerator = 33.0;

/// Proton-electron purity estimate P = 33/(4 sqrt(2 pi)) (a_0/b)^3.
inline PurityEstimate proton_purity(const GasSample& g) {
  const double ratio = constants::bohr_radius / g.trap_size_b;
  const double p = kPurityPrefactorNumerator / (4.0 * std::sqrt(2.0 * std::numbers::pi)) *
                   ratio * ratio * ratio;
  return {p, p < 1e-6, p > 1.0};
}

}  // namespace coboson::units
