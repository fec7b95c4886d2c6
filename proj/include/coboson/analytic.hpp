#pragma once

// Special functions and the near-maximal-entanglement expansion of the
// harmonic-trap ensemble (x = 1 - delta, delta << 1).

#include <cmath>
#include <numbers>
#include <vector>

#include "coboson/clamped.hpp"
#include "coboson/errors.hpp"
#include "coboson/summation.hpp"

namespace coboson {

/// zeta(l) for real l > 1: direct sum over p < terms plus an Euler-Maclaurin
/// tail from p = terms onward.
inline double riemann_zeta(double l, unsigned terms = 1000) {
  if (!(l > 1.0)) throw domain_error("riemann_zeta: requires l > 1");
  detail::require(terms >= 16, "riemann_zeta: need at least 16 direct terms");
  CompensatedSum acc;
  for (unsigned p = terms - 1; p >= 1; --p) acc += std::pow(static_cast<double>(p), -l);
  const double big_p = static_cast<double>(terms);
  const double f = std::pow(big_p, -l);
  // int_P^inf u^-l du + f(P)/2 - f'(P)/12 + f'''(P)/720 - f^(5)(P)/30240
  acc += big_p * f / (l - 1.0);
  acc += 0.5 * f;
  acc += l * f / (12.0 * big_p);
  acc += -l * (l + 1.0) * (l + 2.0) * f / (720.0 * std::pow(big_p, 3));
  acc += l * (l + 1.0) * (l + 2.0) * (l + 3.0) * (l + 4.0) * f / (30240.0 * std::pow(big_p, 5));
  return acc.value();
}

namespace detail {

// B_0..B_max with B_1 = -1/2.
inline std::vector<double> bernoulli_numbers(unsigned max) {
  std::vector<double> b(max + 1, 0.0);
  b[0] = 1.0;
  for (unsigned m = 1; m <= max; ++m) {
    if (m > 1 && m % 2 == 1) continue;
    double acc = 0.0;
    double binom = 1.0;  // C(m+1, k)
    for (unsigned k = 0; k < m; ++k) {
      acc += binom * b[k];
      binom = binom * static_cast<double>(m + 1 - k) / static_cast<double>(k + 1);
    }
    b[m] = -acc / static_cast<double>(m + 1);
  }
  return b;
}

// zeta(-m) for m >= 0.
inline double zeta_nonpositive(unsigned m, const std::vector<double>& bern) {
  if (m == 0) return -0.5;
  return -bern[m + 1] / static_cast<double>(m + 1);
}

inline constexpr double kSmallGamma = 1.0;
inline constexpr unsigned kPolylogOrder = 30;

}  // namespace detail

/// Bose integral F_l(gamma) = sum_{p >= 1} e^{-gamma p} / p^l.
inline double bose_integral(unsigned l, double gamma) {
  detail::require(l >= 1, "bose_integral: order must be a positive integer");
  detail::require(gamma >= 0.0, "bose_integral: gamma must be nonnegative");
  if (gamma == 0.0) {
    if (l == 1) throw domain_error("bose_integral: F_1 diverges at gamma = 0");
    return riemann_zeta(static_cast<double>(l));
  }
  const double ld = static_cast<double>(l);
  if (gamma >= detail::kSmallGamma) {
    CompensatedSum acc;
    for (unsigned long p = 1;; ++p) {
      const double pd = static_cast<double>(p);
      const double term = std::exp(-gamma * pd) / std::pow(pd, ld);
      acc += term;
      if (term < 1e-18 * acc.value()) break;
    }
    return acc.value();
  }
  // Expansion of Li_l(e^{-gamma}) about gamma = 0, convergent for gamma < 2 pi.
  static const std::vector<double> bern = detail::bernoulli_numbers(detail::kPolylogOrder + 2);
  CompensatedSum acc;
  double power = 1.0;  // (-gamma)^k / k!
  double harmonic = 0.0;
  for (unsigned k = 0; k <= detail::kPolylogOrder; ++k) {
    if (k > 0) power *= -gamma / static_cast<double>(k);
    if (k + 1 == l) {
      acc += power * (harmonic - std::log(gamma));
    } else if (k + 2 <= l) {
      acc += power * riemann_zeta(static_cast<double>(l - k));
    } else {
      acc += power * detail::zeta_nonpositive(k - l, bern);
    }
    if (k + 1 < l) harmonic += 1.0 / static_cast<double>(k + 1);
  }
  return acc.value();
}

/// dF_1/dgamma = -sum_p e^{-gamma p} = -1/(e^gamma - 1).
inline double bose_integral1_derivative(double gamma) {
  detail::require(gamma > 0.0, "bose_integral1_derivative: gamma must be positive");
  return -1.0 / std::expm1(gamma);
}

struct DeltaExpansion {
  double delta;
  bool valid;

  static DeltaExpansion from_delta(double delta) {
    detail::require(delta >= 0.0 && delta < 1.0, "DeltaExpansion: delta must lie in [0, 1)");
    return {delta, delta < 0.05};
  }
};

/// Level occupation to first order in delta with chi_{n+1}/chi_n ~ x^n.
inline double occupation_delta(double delta, double e) {
  detail::require(e > 0.0, "occupation_delta: level offset must be positive");
  const double em1 = std::expm1(e);
  return (1.0 + 2.0 * delta) / em1 - 2.0 * delta * std::exp(e) / (em1 * em1);
}

/// Thermodynamic-limit condensate fraction 1 - t^3 [zeta(3) + 2 delta (zeta(3) + zeta(2))].
inline ClampedValue fraction_thermo_limit(double delta, double t_rel) {
  detail::require(delta >= 0.0 && t_rel >= 0.0,
                  "fraction_thermo_limit: delta and t_rel must be nonnegative");
  const double z3 = riemann_zeta(3.0);
  const double z2 = riemann_zeta(2.0);
  const double raw = 1.0 - t_rel * t_rel * t_rel * (z3 + 2.0 * delta * (z3 + z2));
  return ClampedValue::floor_at_zero(raw);
}

/// The two parts of the shell-summed mean number under the delta expansion,
/// N = (1 + 2 delta) <N>_1 - 2 delta <N>_2, with shell spacing
/// w = 1/(t_rel N^{1/3}) and gamma = alpha + w.
struct NumberDecomposition {
  double gamma;
  double ground1;        // 1/(e^alpha - 1)
  double part1;          // ground1 + Bose-integral shell terms
  double ground2;        // e^alpha/(e^alpha - 1)^2
  double part2_integral; // integral replacement of the shell sum, as printed
  double part2_summed;   // same shell sum evaluated term by term
  double total_integral; // (1 + 2 delta) part1 - 2 delta part2_integral
  double total_summed;   // (1 + 2 delta) part1 - 2 delta part2_summed

  [[nodiscard]] double part2_residual() const { return part2_integral - part2_summed; }
};

inline NumberDecomposition total_number_decomposition(double delta, double t_rel,
                                                      unsigned long n, double alpha) {
  detail::require(alpha > 0.0, "total_number_decomposition: alpha must be positive");
  detail::require(t_rel > 0.0 && n >= 1,
                  "total_number_decomposition: need t_rel > 0 and N >= 1");
  const double nd = static_cast<double>(n);
  const double cbrt_n = std::cbrt(nd);
  const double w = 1.0 / (t_rel * cbrt_n);
  const double gamma = alpha + w;
  const double t2 = t_rel * t_rel;
  const double t3 = t2 * t_rel;

  NumberDecomposition d{};
  d.gamma = gamma;
  const double ea_m1 = std::expm1(alpha);
  d.ground1 = 1.0 / ea_m1;
  d.part1 = d.ground1 + t3 * nd * bose_integral(3, gamma) +
            2.5 * t2 * cbrt_n * cbrt_n * bose_integral(2, gamma) +
            3.0 * t_rel * cbrt_n * bose_integral(1, gamma);

  d.ground2 = std::exp(alpha) / (ea_m1 * ea_m1);
  d.part2_integral = d.ground2 - t3 * nd * bose_integral(2, gamma) -
                     2.5 * t2 * cbrt_n * cbrt_n * bose_integral(1, gamma) -
                     3.0 * t_rel * cbrt_n * bose_integral1_derivative(gamma);

  CompensatedSum shells;
  for (unsigned long q = 0;; ++q) {
    const double qd = static_cast<double>(q);
    const double y = qd * w + gamma;
    const double coeff = 0.5 * qd * qd + 2.5 * qd + 3.0;
    // e^y/(e^y - 1)^2 = 1/((e^y - 1)(1 - e^{-y}))
    const double term = coeff / (std::expm1(y) * -std::expm1(-y));
    shells += term;
    if (qd * w > 2.0 && term < 1e-17 * shells.value()) break;
  }
  d.part2_summed = d.ground2 + shells.value();

  d.total_integral = (1.0 + 2.0 * delta) * d.part1 - 2.0 * delta * d.part2_integral;
  d.total_summed = (1.0 + 2.0 * delta) * d.part1 - 2.0 * delta * d.part2_summed;
  return d;
}

}  // namespace coboson
