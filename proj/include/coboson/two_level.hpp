#pragma once

// Canonical ensemble of exactly N cobosons on two levels, E0 = 0 and E1 = 1,
// with mu = 0 and k_B = 1 so that beta = 1/T.

#include <cmath>

#include "coboson/chi_ratio.hpp"
#include "coboson/errors.hpp"
#include "coboson/schmidt.hpp"
#include "coboson/summation.hpp"

namespace coboson {

class TwoLevelEnsemble {
 public:
  TwoLevelEnsemble(unsigned long n, SchmidtSpec spec, double beta)
      : n_(n), spec_(spec), beta_(beta) {
    detail::require(n >= 1, "TwoLevelEnsemble: N must be positive");
    detail::require(std::isfinite(beta) && beta > 0.0,
                    "TwoLevelEnsemble: beta must be finite and positive");
  }

  [[nodiscard]] unsigned long count() const { return n_; }
  [[nodiscard]] const SchmidtSpec& spec() const { return spec_; }
  [[nodiscard]] double beta() const { return beta_; }

 private:
  unsigned long n_;
  SchmidtSpec spec_;
  double beta_;
};

/// Z = (1 - e^{-beta(N+1)}) / (1 - e^{-beta}).
inline double partition_function(unsigned long n, double beta) {
  detail::require(beta > 0.0, "partition_function: beta must be positive");
  const double nd = static_cast<double>(n);
  return std::expm1(-beta * (nd + 1.0)) / std::expm1(-beta);
}

/// Mean ground-level occupation. Summed from n = N downward so the dominant
/// low-temperature weights go in first.
inline double ground_occupation(const TwoLevelEnsemble& ens) {
  const unsigned long total = ens.count();
  const double beta = ens.beta();
  CompensatedSum acc;
  for (unsigned long k = 0; k <= total; ++k) {
    const unsigned long n = total - k;  // k = N - n excited cobosons
    acc += std::exp(-beta * static_cast<double>(k)) * occupation_bracket(ens.spec(), n);
  }
  return acc.value() / partition_function(total, beta);
}

inline double condensate_fraction(const TwoLevelEnsemble& ens) {
  return ground_occupation(ens) / static_cast<double>(ens.count());
}

/// Closed form at maximal entanglement (every ratio equal to 1).
inline double fraction_x1_closed(unsigned long n, double beta) {
  detail::require(beta > 0.0, "fraction_x1_closed: beta must be positive");
  const double nd = static_cast<double>(n);
  const double lead = 1.0 / -std::expm1(-beta * (nd + 1.0));
  // e^{-b}/(1 - e^{-b}) = 1/(e^b - 1)
  return lead * (1.0 + std::expm1(-beta * nd) / (nd * std::expm1(beta)));
}

/// Closed form for separable boson pairs, ratio n + 1.
inline double fraction_x0_boson_closed(unsigned long n, double beta) {
  detail::require(beta > 0.0, "fraction_x0_boson_closed: beta must be positive");
  const double nd = static_cast<double>(n);
  const double q = std::exp(-beta);
  const double one_minus_q = -std::expm1(-beta);
  const double lead = 1.0 / -std::expm1(-beta * (1.0 + nd));
  const double bracket = nd - 2.0 / std::expm1(beta) +
                         q * (1.0 + q) * -std::expm1(-beta * nd) /
                             (nd * one_minus_q * one_minus_q);
  return lead * bracket;
}

struct NearMaxFraction {
  double value;
  bool validity_warning;  // K < 10 N
};

/// Linearized ratios 1 -/+ n/K valid for K >> N. tzero selects the T -> 0
/// limit, 1 - (N-1)/K for fermion pairs and 1 + (N+1)/K for boson pairs.
inline NearMaxFraction fraction_near_max(const TwoLevelEnsemble& ens, double schmidt_k,
                                         bool tzero) {
  detail::require(schmidt_k >= 1.0, "fraction_near_max: Schmidt number must be >= 1");
  const double nd = static_cast<double>(ens.count());
  const bool warn = schmidt_k < 10.0 * nd;
  const bool fermion = ens.spec().kind() == Kind::BiFermion;
  if (tzero) {
    const double v = fermion ? 1.0 - (nd - 1.0) / schmidt_k : 1.0 + (nd + 1.0) / schmidt_k;
    return {v, warn};
  }
  const double beta = ens.beta();
  const double q = std::exp(-beta);
  const double one_minus_q = -std::expm1(-beta);
  const double tail = -std::expm1(-beta * nd);  // 1 - e^{-beta N}
  const double pref = 1.0 / (schmidt_k * -std::expm1(-beta * (1.0 + nd)));
  const double base = fraction_x1_closed(ens.count(), beta);
  if (fermion) {
    const double bracket = nd - 1.0 - 2.0 / std::expm1(beta) +
                           2.0 * q * tail / (nd * one_minus_q * one_minus_q);
    return {base - pref * bracket, warn};
  }
  const double bracket = nd + 1.0 - 2.0 / std::expm1(beta) +
                         2.0 * q * q * tail / (nd * one_minus_q * one_minus_q);
  return {base + pref * bracket, warn};
}

}  // namespace coboson
