#pragma once

// Normalization-ratio algebra chi_{n+1} / chi_n for geometric Schmidt
// spectra, with a symmetric-polynomial oracle that never touches the
// closed forms.

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "coboson/errors.hpp"
#include "coboson/schmidt.hpp"

namespace coboson {

namespace detail {

// Above this x the geometric factors go through log1p/expm1.
inline constexpr double kStableThreshold = 0.9;

// (1 - x) / (1 - x^{n+1}); equals 1/(n+1) at x = 1.
inline double geometric_quotient(double x, double n) {
  if (x == 1.0) return 1.0 / (n + 1.0);
  if (x == 0.0) return 1.0;
  if (x > kStableThreshold) {
    const double lx = std::log1p(x - 1.0);
    return (1.0 - x) / -std::expm1((n + 1.0) * lx);
  }
  return (1.0 - x) / (1.0 - std::pow(x, n + 1.0));
}

inline double power(double x, double n) {
  if (x > kStableThreshold && x < 1.0) return std::exp(n * std::log1p(x - 1.0));
  return std::pow(x, n);
}

}  // namespace detail

/// chi_{n+1} / chi_n. Exactly 1 at n = 0 and at x = 1 for both kinds.
inline double chi_ratio(const SchmidtSpec& s, unsigned long n) {
  if (n == 0 || s.x() == 1.0) return 1.0;
  const double nd = static_cast<double>(n);
  const double base = (nd + 1.0) * detail::geometric_quotient(s.x(), nd);
  if (s.kind() == Kind::BiBoson) return base;
  return detail::power(s.x(), nd) * base;
}

/// Ratio from the truncated spectrum alone. chi_n = n! e_n(lambda) for fermion
/// constituents and n! h_n(lambda) for boson constituents.
inline double chi_ratio_oracle(Kind kind, const TruncatedWeights& tw, unsigned n) {
  detail::require(n + 1 <= tw.size(),
                  "chi_ratio_oracle: need at least n+1 weights");
  detail::require(tw.truncation_tail < 1e-12,
                  "chi_ratio_oracle: truncation tail must be below 1e-12");
  const std::size_t top = n + 1;
  std::vector<double> poly(top + 1, 0.0);
  poly[0] = 1.0;

  if (kind == Kind::BiFermion) {
    // Multiply out prod_j (1 + lambda_j t) one factor at a time. Every update
    // adds nonnegative terms, unlike the alternating power-sum identity.
    for (double lam : tw.weights)
      for (std::size_t k = top; k >= 1; --k) poly[k] += lam * poly[k - 1];
  } else {
    // k h_k = sum_{i=1..k} p_i h_{k-i}, all terms nonnegative.
    std::vector<double> psum(top + 1, 0.0);
    for (double lam : tw.weights) {
      double li = 1.0;
      for (std::size_t i = 1; i <= top; ++i) {
        li *= lam;
        psum[i] += li;
      }
    }
    for (std::size_t k = 1; k <= top; ++k) {
      double acc = 0.0;
      for (std::size_t i = 1; i <= k; ++i) acc += psum[i] * poly[k - i];
      poly[k] = acc / static_cast<double>(k);
    }
  }

  if (poly[n] == 0.0)
    throw degenerate_denominator("chi_ratio_oracle: symmetric polynomial of degree n vanished");
  return static_cast<double>(n + 1) * poly[n + 1] / poly[n];
}

/// Squared norm of the remainder left when one coboson is removed from |n>.
inline double ladder_residual(const SchmidtSpec& s, unsigned long n) {
  detail::require(n >= 1, "ladder_residual: n must be positive");
  const double nd = static_cast<double>(n);
  return 1.0 - nd * chi_ratio(s, n - 1) + (nd - 1.0) * chi_ratio(s, n);
}

struct RatioBounds {
  double lower;
  double upper;
};

/// 1 - nP <= chi_{n+1}/chi_n <= 1 - P, for fermion constituents and n >= 1.
inline RatioBounds fermion_ratio_bounds(const SchmidtSpec& s, unsigned long n) {
  if (s.kind() != Kind::BiFermion)
    throw domain_error("fermion_ratio_bounds: bound holds only for fermion pairs");
  detail::require(n >= 1, "fermion_ratio_bounds: n must be positive");
  const double p = purity(s);
  return {1.0 - static_cast<double>(n) * p, 1.0 - p};
}

/// <n|c^dag c|n> = 1 + (n - 1) chi_{n+1}/chi_n, the summand of every
/// occupation series.
///
/// The n = 0 term is 1 - chi_1/chi_0 = 0, except for separable fermion pairs
/// (x = 0 exactly): there x^n is read as 0 for every n including n = 0, which
/// makes every summand 1 and the mean occupation exactly one at any
/// temperature. Any x > 0 follows the general formula.
inline double occupation_bracket(const SchmidtSpec& s, unsigned long n) {
  if (s.kind() == Kind::BiFermion && s.x() == 0.0) return 1.0;
  return 1.0 + (static_cast<double>(n) - 1.0) * chi_ratio(s, n);
}

}  // namespace coboson
