#pragma once

// Grand-canonical cobosons in a 3D isotropic harmonic trap at fixed mean
// number N. Shell p sits p * w above the ground shell, w = 1/(t_rel N^{1/3})
// in units of k_B T, and holds g(p) = (p+1)(p+2)/2 single-particle levels.
// alpha is the ground-level offset beta (E_0 - mu).

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "coboson/chi_ratio.hpp"
#include "coboson/clamped.hpp"
#include "coboson/errors.hpp"
#include "coboson/root.hpp"
#include "coboson/schmidt.hpp"
#include "coboson/summation.hpp"

namespace coboson {

struct SeriesControl {
  unsigned long max_terms = 100'000'000;
};

namespace detail {

inline constexpr double kSeriesRelTol = 1e-17;

// For n >= start the bracket equals a + b n + c n^2 to double precision.
struct BracketAsymptote {
  double a = 0.0, b = 0.0, c = 0.0;
  unsigned long start = 0;
  bool available = false;
};

inline BracketAsymptote bracket_asymptote(const SchmidtSpec& s) {
  const double x = s.x();
  if (x == 1.0) return {0.0, 1.0, 0.0, 0, true};
  if (x == 0.0) {
    if (s.kind() == Kind::BiBoson) return {0.0, 0.0, 1.0, 0, true};
    return {1.0, 0.0, 0.0, 0, true};
  }
  // Smallest n with n^2 x^n < 1e-20; beyond it the x^n corrections vanish.
  const double lx = std::log(x);
  const double target = std::log(1e-20);
  double n = 1.0;
  for (int i = 0; i < 50; ++i) n = std::max(1.0, (target - 2.0 * std::log(n)) / lx);
  const double start = std::ceil(n) + 1.0;
  if (start > 1e15) return {};
  const auto first = static_cast<unsigned long>(start);
  if (s.kind() == Kind::BiFermion) return {1.0, 0.0, 0.0, first, true};
  return {x, 0.0, 1.0 - x, first, true};
}

// sum_{n >= m} z^n (a + b n + c n^2), z = e^{-e}.
inline double polynomial_geometric_tail(const BracketAsymptote& p, double e, unsigned long m) {
  const double md = static_cast<double>(m);
  const double z = std::exp(-e);
  const double omz = -std::expm1(-e);
  const double zm = std::exp(-e * md);
  double acc = 0.0;
  if (p.a != 0.0) acc += p.a / omz;
  if (p.b != 0.0) acc += p.b * (md / omz + z / (omz * omz));
  if (p.c != 0.0)
    acc += p.c * (md * md / omz + 2.0 * md * z / (omz * omz) + z * (1.0 + z) / (omz * omz * omz));
  return zm * acc;
}

// sum_{n >= first} e^{-e n} weight(n) bracket(n). Terms are summed until the
// geometric bound on the remainder drops below kSeriesRelTol of the partial
// sum; when the bracket reaches its polynomial form the remainder is added
// in closed form (only valid when weight is identically 1).
template <class Weight>
double bracket_series(const SchmidtSpec& s, double e, unsigned long first, Weight&& weight,
                      bool closed_tail, const SeriesControl& ctl) {
  const BracketAsymptote asym = bracket_asymptote(s);
  const double z = std::exp(-e);
  CompensatedSum acc;
  double prev = 0.0;
  for (unsigned long n = first;; ++n) {
    if (closed_tail && asym.available && n >= asym.start) {
      acc += polynomial_geometric_tail(asym, e, n);
      break;
    }
    if (n - first >= ctl.max_terms)
      throw non_convergence("occupation series hit its term cap (" +
                            std::to_string(ctl.max_terms) + ") at level offset " +
                            std::to_string(e));
    const double nd = static_cast<double>(n);
    const double term = std::exp(-e * nd) * weight(n) * occupation_bracket(s, n);
    acc += term;
    if (n > first && term > 0.0 && term < prev) {
      // Late terms shrink by at least z per step, so z caps the ratio bound.
      const double ratio = std::max(term / prev, z);
      if (term <= kSeriesRelTol * acc.value() * (1.0 - ratio)) break;
    }
    if (term == 0.0 && nd * e > 745.0) break;
    prev = term;
  }
  return acc.value();
}

}  // namespace detail

/// Mean occupation of one level with dimensionless offset e = beta (E_m - mu).
inline double level_occupation(const SchmidtSpec& s, double e, const SeriesControl& ctl = {}) {
  detail::require(e > 0.0 && std::isfinite(e), "level_occupation: offset must be positive");
  const double series =
      detail::bracket_series(s, e, 0, [](unsigned long) { return 1.0; }, true, ctl);
  return -std::expm1(-e) * series;
}

inline double shell_degeneracy(unsigned long p) {
  const double pd = static_cast<double>(p);
  return 0.5 * pd * pd + 1.5 * pd + 1.0;
}

/// w = beta hbar omega = 1 / (t_rel N^{1/3}).
inline double shell_spacing(unsigned long n, double t_rel) {
  return 1.0 / (t_rel * std::cbrt(static_cast<double>(n)));
}

class TrapEnsemble {
 public:
  TrapEnsemble(unsigned long n, SchmidtSpec spec, double t_rel, double alpha,
               unsigned long level_cutoff = 200'000, unsigned long series_cutoff = 100'000'000)
      : n_(n), spec_(spec), t_rel_(t_rel), alpha_(alpha), level_cutoff_(level_cutoff),
        series_{series_cutoff} {
    detail::require(n >= 1, "TrapEnsemble: N must be positive");
    detail::require(t_rel > 0.0 && std::isfinite(t_rel), "TrapEnsemble: t_rel must be positive");
    detail::require(alpha > 0.0 && std::isfinite(alpha), "TrapEnsemble: alpha must be positive");
    detail::require(level_cutoff >= 1 && series_cutoff >= 1,
                    "TrapEnsemble: cutoffs must be positive");
  }

  [[nodiscard]] unsigned long count() const { return n_; }
  [[nodiscard]] const SchmidtSpec& spec() const { return spec_; }
  [[nodiscard]] double t_rel() const { return t_rel_; }
  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] unsigned long level_cutoff() const { return level_cutoff_; }
  [[nodiscard]] const SeriesControl& series() const { return series_; }
  [[nodiscard]] double spacing() const { return shell_spacing(n_, t_rel_); }

  [[nodiscard]] TrapEnsemble with_alpha(double alpha) const {
    return {n_, spec_, t_rel_, alpha, level_cutoff_, series_.max_terms};
  }

 private:
  unsigned long n_;
  SchmidtSpec spec_;
  double t_rel_;
  double alpha_;
  unsigned long level_cutoff_;
  SeriesControl series_;
};

struct TotalNumber {
  double value;
  unsigned long shells;  // number of shells summed
  bool cutoff_hit;       // level_cutoff reached before the tail bound held
};

/// Shell sum of level occupations. Stops once past the peak of g(p) e^{-p w}
/// and the geometric bound on the remaining shells is below 1e-10 N.
inline TotalNumber total_number(const TrapEnsemble& ens) {
  const double w = ens.spacing();
  const double budget = 1e-10 * static_cast<double>(ens.count());
  CompensatedSum acc;
  double prev = 0.0;
  for (unsigned long p = 0; p <= ens.level_cutoff(); ++p) {
    const double pd = static_cast<double>(p);
    const double contrib =
        shell_degeneracy(p) * level_occupation(ens.spec(), ens.alpha() + pd * w, ens.series());
    acc += contrib;
    if (p > 0 && pd * w > 2.0 && contrib < prev) {
      const double ratio = contrib / prev;
      if (contrib / (1.0 - ratio) < budget) return {acc.value(), p + 1, false};
    }
    prev = contrib;
  }
  return {acc.value(), ens.level_cutoff() + 1, true};
}

struct AlphaSolution {
  double alpha;
  double residual;  // total_number(alpha) - N
  int iterations;
};

namespace detail {
inline constexpr double kAlphaFloor = 1e-12;
inline constexpr double kAlphaRelTol = 1e-8;
}  // namespace detail

/// Solves total_number(alpha) = N for alpha > 0.
///
/// For boson pairs and for x = 1 the mean number falls monotonically from
/// +infinity as alpha grows. For fermion pairs with x < 1 each level saturates
/// (its occupation returns to 1 as alpha -> 0), so the mean number rises to a
/// maximum before falling; the root on the falling branch is returned, and
/// bracket_failure is thrown when even the maximum stays below N.
/// Separable fermion pairs are refused outright: each level then holds
/// exactly one pair and the shell sum diverges with the cutoff.
inline AlphaSolution solve_alpha(unsigned long n, const SchmidtSpec& s, double t_rel,
                                 unsigned long level_cutoff = 200'000,
                                 unsigned long series_cutoff = 100'000'000) {
  detail::require(t_rel > 0.0, "solve_alpha: t_rel must be positive");
  if (s.kind() == Kind::BiFermion && s.x() == 0.0)
    throw bracket_failure(
        "solve_alpha: separable fermion pairs occupy every level exactly once; "
        "the mean number diverges with the shell cutoff");

  const TrapEnsemble proto(n, s, t_rel, 1.0, level_cutoff, series_cutoff);
  const double target = static_cast<double>(n);
  auto residual = [&](double log_alpha) {
    const TotalNumber tn = total_number(proto.with_alpha(std::exp(log_alpha)));
    if (tn.cutoff_hit)
      throw non_convergence("solve_alpha: shell cutoff reached before the tail bound held");
    return tn.value - target;
  };

  double u_hi = 0.0;
  double f_hi = residual(u_hi);
  while (f_hi >= 0.0) {
    u_hi += 1.0;
    if (u_hi > 7.0) throw bracket_failure("solve_alpha: no upper bracket below alpha = e^7");
    f_hi = residual(u_hi);
  }

  const double u_floor = std::log(detail::kAlphaFloor);
  double u_lo = u_floor;
  double f_lo = residual(u_lo);
  if (f_lo < 0.0) {
    // Saturating levels: walk down from the upper end to the falling branch.
    constexpr double step = 0.25;
    bool found = false;
    double u = u_hi;
    double f_prev = f_hi;
    double max_total = f_hi + target;
    while (u - step > u_floor) {
      const double u_next = u - step;
      const double f_next = residual(u_next);
      max_total = std::max(max_total, f_next + target);
      if (f_next >= 0.0) {
        u_lo = u_next;
        f_lo = f_next;
        u_hi = u;
        f_hi = f_prev;
        found = true;
        break;
      }
      u = u_next;
      f_prev = f_next;
    }
    if (!found)
      throw bracket_failure("solve_alpha: no alpha > 0 reaches the target number " +
                            std::to_string(target) + " (largest mean number found " +
                            std::to_string(max_total) + ")");
  }

  RootOptions opt;
  opt.ftol = 0.5 * detail::kAlphaRelTol * target;
  opt.xtol = 1e-14;
  opt.max_iter = 300;
  const RootResult r = find_root_bracketed(residual, u_lo, u_hi, f_lo, f_hi, opt);
  if (!r.converged || std::abs(r.f) >= detail::kAlphaRelTol * target)
    throw non_convergence("solve_alpha: residual " + std::to_string(r.f) +
                          " above tolerance after " + std::to_string(r.iterations) +
                          " iterations");
  return {std::exp(r.x), r.f, r.iterations};
}

/// Ground-shell fraction at the solved alpha.
inline double condensate_fraction_full(unsigned long n, const SchmidtSpec& s, double t_rel) {
  const AlphaSolution sol = solve_alpha(n, s, t_rel);
  return level_occupation(s, sol.alpha) / static_cast<double>(n);
}

struct PaperApprox {
  double ground;      // <N_0> at alpha = 1/N, summed from n = 1
  double s_sum;       // S
  ClampedValue fraction;
};

/// Low-temperature estimate <N_0>_{alpha=1/N}/N - t_rel^3 S with the ground
/// offset pinned at alpha = 1/N.
inline PaperApprox fraction_paper_approx(unsigned long n, const SchmidtSpec& s, double t_rel,
                                         const SeriesControl& ctl = {}) {
  detail::require(n >= 1, "fraction_paper_approx: N must be positive");
  detail::require(t_rel >= 0.0, "fraction_paper_approx: t_rel must be nonnegative");
  const double nd = static_cast<double>(n);
  const double e = 1.0 / nd;
  const double q = std::exp(-e);
  const double ground =
      -std::expm1(-e) *
      detail::bracket_series(s, e, 1, [](unsigned long) { return 1.0; }, true, ctl);
  const double s_sum = detail::bracket_series(
      s, e, 1,
      [q](unsigned long k) {
        const double kd = static_cast<double>(k);
        return 1.0 / (kd * kd * kd) - q / ((kd + 1.0) * (kd + 1.0) * (kd + 1.0));
      },
      false, ctl);
  const double raw = ground / nd - t_rel * t_rel * t_rel * s_sum;
  return {ground, s_sum, ClampedValue::floor_at_zero(raw)};
}

enum class Estimator { PaperApprox, FullSolve };

inline std::string_view to_string(Estimator e) {
  return e == Estimator::PaperApprox ? "paper-approx" : "full-solve";
}

inline Estimator parse_estimator(std::string_view s) {
  if (s == "paper-approx") return Estimator::PaperApprox;
  if (s == "full-solve") return Estimator::FullSolve;
  throw domain_error("unknown estimator: " + std::string(s));
}

inline double trap_fraction(Estimator est, unsigned long n, const SchmidtSpec& s, double t_rel) {
  if (est == Estimator::PaperApprox) return fraction_paper_approx(n, s, t_rel).fraction.value;
  return condensate_fraction_full(n, s, t_rel);
}

struct TransitionOptions {
  Estimator estimator = Estimator::PaperApprox;
  double grid_step = 0.01;
  double t_max = 10.0;
  int refine_iter = 60;
};

/// Smallest t_rel at which the condensate fraction falls below threshold
/// (default 1.5/N): seeded on a uniform grid, then bisected.
inline double transition_temperature(unsigned long n, const SchmidtSpec& s,
                                     double threshold = std::numeric_limits<double>::quiet_NaN(),
                                     const TransitionOptions& opt = {}) {
  if (std::isnan(threshold)) threshold = 1.5 / static_cast<double>(n);
  detail::require(threshold > 0.0, "transition_temperature: threshold must be positive");
  detail::require(opt.grid_step > 0.0 && opt.t_max > opt.grid_step,
                  "transition_temperature: bad grid");
  auto frac = [&](double t) { return trap_fraction(opt.estimator, n, s, t); };

  double t_prev = opt.grid_step;
  if (frac(t_prev) < threshold)
    throw bracket_failure("transition_temperature: fraction already below threshold at t_rel = " +
                          std::to_string(t_prev));
  double t_below = -1.0;
  for (int k = 2;; ++k) {
    const double t = opt.grid_step * k;
    if (t > opt.t_max + 1e-12) break;
    if (frac(t) < threshold) {
      t_below = t;
      break;
    }
    t_prev = t;
  }
  if (t_below < 0.0)
    throw bracket_failure("transition_temperature: fraction never drops below threshold up to t_rel = " +
                          std::to_string(opt.t_max));
  double lo = t_prev, hi = t_below;
  for (int i = 0; i < opt.refine_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (frac(mid) < threshold)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace coboson
