#pragma once

// Property suites behind the `check` command. Every row reports the observed
// deviation and the tolerance it is held to.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "coboson/analytic.hpp"
#include "coboson/chi_ratio.hpp"
#include "coboson/schmidt.hpp"
#include "coboson/sweeps.hpp"
#include "coboson/trap.hpp"
#include "coboson/two_level.hpp"
#include "coboson/units.hpp"

namespace coboson {

struct CheckResult {
  int suite;
  std::string name;
  double tolerance;
  double deviation;
  bool pass;
  std::string detail;
};

struct CheckOptions {
  double zeta3_perturbation = 0.0;  // added to zeta(3) in suite 6
  unsigned jobs = 1;
};

namespace detail {

inline CheckResult within(int suite, std::string name, double deviation, double tol,
                          std::string detail = {}) {
  const bool ok = std::isfinite(deviation) && deviation <= tol;
  return {suite, std::move(name), tol, deviation, ok, std::move(detail)};
}

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace detail

inline std::vector<CheckResult> check_chi_oracle() {
  double worst = 0.0;
  for (Kind kind : {Kind::BiFermion, Kind::BiBoson}) {
    for (double x : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
      const SchmidtSpec s(x, kind);
      const auto tw = truncate_weights(s, 1e-14);
      for (unsigned n = 0; n <= 8; ++n)
        worst = std::max(worst, std::abs(chi_ratio(s, n) - chi_ratio_oracle(kind, tw, n)));
    }
  }
  return {detail::within(1, "chi ratio closed form vs symmetric-polynomial oracle", worst, 1e-9)};
}

inline std::vector<CheckResult> check_fermion_bounds() {
  double violation = 0.0;
  for (int i = 0; i <= 99; ++i) {
    const SchmidtSpec s(0.99 * i / 99.0, Kind::BiFermion);
    for (unsigned long n = 1; n <= 30; ++n) {
      const auto b = fermion_ratio_bounds(s, n);
      const double r = chi_ratio(s, n);
      violation = std::max({violation, b.lower - r, r - b.upper});
    }
  }
  double first_rung = 0.0;
  for (int i = 0; i <= 99; ++i) {
    const SchmidtSpec s(0.99 * i / 99.0, Kind::BiFermion);
    first_rung = std::max(first_rung, std::abs(chi_ratio(s, 1) - fermion_ratio_bounds(s, 1).upper));
  }
  return {detail::within(2, "fermion ratio bounds, max violation", violation, 1e-14),
          detail::within(2, "upper bound equals ratio at n = 1", first_rung, 1e-12)};
}

inline std::vector<CheckResult> check_two_level_limits() {
  std::vector<CheckResult> out;
  double sep = 0.0;
  for (double beta : {1e-3, 0.01, 0.1, 1.0, 10.0, 50.0, 1000.0}) {
    const TwoLevelEnsemble ens(100, SchmidtSpec(0.0, Kind::BiFermion), beta);
    sep = std::max(sep, std::abs(condensate_fraction(ens) - 0.01));
  }
  out.push_back(detail::within(3, "two-level separable fermions: fraction 1/N at all beta", sep, 1e-10));
  const double boson0 =
      condensate_fraction(TwoLevelEnsemble(100, SchmidtSpec(0.0, Kind::BiBoson), 50.0));
  out.push_back(detail::within(3, "two-level separable bosons at beta 50: fraction N",
                               std::abs(boson0 - 100.0), 1e-6));
  const double ideal =
      condensate_fraction(TwoLevelEnsemble(100, SchmidtSpec(1.0, Kind::BiFermion), 50.0));
  out.push_back(detail::within(3, "two-level x = 1 at beta 50: fraction 1", std::abs(ideal - 1.0),
                               1e-6));
  double closed = 0.0;
  for (unsigned long n : {1ul, 10ul, 100ul, 1000ul}) {
    for (double beta : {0.01, 0.1, 1.0, 2.0, 50.0}) {
      const double f1 = condensate_fraction(TwoLevelEnsemble(n, SchmidtSpec(1.0, Kind::BiBoson), beta));
      const double f0 = condensate_fraction(TwoLevelEnsemble(n, SchmidtSpec(0.0, Kind::BiBoson), beta));
      closed = std::max({closed, std::abs(f1 - fraction_x1_closed(n, beta)),
                         std::abs(f0 - fraction_x0_boson_closed(n, beta))});
    }
  }
  out.push_back(detail::within(3, "two-level sums vs closed forms at 20 (N, beta) points", closed, 1e-10));
  return out;
}

inline std::vector<CheckResult> check_near_max() {
  std::vector<CheckResult> out;
  const double k = 1e4;
  const double x = (k - 1.0) / (k + 1.0);
  for (Kind kind : {Kind::BiFermion, Kind::BiBoson}) {
    const TwoLevelEnsemble ens(100, SchmidtSpec(x, kind), 50.0);
    const double exact = condensate_fraction(ens);
    const double approx = fraction_near_max(ens, k, true).value;
    out.push_back(detail::within(4, std::string("near-max zero-temperature formula, ") +
                                        std::string(to_string(kind)),
                                 std::abs(exact - approx), 5.0 / k));
  }
  return out;
}

inline std::vector<CheckResult> check_trap_limits() {
  std::vector<CheckResult> out;
  double sep = 0.0;
  for (double e = 1e-3; e <= 10.0; e *= 1.5)
    sep = std::max(sep, std::abs(level_occupation(SchmidtSpec(0.0, Kind::BiFermion), e) - 1.0));
  out.push_back(detail::within(5, "trap separable fermions: one pair per level", sep, 1e-10));
  double fug = 0.0;
  for (double z : {0.1, 0.5, 0.9}) {
    const double expected = z * (1.0 + z) / ((1.0 - z) * (1.0 - z));
    fug = std::max(fug, std::abs(level_occupation(SchmidtSpec(0.0, Kind::BiBoson), -std::log(z)) -
                                 expected));
  }
  out.push_back(detail::within(5, "trap separable bosons: z(1+z)/(1-z)^2", fug, 1e-10));
  double be = 0.0;
  for (double e : {1e-3, 0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 30.0})
    for (Kind kind : {Kind::BiFermion, Kind::BiBoson})
      be = std::max(be, std::abs(level_occupation(SchmidtSpec(1.0, kind), e) - 1.0 / std::expm1(e)));
  out.push_back(detail::within(5, "trap x = 1: Bose-Einstein occupation", be, 1e-12));
  return out;
}

inline std::vector<CheckResult> check_s_sum(const CheckOptions& opt) {
  const double zeta3 = riemann_zeta(3.0) + opt.zeta3_perturbation;
  const auto pa = fraction_paper_approx(1'000'000, SchmidtSpec(1.0 - 1e-6, Kind::BiFermion), 0.0);
  return {detail::within(6, "S(x = 1 - 1e-6, N = 1e6) vs zeta(3)", std::abs(pa.s_sum - zeta3), 1e-3),
          detail::within(6, "zeta(3) vs quoted 1.202", std::abs(zeta3 - 1.202), 1e-3)};
}

namespace detail {

// Largest step against the expected ordering in x at each abscissa, over
// rows with abscissa <= max_abscissa. increasing selects nondecreasing.
inline double ordering_violation(const CurveSet& cs, bool increasing, double max_abscissa) {
  auto names = cs.series_names();
  std::vector<std::vector<CurveRow>> curves;
  for (const auto& nm : names) curves.push_back(cs.series(nm));
  std::sort(curves.begin(), curves.end(),
            [](const auto& a, const auto& b) { return *a.front().x < *b.front().x; });
  double worst = 0.0;
  for (std::size_t c = 1; c < curves.size(); ++c) {
    for (std::size_t i = 0; i < curves[c].size(); ++i) {
      if (curves[c][i].abscissa > max_abscissa) continue;
      const double step = curves[c][i].value - curves[c - 1][i].value;
      worst = std::max(worst, increasing ? -step : step);
    }
  }
  return worst;
}

// Same, along a single x-sweep.
inline double sweep_violation(const CurveSet& cs, bool increasing) {
  double worst = 0.0;
  for (std::size_t i = 1; i < cs.rows.size(); ++i) {
    const double step = cs.rows[i].value - cs.rows[i - 1].value;
    worst = std::max(worst, increasing ? -step : step);
  }
  return worst;
}

}  // namespace detail

inline std::vector<CheckResult> check_figures(const CheckOptions& opt) {
  std::vector<CheckResult> out;
  const auto fig4 = run_figure("fig4", opt.jobs);
  out.push_back(detail::within(7, "fig4 nondecreasing in x for t_rel <= 0.9",
                               detail::ordering_violation(fig4, true, 0.9 + 1e-9), 0.0));
  const auto fig7 = run_figure("fig7", opt.jobs);
  out.push_back(detail::within(7, "fig7 nonincreasing in x for t_rel <= 0.9",
                               detail::ordering_violation(fig7, false, 0.9 + 1e-9), 0.0));
  const auto fig2c = run_figure("fig2c", opt.jobs);
  double excess = 0.0;
  for (const auto& r : fig2c.rows) excess = std::max(excess, r.value - 0.01);
  out.push_back(detail::within(7, "fig2c bounded by 1/N", excess, 1e-6));
  const auto fig6b = run_figure("fig6b", opt.jobs);
  out.push_back(detail::within(7, "fig6b at x = 0.001 within 5% of 2N",
                               std::abs(fig6b.rows.front().value / 200.0 - 1.0), 0.05));
  for (const char* name : {"fig3a", "fig3b"}) {
    const auto cs = run_figure(name, opt.jobs);
    out.push_back(detail::within(7, std::string(name) + " nondecreasing in x",
                                 detail::sweep_violation(cs, true), 0.0));
    out.push_back(detail::within(7, std::string(name) + " x = 0.001 endpoint at 1/N",
                                 std::abs(cs.rows.front().value - 0.01), 5e-4));
    out.push_back(detail::within(7, std::string(name) + " x = 0.9999 endpoint near 1",
                                 std::abs(cs.rows.back().value - 1.0), 0.02));
  }
  const std::string a = to_csv(run_figure("fig4", 1));
  const std::string b = to_csv(run_figure("fig4", std::max(2u, opt.jobs)));
  const std::string c = to_csv(fig4);
  out.push_back(detail::within(7, "figure CSV byte-stable across runs and worker counts",
                               (a == b && a == c) ? 0.0 : 1.0, 0.0));
  return out;
}

inline std::vector<CheckResult> check_appendix() {
  std::vector<CheckResult> out;
  for (Kind kind : {Kind::BiFermion, Kind::BiBoson}) {
    double worst = 0.0;
    int failed = 0;
    for (double delta : {0.001, 0.01}) {
      for (double t : {0.2, 0.5, 0.8}) {
        const double thermo = fraction_thermo_limit(delta, t).value;
        try {
          const double full = condensate_fraction_full(1000, SchmidtSpec(1.0 - delta, kind), t);
          worst = std::max(worst, std::abs(thermo - full));
        } catch (const non_convergence&) {
          ++failed;
          worst = detail::kInf;
        }
      }
    }
    std::string note = failed ? std::to_string(failed) + " of 6 points have no alpha root" : "";
    out.push_back(detail::within(8, std::string("thermo-limit vs finite-N solve, N = 1000, ") +
                                        std::string(to_string(kind)),
                                 worst, 0.03, note));
  }
  return out;
}

inline std::vector<CheckResult> check_hydrogen() {
  const units::GasSample h(1.8e20, units::constants::hydrogen_atom_mass, 9.6e-8);
  const double tc = units::critical_temperature(h);
  return {detail::within(9, "hydrogen T_c = 51 uK", std::abs(tc * 1e6 - 51.0), 1.0),
          detail::within(9, "pseudo-critical from computed T_c = 54.06 uK",
                         std::abs(units::pseudo_critical_temperature(tc) * 1e6 - 54.06), 0.1),
          detail::within(9, "pseudo-critical(50 uK) = 53.16 uK",
                         std::abs(units::pseudo_critical_temperature(50e-6) * 1e6 - 53.16), 0.1)};
}

inline std::vector<CheckResult> run_suite(int suite, const CheckOptions& opt = {}) {
  switch (suite) {
    case 1: return check_chi_oracle();
    case 2: return check_fermion_bounds();
    case 3: return check_two_level_limits();
    case 4: return check_near_max();
    case 5: return check_trap_limits();
    case 6: return check_s_sum(opt);
    case 7: return check_figures(opt);
    case 8: return check_appendix();
    case 9: return check_hydrogen();
    default: throw domain_error("unknown check suite " + std::to_string(suite));
  }
}

inline std::vector<CheckResult> run_check(const CheckOptions& opt = {}) {
  std::vector<CheckResult> all;
  for (int s = 1; s <= 9; ++s) {
    auto part = run_suite(s, opt);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace coboson
