#pragma once

// Parameter sweeps and the figure presets built on them. Each sweep lays out
// its rows first, evaluates the points on a worker pool and sorts the result,
// so the output is the same for any number of workers.

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coboson/analytic.hpp"
#include "coboson/chi_ratio.hpp"
#include "coboson/curves.hpp"
#include "coboson/errors.hpp"
#include "coboson/parallel.hpp"
#include "coboson/trap.hpp"
#include "coboson/two_level.hpp"

namespace coboson {

inline constexpr const char* kVersion = "0.1.0";

struct PointValue {
  double value = 0.0;
  double raw = 0.0;
  std::vector<std::string> flags;
};

namespace detail {

template <class Eval>
CurveSet evaluate_rows(std::vector<CurveRow> rows, unsigned jobs, Eval&& eval) {
  const auto vals =
      parallel_map<PointValue>(rows.size(), jobs, [&](std::size_t i) { return eval(rows[i]); });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].value = vals[i].value;
    rows[i].raw_value = vals[i].raw;
    rows[i].flags = vals[i].flags;
  }
  CurveSet cs;
  cs.rows = std::move(rows);
  cs.sort_rows();
  return cs;
}

inline std::string series_label(double x) { return "x=" + format_number(x); }

inline PointValue trap_point(Estimator est, unsigned long n, const SchmidtSpec& s, double t) {
  if (est == Estimator::PaperApprox) {
    const auto pa = fraction_paper_approx(n, s, t);
    PointValue pv{pa.fraction.value, pa.fraction.raw, {}};
    if (pa.fraction.clamped) pv.flags.emplace_back(flag::clamped);
    return pv;
  }
  const double f = condensate_fraction_full(n, s, t);
  return {f, f, {}};
}

inline void require_values(const std::vector<double>& v, const char* what) {
  if (v.empty()) throw domain_error(std::string(what) + " list is empty");
}

}  // namespace detail

/// chi_{n+1}/chi_n for n = 0..n_max at each x.
inline CurveSet sweep_chi(Kind kind, unsigned long n_max, const std::vector<double>& xs) {
  detail::require_values(xs, "x");
  CurveSet cs;
  for (double x : xs) {
    const SchmidtSpec s(x, kind);
    for (unsigned long n = 0; n <= n_max; ++n) {
      const double r = chi_ratio(s, n);
      cs.rows.push_back({detail::series_label(x), x, kind, n_max, "", static_cast<double>(n), r, r, {}});
    }
  }
  cs.sort_rows();
  cs.set_meta("command", "chi");
  return cs;
}

/// Two-level condensate fraction against temperature T = 1/beta.
inline CurveSet sweep_two_level(Kind kind, unsigned long n, const std::vector<double>& xs,
                                const std::vector<double>& temps, unsigned jobs) {
  detail::require_values(xs, "x");
  detail::require_values(temps, "temperature");
  std::vector<CurveRow> rows;
  for (double x : xs) {
    SchmidtSpec check(x, kind);
    for (double t : temps) {
      detail::require(t > 0.0, "temperature must be positive");
      rows.push_back({detail::series_label(x), x, kind, n, "exact", t, 0.0, 0.0, {}});
    }
  }
  auto cs = detail::evaluate_rows(std::move(rows), jobs, [](const CurveRow& r) {
    const double f =
        condensate_fraction(TwoLevelEnsemble(*r.n, SchmidtSpec(*r.x, *r.kind), 1.0 / r.abscissa));
    return PointValue{f, f, {}};
  });
  cs.set_meta("command", "two-level");
  return cs;
}

/// Two-level condensate fraction against x at fixed beta.
inline CurveSet sweep_two_level_x(Kind kind, unsigned long n, double beta,
                                  const std::vector<double>& xs, unsigned jobs,
                                  const std::string& series) {
  detail::require_values(xs, "x");
  std::vector<CurveRow> rows;
  for (double x : xs) {
    SchmidtSpec check(x, kind);
    rows.push_back({series, x, kind, n, "exact", x, 0.0, 0.0, {}});
  }
  auto cs = detail::evaluate_rows(std::move(rows), jobs, [beta](const CurveRow& r) {
    const double f = condensate_fraction(TwoLevelEnsemble(*r.n, SchmidtSpec(*r.x, *r.kind), beta));
    return PointValue{f, f, {}};
  });
  cs.set_meta("beta", format_number(beta));
  return cs;
}

/// Trap condensate fraction against reduced temperature t_rel = T/T0.
inline CurveSet sweep_trap(Kind kind, unsigned long n, const std::vector<double>& xs,
                           const std::vector<double>& ts, Estimator est, unsigned jobs) {
  detail::require_values(xs, "x");
  detail::require_values(ts, "t_rel");
  std::vector<CurveRow> rows;
  for (double x : xs) {
    SchmidtSpec check(x, kind);
    for (double t : ts) {
      detail::require(t > 0.0, "t_rel must be positive");
      rows.push_back({detail::series_label(x), x, kind, n, std::string(to_string(est)), t, 0.0,
                      0.0, {}});
    }
  }
  auto cs = detail::evaluate_rows(std::move(rows), jobs, [est](const CurveRow& r) {
    return detail::trap_point(est, *r.n, SchmidtSpec(*r.x, *r.kind), r.abscissa);
  });
  cs.set_meta("command", "trap");
  cs.set_meta("estimator", std::string(to_string(est)));
  return cs;
}

/// Trap condensate fraction against x at fixed t_rel.
inline CurveSet sweep_trap_x(Kind kind, unsigned long n, double t_rel,
                             const std::vector<double>& xs, Estimator est, unsigned jobs,
                             const std::string& series) {
  detail::require_values(xs, "x");
  std::vector<CurveRow> rows;
  for (double x : xs) {
    SchmidtSpec check(x, kind);
    rows.push_back({series, x, kind, n, std::string(to_string(est)), x, 0.0, 0.0, {}});
  }
  auto cs = detail::evaluate_rows(std::move(rows), jobs, [est, t_rel](const CurveRow& r) {
    return detail::trap_point(est, *r.n, SchmidtSpec(*r.x, *r.kind), t_rel);
  });
  cs.set_meta("t_rel", format_number(t_rel));
  cs.set_meta("estimator", std::string(to_string(est)));
  return cs;
}

/// Thermodynamic-limit fraction with delta = 1 - x against t_rel.
inline CurveSet sweep_analytic(const std::vector<double>& xs, const std::vector<double>& ts) {
  detail::require_values(xs, "x");
  detail::require_values(ts, "t_rel");
  CurveSet cs;
  for (double x : xs) {
    detail::require(x > 0.0 && x <= 1.0, "analytic sweep needs x in (0, 1]");
    const auto d = DeltaExpansion::from_delta(1.0 - x);
    for (double t : ts) {
      const auto f = fraction_thermo_limit(d.delta, t);
      CurveRow r{detail::series_label(x), x, std::nullopt, std::nullopt, "thermo-limit", t,
                 f.value, f.raw, {}};
      if (f.clamped) r.flags.emplace_back(flag::clamped);
      if (!d.valid) r.flags.emplace_back(flag::validity_warning);
      cs.rows.push_back(std::move(r));
    }
  }
  cs.sort_rows();
  cs.set_meta("command", "analytic");
  return cs;
}

// Figure presets, N = 100 throughout.

inline constexpr unsigned long kFigureN = 100;
inline constexpr double kNearZeroBeta = 1e3;    // two-level stand-in for T ~ 0
inline constexpr double kNearZeroTrapT = 1e-2;  // trap stand-in for T ~ 0

inline const std::vector<std::string>& figure_presets() {
  static const std::vector<std::string> names = {"fig2a", "fig2b", "fig2c", "fig3a", "fig3b",
                                                 "fig4",  "fig5",  "fig6a", "fig6b", "fig7"};
  return names;
}

/// 81 points, log-spaced over T in [0.1, 1000].
inline std::vector<double> figure_temperature_grid() {
  std::vector<double> t;
  for (int i = 0; i <= 80; ++i) t.push_back(std::pow(10.0, -1.0 + i / 20.0));
  return t;
}

/// t_rel = 0.02, 0.04, ..., 1.2.
inline std::vector<double> figure_trel_grid() {
  std::vector<double> t;
  for (int i = 1; i <= 60; ++i) t.push_back(0.02 * i);
  return t;
}

/// 0.001, 0.02, 0.04, ..., 0.98, 0.99, 0.999, 0.9999.
inline std::vector<double> figure_x_grid() {
  std::vector<double> x{0.001};
  for (int i = 1; i <= 49; ++i) x.push_back(0.02 * i);
  x.insert(x.end(), {0.99, 0.999, 0.9999});
  return x;
}

inline CurveSet run_figure(std::string_view preset, unsigned jobs = 1) {
  const unsigned long n = kFigureN;
  const std::vector<double> fig47 = {0.9999, 0.99, 0.98, 0.97, 0.8, 0.7, 0.001};
  CurveSet cs;
  if (preset == "fig2a") {
    cs = sweep_two_level(Kind::BiFermion, n, {0.985, 0.99, 0.995, 0.999, 0.9999},
                         figure_temperature_grid(), jobs);
  } else if (preset == "fig2b") {
    cs = sweep_two_level(Kind::BiFermion, n, {0.5, 0.6, 0.7, 0.8, 0.9}, figure_temperature_grid(),
                         jobs);
  } else if (preset == "fig2c") {
    cs = sweep_two_level(Kind::BiFermion, n, {0.001, 0.1, 0.2, 0.3, 0.36},
                         figure_temperature_grid(), jobs);
  } else if (preset == "fig5") {
    cs = sweep_two_level(Kind::BiBoson, n, {0.9999, 0.99, 0.8, 0.7, 0.5, 0.2, 0.001},
                         figure_temperature_grid(), jobs);
  } else if (preset == "fig3a") {
    cs = sweep_two_level_x(Kind::BiFermion, n, kNearZeroBeta, figure_x_grid(), jobs, "fig3a");
  } else if (preset == "fig6a") {
    cs = sweep_two_level_x(Kind::BiBoson, n, kNearZeroBeta, figure_x_grid(), jobs, "fig6a");
  } else if (preset == "fig3b") {
    cs = sweep_trap_x(Kind::BiFermion, n, kNearZeroTrapT, figure_x_grid(), Estimator::PaperApprox,
                      jobs, "fig3b");
  } else if (preset == "fig6b") {
    cs = sweep_trap_x(Kind::BiBoson, n, kNearZeroTrapT, figure_x_grid(), Estimator::PaperApprox,
                      jobs, "fig6b");
  } else if (preset == "fig4") {
    cs = sweep_trap(Kind::BiFermion, n, fig47, figure_trel_grid(), Estimator::PaperApprox, jobs);
  } else if (preset == "fig7") {
    cs = sweep_trap(Kind::BiBoson, n, fig47, figure_trel_grid(), Estimator::PaperApprox, jobs);
  } else {
    throw domain_error("unknown figure preset: " + std::string(preset));
  }
  cs.set_meta("command", "figure");
  cs.set_meta("preset", std::string(preset));
  cs.set_meta("N", std::to_string(n));
  return cs;
}

}  // namespace coboson
