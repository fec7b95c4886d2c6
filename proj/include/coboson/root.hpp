#pragma once

#include <cmath>
#include <utility>

#include "coboson/errors.hpp"

namespace coboson {

struct RootOptions {
  double ftol = 0.0;   // stop once |f| <= ftol
  double xtol = 1e-15; // or once the bracket is this narrow
  int max_iter = 200;
};

struct RootResult {
  double x;
  double f;
  int iterations;
  bool converged;
};

/// Bisection safeguarded secant on a sign-changing bracket [lo, hi].
/// A secant step is taken when it lands strictly inside the bracket and the
/// previous step shrank the bracket by at least half; otherwise bisect.
template <class F>
RootResult find_root_bracketed(F&& f, double lo, double hi, double flo, double fhi,
                               const RootOptions& opt = {}) {
  if (!(lo < hi)) throw domain_error("find_root_bracketed: require lo < hi");
  if (flo == 0.0) return {lo, flo, 0, true};
  if (fhi == 0.0) return {hi, fhi, 0, true};
  if ((flo > 0.0) == (fhi > 0.0))
    throw bracket_failure("find_root_bracketed: endpoints do not bracket a root");

  double width = hi - lo;
  bool last_was_secant = false;
  double best_x = std::abs(flo) < std::abs(fhi) ? lo : hi;
  double best_f = std::abs(flo) < std::abs(fhi) ? flo : fhi;

  for (int it = 1; it <= opt.max_iter; ++it) {
    double x = 0.5 * (lo + hi);
    const double secant = hi - fhi * (hi - lo) / (fhi - flo);
    const bool shrinking = !last_was_secant || (hi - lo) <= 0.5 * width;
    if (std::isfinite(secant) && secant > lo && secant < hi && shrinking) {
      x = secant;
      last_was_secant = true;
    } else {
      last_was_secant = false;
    }
    width = hi - lo;

    const double fx = f(x);
    if (!std::isfinite(fx))
      throw non_convergence("find_root_bracketed: non-finite function value");
    if (std::abs(fx) < std::abs(best_f)) {
      best_x = x;
      best_f = fx;
    }
    if (std::abs(fx) <= opt.ftol) return {x, fx, it, true};
    if ((fx > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    if (hi - lo <= opt.xtol) return {best_x, best_f, it, opt.ftol == 0.0};
  }
  return {best_x, best_f, opt.max_iter, false};
}

}  // namespace coboson
