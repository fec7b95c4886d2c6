#pragma once

// Geometric Schmidt spectrum lambda_m = (1 - x) x^m of a two-constituent
// composite boson, and the entanglement measures derived from it.

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "coboson/errors.hpp"

namespace coboson {

enum class Kind { BiFermion, BiBoson };

inline std::string_view to_string(Kind k) {
  return k == Kind::BiFermion ? "bifermion" : "biboson";
}

inline Kind parse_kind(std::string_view s) {
  if (s == "bifermion" || s == "fermion" || s == "BiFermion") return Kind::BiFermion;
  if (s == "biboson" || s == "boson" || s == "BiBoson") return Kind::BiBoson;
  throw domain_error("unknown constituent kind: " + std::string(s));
}

/// Entanglement parameter and constituent statistics. x = 0 is a separable
/// pair; x -> 1 is maximal entanglement.
class SchmidtSpec {
 public:
  SchmidtSpec(double x, Kind kind) : x_(x), kind_(kind) {
    detail::require(std::isfinite(x) && x >= 0.0 && x <= 1.0,
                    "entanglement parameter x must lie in [0, 1]");
  }

  [[nodiscard]] double x() const { return x_; }
  [[nodiscard]] Kind kind() const { return kind_; }

 private:
  double x_;
  Kind kind_;
};

/// First M Schmidt weights, not renormalized; the omitted mass is x^M.
struct TruncatedWeights {
  std::vector<double> weights;
  double truncation_tail = 0.0;

  [[nodiscard]] std::size_t size() const { return weights.size(); }
};

namespace detail {
inline void require_below_one(const SchmidtSpec& s, const char* op) {
  if (!(s.x() < 1.0))
    throw domain_error(std::string(op) + ": undefined at x = 1");
}
}  // namespace detail

inline double schmidt_weight(const SchmidtSpec& s, unsigned m) {
  detail::require_below_one(s, "schmidt_weight");
  return (1.0 - s.x()) * std::pow(s.x(), static_cast<double>(m));
}

/// Sum of squared weights, (1 - x) / (1 + x).
inline double purity(const SchmidtSpec& s) {
  detail::require_below_one(s, "purity");
  return (1.0 - s.x()) / (1.0 + s.x());
}

/// K = 1 / purity = (1 + x) / (1 - x).
inline double schmidt_number(const SchmidtSpec& s) {
  detail::require_below_one(s, "schmidt_number");
  return (1.0 + s.x()) / (1.0 - s.x());
}

/// Truncates at the first M with x^M < tail_tolerance.
inline TruncatedWeights truncate_weights(const SchmidtSpec& s,
                                         double tail_tolerance = 1e-14) {
  detail::require_below_one(s, "truncate_weights");
  detail::require(tail_tolerance > 0.0 && tail_tolerance < 1.0,
                  "truncate_weights: tail tolerance must lie in (0, 1)");
  TruncatedWeights tw;
  double xm = 1.0;
  unsigned m = 0;
  while (xm >= tail_tolerance) {
    tw.weights.push_back(schmidt_weight(s, m));
    ++m;
    xm = std::pow(s.x(), static_cast<double>(m));
  }
  tw.truncation_tail = xm;
  return tw;
}

}  // namespace coboson
