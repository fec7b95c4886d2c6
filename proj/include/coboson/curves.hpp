#pragma once

// Tabular sweep output. CSV columns:
//   series,x,kind,N,estimator,abscissa,value,raw_value,flags
// Numbers are printed with 12 significant digits and flags are joined by '|',
// so identical inputs give byte-identical files.

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coboson/schmidt.hpp"

namespace coboson {

namespace flag {
inline constexpr const char* clamped = "clamped";
inline constexpr const char* validity_warning = "validity-warning";
inline constexpr const char* cutoff = "cutoff-flag";
}  // namespace flag

struct CurveRow {
  std::string series;
  std::optional<double> x;
  std::optional<Kind> kind;
  std::optional<unsigned long> n;
  std::string estimator;
  double abscissa = 0.0;
  double value = 0.0;
  double raw_value = 0.0;
  std::vector<std::string> flags;
};

struct CurveSet {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<CurveRow> rows;

  void set_meta(const std::string& key, const std::string& value) {
    for (auto& kv : metadata) {
      if (kv.first == key) {
        kv.second = value;
        return;
      }
    }
    metadata.emplace_back(key, value);
  }

  [[nodiscard]] std::vector<std::string> series_names() const {
    std::vector<std::string> names;
    for (const auto& r : rows)
      if (std::find(names.begin(), names.end(), r.series) == names.end()) names.push_back(r.series);
    return names;
  }

  [[nodiscard]] std::vector<CurveRow> series(const std::string& name) const {
    std::vector<CurveRow> out;
    for (const auto& r : rows)
      if (r.series == name) out.push_back(r);
    return out;
  }

  /// Orders rows by abscissa within each series, keeping series in order of
  /// first appearance.
  void sort_rows() {
    const auto names = series_names();
    auto rank = [&](const std::string& s) {
      return std::find(names.begin(), names.end(), s) - names.begin();
    };
    std::stable_sort(rows.begin(), rows.end(), [&](const CurveRow& a, const CurveRow& b) {
      const auto ra = rank(a.series), rb = rank(b.series);
      if (ra != rb) return ra < rb;
      return a.abscissa < b.abscissa;
    });
  }
};

inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string join_flags(const std::vector<std::string>& flags) {
  std::string out;
  for (const auto& f : flags) {
    if (!out.empty()) out += '|';
    out += f;
  }
  return out;
}

inline void write_csv(std::ostream& os, const CurveSet& cs) {
  os << "series,x,kind,N,estimator,abscissa,value,raw_value,flags\n";
  for (const auto& r : cs.rows) {
    os << r.series << ',' << (r.x ? format_number(*r.x) : "") << ','
       << (r.kind ? std::string(to_string(*r.kind)) : "") << ','
       << (r.n ? std::to_string(*r.n) : "") << ',' << r.estimator << ','
       << format_number(r.abscissa) << ',' << format_number(r.value) << ','
       << format_number(r.raw_value) << ',' << join_flags(r.flags) << '\n';
  }
}

inline std::string to_csv(const CurveSet& cs) {
  std::ostringstream os;
  write_csv(os, cs);
  return os.str();
}

}  // namespace coboson
