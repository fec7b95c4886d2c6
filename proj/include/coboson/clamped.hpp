#pragma once

#include <algorithm>

namespace coboson {

/// A low-temperature expansion that may go negative: the plotted value is
/// floored at zero and the unclamped value is kept alongside it.
struct ClampedValue {
  double value;
  double raw;
  bool clamped;

  static ClampedValue floor_at_zero(double raw) {
    return {std::max(raw, 0.0), raw, raw < 0.0};
  }
};

}  // namespace coboson
