#pragma once

#include <cmath>
#include <cstdint>

#include "vdc/error.hpp"

namespace vdc {

/// Summation range (X, X+Y]: left endpoint exclusive, length Y.
struct Window {
  double X = 0.0;
  double Y = 0.0;

  /// First integer in the range (valid only when integer_count() > 0).
  std::int64_t first() const {
    return static_cast<std::int64_t>(std::floor(X)) + 1;
  }
  /// Last integer in the range.
  std::int64_t last() const {
    return static_cast<std::int64_t>(std::floor(X + Y));
  }
  std::int64_t integer_count() const {
    std::int64_t n = last() - first() + 1;
    return n > 0 ? n : 0;
  }

  void require_valid() const {
    if (!(Y > 0.0) || !std::isfinite(X) || !std::isfinite(Y)) {
      throw invalid_window_error("window length Y must be positive");
    }
  }
};

}  // namespace vdc
