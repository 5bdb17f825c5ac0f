#pragma once

#include <cstdint>

namespace ocelkit {

/// Non-negative rational num/den kept exact for threshold comparisons.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const noexcept { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }

  /// Exact `num/den >= r`, treating `r` as the binary rational it denotes.
  bool at_least(double r) const noexcept;

  /// floor(100 * num / den)
  std::uint64_t percent_floor() const noexcept;

  friend bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return static_cast<unsigned __int128>(a.num) * b.den == static_cast<unsigned __int128>(b.num) * a.den;
  }
};

}  // namespace ocelkit
