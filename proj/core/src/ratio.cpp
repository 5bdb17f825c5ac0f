#include "ocelkit/ratio.hpp"

#include <bit>
#include <cmath>

namespace ocelkit {

bool Ratio::at_least(double r) const noexcept {
  if (std::isnan(r)) return false;
  if (r <= 0.0) return true;
  if (std::isinf(r) || den == 0) return false;

  // r = mantissa * 2^exponent with an odd integer mantissa below 2^53.
  int exp = 0;
  const double frac = std::frexp(r, &exp);
  auto mantissa = static_cast<std::uint64_t>(std::ldexp(frac, 53));
  int exponent = exp - 53;
  const int tz = std::countr_zero(mantissa);
  mantissa >>= tz;
  exponent += tz;

  using u128 = unsigned __int128;
  const u128 rhs = static_cast<u128>(mantissa) * den;  // < 2^117
  if (exponent >= 0) {
    // num >= rhs * 2^e  <=>  floor(num / 2^e) >= rhs
    if (exponent >= 64) return false;
    return static_cast<u128>(num >> exponent) >= rhs;
  }
  // num * 2^-exponent >= mantissa * den
  if (num == 0) return false;
  const int shift = -exponent;
  const int num_width = 64 - std::countl_zero(num);
  if (num_width + shift > 127) return true;  // lhs >= 2^127 > rhs
  return (static_cast<u128>(num) << shift) >= rhs;
}

std::uint64_t Ratio::percent_floor() const noexcept {
  if (den == 0) return 0;
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(num) * 100 / den);
}

}  // namespace ocelkit
