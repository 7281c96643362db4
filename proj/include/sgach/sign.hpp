#pragma once

#include <cstdint>

namespace sgach {

enum class Sign : std::uint8_t { positive = 0, negative = 1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::positive : Sign::negative;
}

constexpr Sign flip(Sign s) noexcept {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}

constexpr bool is_negative(Sign s) noexcept { return s == Sign::negative; }

constexpr char sign_token(Sign s) noexcept {
  return s == Sign::positive ? '+' : '-';
}

}  // namespace sgach
