#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace aoxlab {

using u128 = unsigned __int128;

inline constexpr u128 kU128Max = ~static_cast<u128>(0);

constexpr u128 make_u128(std::uint64_t hi, std::uint64_t lo) {
  return (static_cast<u128>(hi) << 64) | lo;
}
constexpr std::uint64_t lo64(u128 v) { return static_cast<std::uint64_t>(v); }
constexpr std::uint64_t hi64(u128 v) { return static_cast<std::uint64_t>(v >> 64); }

// Accepts 1..32 hex digits with an optional 0x prefix. Throws
// std::invalid_argument otherwise.
u128 parse_hex_u128(std::string_view text);

// Lower-case, 0x-prefixed, no leading zeros ("0x0" for zero).
std::string format_hex_u128(u128 value);

// Exact decimal rendering, used in reports where hex is unfriendly.
std::string format_dec_u128(u128 value);

}  // namespace aoxlab
