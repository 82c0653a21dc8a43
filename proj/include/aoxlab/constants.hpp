#pragma once

#include <cstdint>

namespace aoxlab::constants {

using u128 = unsigned __int128;

constexpr u128 make_u128(std::uint64_t hi, std::uint64_t lo) {
  return (static_cast<u128>(hi) << 64) | lo;
}

// PCG family, pcg-c 0.94 (pcg_variants.h):
//   PCG_DEFAULT_MULTIPLIER_128 = 2549297995355413924 * 2^64 + 4865540595714422341
//   PCG_DEFAULT_INCREMENT_128  = 6364136223846793005 * 2^64 + 1442695040888963407
inline constexpr u128 kPcgMultiplier128 =
    make_u128(2549297995355413924ULL, 4865540595714422341ULL);
inline constexpr u128 kPcgDefaultIncrement128 =
    make_u128(6364136223846793005ULL, 1442695040888963407ULL);

// Philox4x32, Random123 1.09 (philox.h):
//   PHILOX_M4x32_0/1 round multipliers, PHILOX_W32_0/1 Weyl key increments.
inline constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;  // golden ratio
inline constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;  // sqrt(3) - 1
inline constexpr int kPhiloxRounds = 10;

// MT19937, Matsumoto & Nishimura mt19937ar.c (2002).
inline constexpr int kMtN = 624;
inline constexpr int kMtM = 397;
inline constexpr std::uint32_t kMtMatrixA = 0x9908B0DFu;
inline constexpr std::uint32_t kMtUpperMask = 0x80000000u;
inline constexpr std::uint32_t kMtLowerMask = 0x7FFFFFFFu;
inline constexpr std::uint32_t kMtInitMultiplier = 1812433253u;
inline constexpr std::uint32_t kMtTemperB = 0x9D2C5680u;
inline constexpr std::uint32_t kMtTemperC = 0xEFC60000u;
inline constexpr std::uint32_t kMtDefaultSeed = 5489u;

}  // namespace aoxlab::constants
