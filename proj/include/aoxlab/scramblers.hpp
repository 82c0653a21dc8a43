#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "aoxlab/engines.hpp"

namespace aoxlab {

/// AND-OR-XOR output: r = (s0 ^ s1) ^ (rotl(s0 & s1, 1) | rotl(s0 & s1, 2)).
/// Bit i of r is s0_i ^ s1_i ^ ((s0_{i-1} & s1_{i-1}) | (s0_{i-2} & s1_{i-2})),
/// indices mod 64.
constexpr std::uint64_t aox_output(std::uint64_t s0, std::uint64_t s1) {
  const std::uint64_t sx = s0 ^ s1;
  const std::uint64_t sa = s0 & s1;
  return sx ^ (rotl64(sa, 1) | rotl64(sa, 2));
}

constexpr std::uint64_t plus_output(std::uint64_t s0, std::uint64_t s1) { return s0 + s1; }

constexpr std::uint64_t apply_output(OutputFunction f, std::uint64_t s0, std::uint64_t s1) {
  return f == OutputFunction::aox ? aox_output(s0, s1) : plus_output(s0, s1);
}

constexpr std::uint32_t reverse_bits32(std::uint32_t x) {
  x = ((x >> 1) & 0x55555555u) | ((x & 0x55555555u) << 1);
  x = ((x >> 2) & 0x33333333u) | ((x & 0x33333333u) << 2);
  x = ((x >> 4) & 0x0F0F0F0Fu) | ((x & 0x0F0F0F0Fu) << 4);
  x = ((x >> 8) & 0x00FF00FFu) | ((x & 0x00FF00FFu) << 8);
  return (x >> 16) | (x << 16);
}

/// How a 64-bit output is cut into 32-bit words for a 32-bit test stream.
enum class OutputPermutation { std32, rev32, std32lo, rev32lo, std32hi, rev32hi };

inline constexpr OutputPermutation kAllPermutations[] = {
    OutputPermutation::std32,   OutputPermutation::rev32,   OutputPermutation::std32lo,
    OutputPermutation::rev32lo, OutputPermutation::std32hi, OutputPermutation::rev32hi};

OutputPermutation parse_permutation(std::string_view name);
std::string_view to_string(OutputPermutation perm);

/// 2 for std32/rev32, 1 for the half-word variants.
constexpr int words_per_output(OutputPermutation perm) {
  return perm == OutputPermutation::std32 || perm == OutputPermutation::rev32 ? 2 : 1;
}

/// Writes the 32-bit words for one output into out[0..words_per_output) and
/// returns the count. Low half first for the two-word forms.
constexpr int permute_output(std::uint64_t word, OutputPermutation perm, std::uint32_t* out) {
  const auto lo = static_cast<std::uint32_t>(word);
  const auto hi = static_cast<std::uint32_t>(word >> 32);
  switch (perm) {
    case OutputPermutation::std32:
      out[0] = lo;
      out[1] = hi;
      return 2;
    case OutputPermutation::rev32:
      out[0] = reverse_bits32(lo);
      out[1] = reverse_bits32(hi);
      return 2;
    case OutputPermutation::std32lo:
      out[0] = lo;
      return 1;
    case OutputPermutation::rev32lo:
      out[0] = reverse_bits32(lo);
      return 1;
    case OutputPermutation::std32hi:
      out[0] = hi;
      return 1;
    case OutputPermutation::rev32hi:
      out[0] = reverse_bits32(hi);
      return 1;
  }
  return 0;
}

std::vector<std::uint32_t> permute_output(std::uint64_t word, OutputPermutation perm);

/// Stream of 32-bit words obtained by permuting successive 64-bit outputs.
template <class Generator>
class PermutedStream {
 public:
  PermutedStream(Generator& gen, OutputPermutation perm) : gen_(gen), perm_(perm) {}

  std::uint32_t next() {
    if (pos_ == count_) {
      count_ = permute_output(gen_.next(), perm_, buf_);
      pos_ = 0;
    }
    return buf_[pos_++];
  }

 private:
  Generator& gen_;
  OutputPermutation perm_;
  std::uint32_t buf_[2] = {0, 0};
  int count_ = 0;
  int pos_ = 0;
};

/// Bit 0 of each of n consecutive 64-bit outputs, in output order.
std::vector<std::uint8_t> bit0_stream(Engine& engine, std::size_t n);

}  // namespace aoxlab
