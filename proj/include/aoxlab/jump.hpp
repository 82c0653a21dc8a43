#pragma once

#include <cstdint>
#include <vector>

#include "aoxlab/bit_matrix.hpp"
#include "aoxlab/engines.hpp"

namespace aoxlab {

// State vectors for the 128-bit engine use bit i = s0_i for i < 64 and
// bit 64 + i = s1_i.

/// 128x128 matrix T with xoroshiro_next_state(x) == T x.
BitMatrix xoroshiro_transition_matrix(ShiftTriple shifts);

/// T^(2^k); cached per shift triple, thread-safe.
BitMatrix xoroshiro_jump_matrix(ShiftTriple shifts, int log2_distance);

Engine128State apply_matrix(const BitMatrix& m, Engine128State st);

/// The state 2^log2_distance transitions ahead. Throws std::out_of_range
/// unless 0 <= log2_distance < 128, std::invalid_argument on a zero state.
Engine128State xoroshiro_jump(Engine128State st, ShiftTriple shifts, int log2_distance);

/// m^e by repeated squaring.
BitMatrix matrix_power(const BitMatrix& m, std::uint64_t e);

/// Reduced-width xoroshiro: two `width`-bit words, same update shape with
/// rotations and the shift taken mod `width`. Used where the full 2^128 - 1
/// cycle cannot be enumerated.
class NarrowXoroshiro {
 public:
  struct State {
    std::uint32_t s0 = 0;
    std::uint32_t s1 = 0;
    friend bool operator==(const State&, const State&) = default;
  };

  /// width in [2, 16]; 1 <= a, b, c < width.
  NarrowXoroshiro(int width, int a, int b, int c);

  int width() const { return width_; }
  int a() const { return a_; }
  int b() const { return b_; }
  int c() const { return c_; }

  State next_state(State st) const;
  /// Width-n analogue of the AOX output, indices mod n.
  std::uint32_t aox(State st) const;

  std::uint32_t pack(State st) const { return st.s0 | (st.s1 << width_); }
  State unpack(std::uint32_t v) const { return {v & mask_, (v >> width_) & mask_}; }

  BitMatrix transition_matrix() const;
  State apply(const BitMatrix& m, State st) const;
  State jump(State st, int log2_distance) const;

 private:
  std::uint32_t rotl(std::uint32_t x, int k) const;
  int width_, a_, b_, c_;
  std::uint32_t mask_;
};

/// Length of the cycle through `start` (start must be nonzero).
std::uint64_t cycle_length(const NarrowXoroshiro& engine, NarrowXoroshiro::State start);

/// All (a, b, c) for which the width-n engine has a single cycle over the
/// 2^(2n) - 1 nonzero states, in lexicographic order; stops after
/// `max_results` hits. Brute force, intended for width <= 10.
std::vector<NarrowXoroshiro> find_full_period_engines(int width, std::size_t max_results);

}  // namespace aoxlab
