#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "aoxlab/constants.hpp"
#include "aoxlab/uint128.hpp"

namespace aoxlab {

constexpr std::uint64_t rotl64(std::uint64_t x, int k) {
  return k == 0 ? x : (x << k) | (x >> (64 - k));
}

/// The 128-bit state of the xoroshiro128 engine.
struct Engine128State {
  std::uint64_t s0 = 0;
  std::uint64_t s1 = 0;

  constexpr bool is_zero() const { return s0 == 0 && s1 == 0; }
  friend constexpr bool operator==(const Engine128State&, const Engine128State&) = default;
};

/// Rotation/shift constants (a, b, c) of a xoroshiro128 variant. Only the
/// 2016 triple (55, 14, 36) and the 2018 triple (24, 16, 37) are valid.
class ShiftTriple {
 public:
  static constexpr ShiftTriple original() { return ShiftTriple(55, 14, 36); }
  static constexpr ShiftTriple revised() { return ShiftTriple(24, 16, 37); }

  /// Throws std::invalid_argument for any other triple.
  static ShiftTriple from(int a, int b, int c);
  /// Accepts "55,14,36" or "55-14-36".
  static ShiftTriple parse(std::string_view text);

  constexpr int a() const { return a_; }
  constexpr int b() const { return b_; }
  constexpr int c() const { return c_; }

  /// "55-14-36" style, matching how generator variants are usually named.
  std::string to_string() const;

  friend constexpr bool operator==(const ShiftTriple&, const ShiftTriple&) = default;

 private:
  constexpr ShiftTriple(int a, int b, int c) : a_(a), b_(b), c_(c) {}
  int a_;
  int b_;
  int c_;
};

/// One xoroshiro128 transition. Pure; F2-linear, so (0, 0) maps to itself.
constexpr Engine128State xoroshiro_next_state(Engine128State st, ShiftTriple shifts) {
  const std::uint64_t sx = st.s0 ^ st.s1;
  return {rotl64(st.s0, shifts.a()) ^ sx ^ (sx << shifts.b()), rotl64(sx, shifts.c())};
}

enum class OutputFunction { aox, plus };

/// xoroshiro128 engine with a selectable output function. next() computes
/// the output from the pre-update state, then advances.
class Xoroshiro128 {
 public:
  Xoroshiro128(Engine128State state, ShiftTriple shifts, OutputFunction output);

  std::uint64_t next();
  void fill(std::span<std::uint64_t> out);

  Engine128State state() const { return state_; }
  void set_state(Engine128State state);
  ShiftTriple shifts() const { return shifts_; }
  OutputFunction output_function() const { return output_; }

 private:
  Engine128State state_;
  ShiftTriple shifts_;
  OutputFunction output_;
};

// ---------------------------------------------------------------------------
// pcg64 (PCG XSL RR 128/64, setseq variant)

struct Pcg64State {
  u128 state = 0;
  u128 increment = 1;  // always odd
};

/// Advances the 128-bit LCG and returns the XSL-RR output of the new state,
/// as pcg64_random_r does.
std::pair<Pcg64State, std::uint64_t> pcg64_next(Pcg64State st);

class Pcg64 {
 public:
  /// pcg64_srandom_r(initstate, initseq).
  Pcg64(u128 initstate, u128 initseq);
  /// Raw state; forces the increment odd.
  static Pcg64 from_state(Pcg64State st);

  std::uint64_t next();
  void fill(std::span<std::uint64_t> out);
  const Pcg64State& state() const { return st_; }

 private:
  Pcg64() = default;
  Pcg64State st_;
};

// ---------------------------------------------------------------------------
// philox4x32-10

/// Lane 0 is the least significant 32 bits of the 128-bit counter.
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key);

/// Adds one to the 128-bit counter with carry across lanes.
constexpr PhiloxCounter increment(PhiloxCounter c) {
  for (auto& lane : c) {
    if (++lane != 0) break;
  }
  return c;
}

struct PhiloxState {
  PhiloxCounter counter{};
  PhiloxKey key{};
};

/// Each 128-bit block yields two 64-bit outputs, lanes (0,1) then (2,3),
/// lane 0 in the low half. The block for the current counter is produced
/// first, then the counter is incremented.
class Philox4x32 {
 public:
  explicit Philox4x32(PhiloxState st);

  std::uint64_t next();
  void fill(std::span<std::uint64_t> out);
  const PhiloxState& state() const { return st_; }

 private:
  PhiloxState st_;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
};

// ---------------------------------------------------------------------------
// mt32 (MT19937)

struct Mt32State {
  std::array<std::uint32_t, constants::kMtN> words{};
  int index = constants::kMtN;  // next word to temper; kMtN forces a twist
};

class Mt32 {
 public:
  /// init_genrand(seed).
  explicit Mt32(std::uint32_t seed = constants::kMtDefaultSeed);

  /// Loads raw state words the way boost::random::mt19937::seed(first, last)
  /// does: copy, then rebuild the unused low bits of word 0 from words m-1
  /// and n-1, and force a nonzero state.
  static Mt32 from_words(const std::array<std::uint32_t, constants::kMtN>& words);

  std::uint32_t next32();
  /// Two consecutive 32-bit outputs, first in the low half.
  std::uint64_t next();
  void fill(std::span<std::uint64_t> out);
  const Mt32State& state() const { return st_; }

 private:
  void twist();
  Mt32State st_;
};

// ---------------------------------------------------------------------------
// Runtime-selected engines

enum class GeneratorKind { xoroshiro128aox, xoroshiro128plus, pcg64, philox4x32_10, mt32 };

GeneratorKind parse_generator(std::string_view name);
std::string_view to_string(GeneratorKind kind);
constexpr bool is_xoroshiro(GeneratorKind kind) {
  return kind == GeneratorKind::xoroshiro128aox || kind == GeneratorKind::xoroshiro128plus;
}

/// Value-semantic wrapper over the five generators. next() always returns
/// 64 bits; next_native() returns the generator's own word (32 bits for mt32,
/// zero-extended).
class Engine {
 public:
  using Impl = std::variant<Xoroshiro128, Pcg64, Philox4x32, Mt32>;

  Engine(GeneratorKind kind, Impl impl) : kind_(kind), impl_(std::move(impl)) {}

  GeneratorKind kind() const { return kind_; }
  int native_bits() const { return kind_ == GeneratorKind::mt32 ? 32 : 64; }

  std::uint64_t next();
  std::uint64_t next_native();
  void fill(std::span<std::uint64_t> out);

  const Impl& impl() const { return impl_; }
  Impl& impl() { return impl_; }

 private:
  GeneratorKind kind_;
  Impl impl_;
};

/// Fallback for a xoroshiro seed of zero.
inline constexpr Engine128State kZeroSeedFallback{1, 0};

/// Deterministic seed-to-state mapping:
///   xoroshiro: s0 = low 64 bits, s1 = high 64 bits; zero -> kZeroSeedFallback
///   pcg64:     pcg64_srandom_r(initstate = low 64, initseq = high 64)
///   philox:    key = low 64 bits (lane 0 = low 32), counter = 0
///   mt32:      init_genrand(low 32 bits)
Engine seed_engine(GeneratorKind kind, u128 seed, ShiftTriple shifts = ShiftTriple::original());

}  // namespace aoxlab
