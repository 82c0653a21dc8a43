#include "aoxlab/jump.hpp"

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace aoxlab {

namespace {

std::array<std::uint64_t, 2> to_vec(Engine128State st) { return {st.s0, st.s1}; }

}  // namespace

BitMatrix xoroshiro_transition_matrix(ShiftTriple shifts) {
  BitMatrix t(128, 128);
  for (std::size_t j = 0; j < 128; ++j) {
    Engine128State e{};
    if (j < 64) {
      e.s0 = std::uint64_t{1} << j;
    } else {
      e.s1 = std::uint64_t{1} << (j - 64);
    }
    const Engine128State col = xoroshiro_next_state(e, shifts);
    for (std::size_t i = 0; i < 128; ++i) {
      const bool bit = i < 64 ? (col.s0 >> i) & 1 : (col.s1 >> (i - 64)) & 1;
      if (bit) t.set(i, j, true);
    }
  }
  return t;
}

BitMatrix xoroshiro_jump_matrix(ShiftTriple shifts, int log2_distance) {
  if (log2_distance < 0 || log2_distance >= 128) {
    throw std::out_of_range("log2_distance must be in [0, 128)");
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<BitMatrix>> cache;
  std::lock_guard lock(mu);
  auto& powers = cache[{shifts.a(), shifts.b()}];
  if (powers.empty()) powers.push_back(xoroshiro_transition_matrix(shifts));
  while (static_cast<int>(powers.size()) <= log2_distance) {
    powers.push_back(powers.back().multiply(powers.back()));
  }
  return powers[static_cast<std::size_t>(log2_distance)];
}

Engine128State apply_matrix(const BitMatrix& m, Engine128State st) {
  const auto v = to_vec(st);
  const auto out = m.apply(v);
  return {out[0], out[1]};
}

Engine128State xoroshiro_jump(Engine128State st, ShiftTriple shifts, int log2_distance) {
  if (st.is_zero()) throw std::invalid_argument("xoroshiro_jump: zero state");
  return apply_matrix(xoroshiro_jump_matrix(shifts, log2_distance), st);
}

BitMatrix matrix_power(const BitMatrix& m, std::uint64_t e) {
  BitMatrix result = BitMatrix::identity(m.rows());
  BitMatrix base = m;
  while (e != 0) {
    if (e & 1) result = result.multiply(base);
    e >>= 1;
    if (e != 0) base = base.multiply(base);
  }
  return result;
}

// --- reduced width ------------------------------------------------------------

NarrowXoroshiro::NarrowXoroshiro(int width, int a, int b, int c)
    : width_(width), a_(a), b_(b), c_(c), mask_(0) {
  if (width < 2 || width > 16) throw std::invalid_argument("narrow width must be in [2, 16]");
  for (int k : {a, b, c}) {
    if (k < 1 || k >= width) throw std::invalid_argument("narrow shift out of range");
  }
  mask_ = (std::uint32_t{1} << width) - 1;
}

std::uint32_t NarrowXoroshiro::rotl(std::uint32_t x, int k) const {
  k %= width_;
  if (k == 0) return x;
  return ((x << k) | (x >> (width_ - k))) & mask_;
}

NarrowXoroshiro::State NarrowXoroshiro::next_state(State st) const {
  const std::uint32_t sx = st.s0 ^ st.s1;
  return {rotl(st.s0, a_) ^ sx ^ ((sx << b_) & mask_), rotl(sx, c_)};
}

std::uint32_t NarrowXoroshiro::aox(State st) const {
  const std::uint32_t sx = st.s0 ^ st.s1;
  const std::uint32_t sa = st.s0 & st.s1;
  return sx ^ (rotl(sa, 1) | rotl(sa, 2));
}

BitMatrix NarrowXoroshiro::transition_matrix() const {
  const auto n = static_cast<std::size_t>(2 * width_);
  BitMatrix t(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint32_t col = pack(next_state(unpack(std::uint32_t{1} << j)));
    for (std::size_t i = 0; i < n; ++i) {
      if ((col >> i) & 1) t.set(i, j, true);
    }
  }
  return t;
}

NarrowXoroshiro::State NarrowXoroshiro::apply(const BitMatrix& m, State st) const {
  const std::uint64_t v = pack(st);
  const auto out = m.apply(std::span<const std::uint64_t>(&v, 1));
  return unpack(static_cast<std::uint32_t>(out[0]));
}

NarrowXoroshiro::State NarrowXoroshiro::jump(State st, int log2_distance) const {
  if (log2_distance < 0 || log2_distance >= 2 * width_) {
    throw std::out_of_range("log2_distance must be in [0, 2 * width)");
  }
  BitMatrix m = transition_matrix();
  for (int k = 0; k < log2_distance; ++k) m = m.multiply(m);
  return apply(m, st);
}

std::uint64_t cycle_length(const NarrowXoroshiro& engine, NarrowXoroshiro::State start) {
  if (start.s0 == 0 && start.s1 == 0) throw std::invalid_argument("cycle_length: zero state");
  const std::uint64_t limit = std::uint64_t{1} << (2 * engine.width());
  auto st = start;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    st = engine.next_state(st);
    if (st == start) return n;
  }
  // The map is not a bijection; start lies on a tail, not a cycle.
  return 0;
}

std::vector<NarrowXoroshiro> find_full_period_engines(int width, std::size_t max_results) {
  std::vector<NarrowXoroshiro> found;
  const std::uint64_t full = (std::uint64_t{1} << (2 * width)) - 1;
  for (int a = 1; a < width; ++a) {
    for (int b = 1; b < width; ++b) {
      for (int c = 1; c < width; ++c) {
        NarrowXoroshiro e(width, a, b, c);
        if (cycle_length(e, {1, 0}) == full) {
          found.push_back(e);
          if (found.size() >= max_results) return found;
        }
      }
    }
  }
  return found;
}

}  // namespace aoxlab
