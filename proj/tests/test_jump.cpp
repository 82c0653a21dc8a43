#include <doctest.h>

#include <stdexcept>
#include <random>
#include <set>

#include "aoxlab/harness.hpp"
#include "aoxlab/jump.hpp"

using namespace aoxlab;

namespace {

Engine128State steps(Engine128State st, ShiftTriple t, std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) st = xoroshiro_next_state(st, t);
  return st;
}

}  // namespace

TEST_CASE("transition matrix reproduces the update") {
  std::mt19937_64 rng(21);
  for (auto t : {ShiftTriple::original(), ShiftTriple::revised()}) {
    const auto m = xoroshiro_transition_matrix(t);
    for (int i = 0; i < 100; ++i) {
      const Engine128State st{rng(), rng()};
      REQUIRE(apply_matrix(m, st) == xoroshiro_next_state(st, t));
    }
  }
}

TEST_CASE("jump by 2^k equals sequential steps") {
  std::mt19937_64 rng(22);
  for (auto t : {ShiftTriple::original(), ShiftTriple::revised()}) {
    const Engine128State st{rng(), rng()};
    CHECK(xoroshiro_jump(st, t, 0) == xoroshiro_next_state(st, t));
    CHECK(xoroshiro_jump(st, t, 10) == steps(st, t, 1024));
    for (int k = 0; k <= 16; ++k) REQUIRE(xoroshiro_jump(st, t, k) == steps(st, t, std::uint64_t{1} << k));
  }
}

TEST_CASE("jump exponents add") {
  const Engine128State st{0x1234, 0xfeed};
  for (auto t : {ShiftTriple::original(), ShiftTriple::revised()}) {
    CHECK(xoroshiro_jump(xoroshiro_jump(st, t, 64), t, 64) == xoroshiro_jump(st, t, 65));
    CHECK(xoroshiro_jump(xoroshiro_jump(st, t, 126), t, 126) == xoroshiro_jump(st, t, 127));
  }
}

TEST_CASE("jump argument checks") {
  CHECK_THROWS_AS(xoroshiro_jump({1, 0}, ShiftTriple::original(), 128), std::out_of_range);
  CHECK_THROWS_AS(xoroshiro_jump({1, 0}, ShiftTriple::original(), -1), std::out_of_range);
  CHECK_THROWS_AS(xoroshiro_jump({0, 0}, ShiftTriple::original(), 3), std::invalid_argument);
}

TEST_CASE("period divides 2^128 - 1") {
  // T^(2^128) = T, i.e. T^(2^128 - 1) = I, for a full-period map.
  for (auto t : {ShiftTriple::original(), ShiftTriple::revised()}) {
    const auto m = xoroshiro_transition_matrix(t);
    auto sq = m;
    for (int i = 0; i < 128; ++i) sq = sq.multiply(sq);
    CHECK(sq == m);
  }
}

TEST_CASE("narrow engine matrix and jump") {
  const auto engines = find_full_period_engines(6, 3);
  REQUIRE(!engines.empty());
  for (const auto& e : engines) {
    CHECK(cycle_length(e, {1, 0}) == (1u << 12) - 1);
    const auto m = e.transition_matrix();
    for (std::uint32_t v = 1; v < (1u << 12); v += 37) {
      const auto st = e.unpack(v);
      REQUIRE(e.apply(m, st) == e.next_state(st));
      auto walk = st;
      for (int i = 0; i < 32; ++i) walk = e.next_state(walk);
      REQUIRE(e.jump(st, 5) == walk);
    }
  }
}

TEST_CASE("narrow partitions land at multiples of 2^width") {
  for (int width : {5, 6, 7, 8}) {
    const auto engines = find_full_period_engines(width, 1);
    REQUIRE(engines.size() == 1);
    const auto& e = engines.front();
    const NarrowXoroshiro::State base{1, 0};
    const std::uint64_t period = (std::uint64_t{1} << (2 * width)) - 1;
    std::vector<std::uint32_t> cycle;
    auto st = base;
    for (std::uint64_t i = 0; i < period; ++i) {
      cycle.push_back(e.pack(st));
      st = e.next_state(st);
    }
    for (std::uint64_t i = 0; i < 40; ++i) {
      const auto part = partition_sequence(e, base, i);
      const auto offset = (i << width) % period;
      REQUIRE(e.pack(part) == cycle[offset]);
    }
  }
}

TEST_CASE("full-period search finds only single-cycle engines") {
  for (const auto& e : find_full_period_engines(5, 100)) {
    std::set<std::uint32_t> seen;
    auto st = NarrowXoroshiro::State{1, 0};
    do {
      seen.insert(e.pack(st));
      st = e.next_state(st);
    } while (!(st == NarrowXoroshiro::State{1, 0}));
    REQUIRE(seen.size() == (1u << 10) - 1);
  }
}
