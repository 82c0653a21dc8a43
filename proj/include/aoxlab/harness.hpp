#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aoxlab/engines.hpp"
#include "aoxlab/jump.hpp"
#include "aoxlab/quality_tests.hpp"
#include "aoxlab/scramblers.hpp"
#include "aoxlab/uint128.hpp"

namespace aoxlab {

// ---------------------------------------------------------------------------
// Seed sampling

struct SeedPlan {
  int seed_bits = 128;
  std::size_t count = 100;
  std::vector<u128> seeds;
};

/// seeds[i] = 1 + i * floor(2^n / count), exact in 128-bit arithmetic.
/// Throws std::invalid_argument unless 1 <= n <= 128, count >= 1 and
/// count <= 2^n.
SeedPlan make_seed_plan(int n, std::size_t count = 100);

// ---------------------------------------------------------------------------
// Test configuration

enum class TestKind { binary_rank, linear_complexity, hwd, custom };

std::string_view to_string(TestKind kind);
TestKind parse_test_kind(std::string_view name);

/// Where a bit test reads its bits from.
///   msb:  top bits_per_word bits of each permuted 32-bit word
///   bit0: bit 0 of each raw 64-bit output (permutation ignored)
enum class BitExtraction { msb, bit0 };

struct TestConfig {
  std::string id;
  TestKind kind = TestKind::binary_rank;
  BitExtraction extraction = BitExtraction::msb;
  int bits_per_word = 1;
  int matrix_size = 256;
  int num_matrices = 40;
  std::size_t block_len = 5000;
  std::size_t num_blocks = 200;
  HwdConfig hwd;
  /// Only for TestKind::custom; receives a freshly seeded engine.
  std::function<TestOutcome(Engine&, OutputPermutation)> custom;
};

struct Battery {
  std::string name;
  std::string version;
  int seed_bits = 128;
  std::size_t seed_count = 100;
  std::vector<TestConfig> tests;
};

/// Parses a battery from its JSON text. Throws std::invalid_argument on
/// unknown keys' values or missing fields.
Battery parse_battery(std::string_view json_text);

/// Loads `<battery dir>/<name>.json`; falls back to the built-in copy of
/// desk-v1. Throws std::invalid_argument if the name is unknown.
Battery load_battery(std::string_view name);

/// The built-in desk-v1 battery text.
std::string_view builtin_battery_json();

// ---------------------------------------------------------------------------
// Suite runner

struct SuiteReport {
  std::string battery;
  GeneratorKind generator = GeneratorKind::xoroshiro128aox;
  ShiftTriple shifts = ShiftTriple::original();
  OutputPermutation permutation = OutputPermutation::std32;
  std::vector<u128> seeds;
  /// Ordered by seed index, then by test order within the battery.
  std::vector<TestOutcome> outcomes;
  std::vector<std::string> systematic_failures;
};

/// Test ids whose outcome is fail for every one of `seed_count` seeds.
/// A test with fewer than seed_count fail outcomes, or any error or pass
/// outcome, is not systematic. Order follows first appearance.
std::vector<std::string> find_systematic_failures(std::span<const TestOutcome> outcomes,
                                                  std::size_t seed_count);

/// Runs a single configured test on a fresh engine seeded with `seed`.
/// Exceptions are caught and turned into an error outcome.
TestOutcome run_test(const TestConfig& cfg, GeneratorKind kind, ShiftTriple shifts,
                     OutputPermutation perm, u128 seed);

/// Runs every test for every seed. threads = 0 uses the hardware
/// concurrency. The result does not depend on the thread count.
SuiteReport run_suite(GeneratorKind kind, ShiftTriple shifts, OutputPermutation perm,
                      const SeedPlan& plan, std::span<const TestConfig> tests,
                      unsigned threads = 0);

// ---------------------------------------------------------------------------
// Parallel streams

/// Round-robin over engines, `factor` consecutive outputs from each.
class Interleaved {
 public:
  /// Throws std::invalid_argument for fewer than 2 engines or factor < 1.
  Interleaved(std::vector<Engine> engines, int factor);

  std::uint64_t next();
  void fill(std::span<std::uint64_t> out);

 private:
  std::vector<Engine> engines_;
  int factor_;
  std::size_t current_ = 0;
  int taken_ = 0;
};

/// min(1, n^2 L / P). Returns 0 for n = 0. Throws std::invalid_argument for
/// P = 0 or L > P.
double overlap_probability(u128 n_generators, u128 seq_len, u128 period);

/// Accepts decimal digits or 0x-prefixed hex; throws std::invalid_argument.
u128 parse_count_u128(std::string_view text);

/// The seeded base state advanced by index * 2^64 steps.
/// Throws std::invalid_argument if the seed maps to the zero state.
Engine128State partition_sequence(u128 base_seed, std::uint64_t index,
                                  ShiftTriple shifts = ShiftTriple::original());

/// Reduced-width analogue: `base` advanced by index * 2^width steps.
NarrowXoroshiro::State partition_sequence(const NarrowXoroshiro& engine,
                                          NarrowXoroshiro::State base, std::uint64_t index);

}  // namespace aoxlab
