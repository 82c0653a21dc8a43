#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aoxlab/bit_matrix.hpp"
#include "aoxlab/engines.hpp"
#include "aoxlab/stats_math.hpp"
#include "aoxlab/uint128.hpp"

namespace aoxlab {

enum class OutcomeStatus { pass, fail, error };

std::string_view to_string(OutcomeStatus s);

/// Result of one test on one seed.
struct TestOutcome {
  std::string test;
  std::map<std::string, double> params;
  u128 seed = 0;
  double statistic = 0.0;
  std::vector<double> p_values;
  OutcomeStatus status = OutcomeStatus::pass;
  std::string error;

  /// fail if any p-value is outside [0.001, 0.999].
  void classify_p_values();
};

struct InsufficientData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Bit sources

class BitSource {
 public:
  virtual ~BitSource() = default;
  /// Throws InsufficientData when a finite source is exhausted.
  virtual bool next_bit() = 0;
};

class VectorBitSource : public BitSource {
 public:
  explicit VectorBitSource(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}
  bool next_bit() override;

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t pos_ = 0;
};

/// Bit 0 of each successive 64-bit output of a generator.
template <class Generator>
class Bit0Source : public BitSource {
 public:
  explicit Bit0Source(Generator& gen) : gen_(gen) {}
  bool next_bit() override { return gen_.next() & 1; }

 private:
  Generator& gen_;
};

/// The top `bits_per_word` bits of each 32-bit word, most significant
/// first. This is how floating-point oriented suites see a 32-bit stream.
template <class WordStream>
class TopBitsSource : public BitSource {
 public:
  TopBitsSource(WordStream& words, int bits_per_word) : words_(words), per_word_(bits_per_word) {
    if (bits_per_word < 1 || bits_per_word > 32) {
      throw std::invalid_argument("bits_per_word must be in [1, 32]");
    }
  }
  bool next_bit() override {
    if (left_ == 0) {
      cur_ = words_.next();
      left_ = per_word_;
    }
    --left_;
    const int bit = 31 - (per_word_ - 1 - left_);
    return (cur_ >> bit) & 1;
  }

 private:
  WordStream& words_;
  int per_word_;
  std::uint32_t cur_ = 0;
  int left_ = 0;
};

// ---------------------------------------------------------------------------
// Binary rank

struct RankTestDetail {
  std::vector<std::size_t> ranks;
  /// Observed counts for rank <= full-2, full-1, full.
  std::array<std::uint64_t, 3> observed{};
  std::array<double, 3> expected{};
  double chisq = 0.0;
  PValue p;
};

/// Fills num_matrices square matrices row by row from consecutive bits and
/// compares the rank histogram with the random-matrix distribution (chi^2,
/// df = 2, upper-tail p). matrix_size must be one of 32..1024 (powers of two
/// and 1024), num_matrices >= 20.
RankTestDetail binary_rank_detail(BitSource& bits, int matrix_size, int num_matrices);
TestOutcome binary_rank_test(BitSource& bits, int matrix_size, int num_matrices);

// ---------------------------------------------------------------------------
// Linear complexity

/// Length of the shortest LFSR generating `bits` (Berlekamp-Massey over F2).
/// Each element is treated as a bit (nonzero = 1).
std::size_t linear_complexity(std::span<const std::uint8_t> bits);

/// Linear complexity after each prefix: result[i] is the complexity of
/// bits[0..i].
std::vector<std::size_t> linear_complexity_profile(std::span<const std::uint8_t> bits);

/// Expected complexity of a random block of length m.
double expected_linear_complexity(std::size_t m);

struct LinearComplexityDetail {
  std::vector<std::size_t> complexities;
  std::array<std::uint64_t, 7> observed{};
  double chisq = 0.0;
  PValue p;
};

/// Bins T = (-1)^m (L - mu) + 2/9 per block into seven classes and returns
/// the chi^2 (df = 6) upper-tail p-value. block_len >= 500.
LinearComplexityDetail linear_complexity_detail(BitSource& bits, std::size_t block_len,
                                                std::size_t num_blocks);
TestOutcome linear_complexity_test(BitSource& bits, std::size_t block_len, std::size_t num_blocks);

// ---------------------------------------------------------------------------
// Hamming-weight dependency

inline constexpr std::uint64_t kMiB = std::uint64_t{1} << 20;

struct HwdConfig {
  std::uint64_t byte_budget = 64 * kMiB;
  double p_stop = 1e-3;
  int lags = 8;
  std::uint64_t check_interval_bytes = 64 * kMiB;
};

struct HwdReport {
  std::uint64_t bytes_consumed = 0;
  std::vector<std::pair<std::uint64_t, PValue>> p_trajectory;
  PValue final_p;
  bool detected = false;  // final_p < p_stop
  double lag_chisq = 0.0;
  double weight_chisq = 0.0;
  std::vector<double> lag_z;
};

/// Running statistics over the Hamming weights of 64-bit words. For each
/// word, d = popcount - 32. Keeps sum(d_t * d_{t-k}) for k = 1..lags and a
/// weight histogram.
class HwdAccumulator {
 public:
  explicit HwdAccumulator(int lags);

  void add(std::span<const std::uint64_t> words);

  struct Evaluation {
    PValue p;
    PValue p_lag;
    PValue p_weight;
    double lag_chisq = 0.0;
    double weight_chisq = 0.0;
    std::vector<double> lag_z;
  };

  /// Lag part: z_k = S_k / (16 sqrt(N - k)), sum of z_k^2 ~ chi^2(lags).
  /// Weight part: chi^2 over weights <=24, 25..39, >=40 (df 16).
  /// Combined p = 1 - (1 - min(p_lag, p_weight))^2.
  Evaluation evaluate() const;

  std::uint64_t words() const { return n_; }

 private:
  int lags_;
  std::uint64_t n_ = 0;
  std::vector<std::int64_t> lag_sums_;
  std::array<std::uint64_t, 65> weights_{};
  std::vector<std::int32_t> history_;  // last `lags` deviations, oldest first
};

template <class Generator>
HwdReport hwd_test(Generator& gen, const HwdConfig& cfg) {
  if (cfg.byte_budget < kMiB) throw std::invalid_argument("hwd_test: byte budget below 1 MiB");
  if (cfg.lags < 1) throw std::invalid_argument("hwd_test: lags must be positive");
  if (cfg.check_interval_bytes < 8) throw std::invalid_argument("hwd_test: check interval too small");
  HwdAccumulator acc(cfg.lags);
  HwdReport report;
  constexpr std::size_t kChunk = 1 << 16;
  std::vector<std::uint64_t> buf(kChunk);
  const std::uint64_t budget_words = cfg.byte_budget / 8;
  const std::uint64_t check_words = cfg.check_interval_bytes / 8;
  std::uint64_t next_check = check_words;
  auto checkpoint = [&] {
    const auto ev = acc.evaluate();
    report.bytes_consumed = acc.words() * 8;
    report.p_trajectory.emplace_back(report.bytes_consumed, ev.p);
    report.final_p = ev.p;
    report.lag_chisq = ev.lag_chisq;
    report.weight_chisq = ev.weight_chisq;
    report.lag_z = ev.lag_z;
    report.detected = ev.p.value() < cfg.p_stop;
    return report.detected;
  };
  while (acc.words() < budget_words) {
    const std::uint64_t want =
        std::min<std::uint64_t>({kChunk, budget_words - acc.words(), next_check - acc.words()});
    std::span<std::uint64_t> chunk(buf.data(), static_cast<std::size_t>(want));
    gen.fill(chunk);
    acc.add(chunk);
    if (acc.words() == next_check) {
      if (checkpoint()) return report;
      next_check += check_words;
    }
  }
  if (report.p_trajectory.empty() || report.p_trajectory.back().first != acc.words() * 8) {
    checkpoint();
  }
  return report;
}

// ---------------------------------------------------------------------------
// AOX uniformity

struct UniformityResult {
  int bits = 0;
  std::vector<std::uint64_t> counts;  // counts[r] over all 2^(2n) state pairs
  double chisq = 0.0;
  std::uint64_t df = 0;        // 2^n - 1
  PValue p;                    // chisq_cdf(chisq, df)
  double critical95 = 0.0;     // 95th percentile of chi^2(df)
  std::uint64_t state_df = 0;  // 2^(2n) - 1
  PValue p_state_df;           // chisq_cdf(chisq, state_df)
};

/// chi^2 of counts against a uniform expectation (total / counts.size()).
double chisq_uniform(std::span<const std::uint64_t> counts);

/// Output histogram of the width-n AOX over every (s0, s1) pair, 2 <= n <= 20.
/// Pairs are grouped by (s0 ^ s1, s0 & s1): each disjoint (x, a) stands for
/// 2^popcount(x) pairs with the same output.
std::vector<std::uint64_t> aox_output_counts(int n);

UniformityResult aox_uniformity_chisq(int n);

// ---------------------------------------------------------------------------
// Zero escape

struct EscapeCurve {
  /// (iteration, mean proportion of set bits), iteration counted from 1.
  std::vector<std::pair<std::uint64_t, double>> samples;
};

/// Engine whose state is one-hot at `bit` in [0, 128):
///   xoroshiro: bit of (s0, s1), s0 holding bits 0..63
///   pcg64:     LCG state bit, default increment
///   philox:    counter bit, zero key
///   mt32:      bit (bit % 32) of state word 1 + bit / 32; word 0 only
///              contributes its top bit to the recurrence so it is skipped
Engine one_hot_engine(GeneratorKind kind, ShiftTriple shifts, int bit);

/// Mean over the 128 one-hot starts of the set-bit proportion of the native
/// output, averaged over the last four outputs (fewer at the start).
/// Samples iterations that are multiples of sample_stride. iterations >= 16.
EscapeCurve zero_escape(GeneratorKind kind, ShiftTriple shifts, std::uint64_t iterations,
                        std::uint64_t sample_stride);

}  // namespace aoxlab
