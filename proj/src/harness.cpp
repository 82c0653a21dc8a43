#include "aoxlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace aoxlab {

SeedPlan make_seed_plan(int n, std::size_t count) {
  if (n < 1 || n > 128) throw std::invalid_argument("make_seed_plan: n must be in [1, 128]");
  if (count < 1) throw std::invalid_argument("make_seed_plan: count must be positive");
  const u128 c = count;
  u128 step;
  if (n == 128) {
    // floor(2^128 / c) from floor((2^128 - 1) / c): bump when c divides 2^128.
    step = kU128Max / c + (kU128Max % c == c - 1 ? 1 : 0);
  } else {
    const u128 space = static_cast<u128>(1) << n;
    if (c > space) throw std::invalid_argument("make_seed_plan: count exceeds 2^n seeds");
    step = space / c;
  }
  SeedPlan plan;
  plan.seed_bits = n;
  plan.count = count;
  plan.seeds.reserve(count);
  for (std::size_t i = 0; i < count; ++i) plan.seeds.push_back(1 + static_cast<u128>(i) * step);
  return plan;
}

// --- battery config -------------------------------------------------------------

std::string_view to_string(TestKind kind) {
  switch (kind) {
    case TestKind::binary_rank:
      return "binary_rank";
    case TestKind::linear_complexity:
      return "linear_complexity";
    case TestKind::hwd:
      return "hwd";
    case TestKind::custom:
      return "custom";
  }
  return "?";
}

TestKind parse_test_kind(std::string_view name) {
  if (name == "binary_rank") return TestKind::binary_rank;
  if (name == "linear_complexity") return TestKind::linear_complexity;
  if (name == "hwd") return TestKind::hwd;
  throw std::invalid_argument("unknown test kind '" + std::string(name) + "'");
}

namespace {

BitExtraction parse_extraction(std::string_view name) {
  if (name == "msb") return BitExtraction::msb;
  if (name == "bit0") return BitExtraction::bit0;
  throw std::invalid_argument("unknown bit extraction '" + std::string(name) + "'");
}

constexpr std::string_view kDeskV1 = R"({
  "name": "desk-v1",
  "version": "1",
  "seed_bits": 128,
  "seed_count": 100,
  "tests": [
    {
      "id": "rank256_msb1",
      "kind": "binary_rank",
      "extraction": "msb",
      "bits_per_word": 1,
      "matrix_size": 256,
      "num_matrices": 40
    },
    {
      "id": "lincomp5000_msb1",
      "kind": "linear_complexity",
      "extraction": "msb",
      "bits_per_word": 1,
      "block_len": 5000,
      "num_blocks": 200
    }
  ]
}
)";

}  // namespace

std::string_view builtin_battery_json() { return kDeskV1; }

Battery parse_battery(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("battery: ") + e.what());
  }
  try {
    Battery b;
    b.name = j.at("name").get<std::string>();
    b.version = j.at("version").get<std::string>();
    b.seed_bits = j.value("seed_bits", 128);
    b.seed_count = j.value("seed_count", std::size_t{100});
    for (const auto& t : j.at("tests")) {
      TestConfig cfg;
      cfg.id = t.at("id").get<std::string>();
      cfg.kind = parse_test_kind(t.at("kind").get<std::string>());
      cfg.extraction = parse_extraction(t.value("extraction", std::string("msb")));
      cfg.bits_per_word = t.value("bits_per_word", cfg.bits_per_word);
      cfg.matrix_size = t.value("matrix_size", cfg.matrix_size);
      cfg.num_matrices = t.value("num_matrices", cfg.num_matrices);
      cfg.block_len = t.value("block_len", cfg.block_len);
      cfg.num_blocks = t.value("num_blocks", cfg.num_blocks);
      cfg.hwd.byte_budget = t.value("byte_budget", cfg.hwd.byte_budget);
      cfg.hwd.p_stop = t.value("p_stop", cfg.hwd.p_stop);
      cfg.hwd.lags = t.value("lags", cfg.hwd.lags);
      cfg.hwd.check_interval_bytes = t.value("check_interval_bytes", cfg.hwd.check_interval_bytes);
      b.tests.push_back(std::move(cfg));
    }
    if (b.tests.empty()) throw std::invalid_argument("battery: no tests");
    return b;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("battery: ") + e.what());
  }
}

Battery load_battery(std::string_view name) {
  const std::filesystem::path path =
      std::filesystem::path(AOXLAB_BATTERY_DIR) / (std::string(name) + ".json");
  if (std::ifstream in(path); in) {
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_battery(ss.str());
  }
  if (name == "desk-v1") return parse_battery(kDeskV1);
  throw std::invalid_argument("unknown battery '" + std::string(name) + "'");
}

// --- suite runner -------------------------------------------------------------------

std::vector<std::string> find_systematic_failures(std::span<const TestOutcome> outcomes,
                                                  std::size_t seed_count) {
  std::vector<std::string> order;
  std::vector<std::size_t> fails;
  std::vector<bool> spoiled;
  for (const auto& o : outcomes) {
    auto it = std::find(order.begin(), order.end(), o.test);
    const auto idx = static_cast<std::size_t>(it - order.begin());
    if (it == order.end()) {
      order.push_back(o.test);
      fails.push_back(0);
      spoiled.push_back(false);
    }
    if (o.status == OutcomeStatus::fail) {
      ++fails[idx];
    } else {
      spoiled[idx] = true;
    }
  }
  std::vector<std::string> out;
  if (seed_count == 0) return out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!spoiled[i] && fails[i] >= seed_count) out.push_back(order[i]);
  }
  return out;
}

namespace {

// Two permuted 32-bit words per 64-bit word, first word in the low half.
class PackedWords {
 public:
  PackedWords(Engine& e, OutputPermutation perm) : words_(e, perm) {}
  std::uint64_t next() {
    const std::uint64_t lo = words_.next();
    return lo | (static_cast<std::uint64_t>(words_.next()) << 32);
  }
  void fill(std::span<std::uint64_t> out) {
    for (auto& w : out) w = next();
  }

 private:
  PermutedStream<Engine> words_;
};

TestOutcome run_bit_test(const TestConfig& cfg, BitSource& src) {
  if (cfg.kind == TestKind::binary_rank) return binary_rank_test(src, cfg.matrix_size, cfg.num_matrices);
  return linear_complexity_test(src, cfg.block_len, cfg.num_blocks);
}

}  // namespace

TestOutcome run_test(const TestConfig& cfg, GeneratorKind kind, ShiftTriple shifts,
                     OutputPermutation perm, u128 seed) {
  TestOutcome out;
  try {
    Engine engine = seed_engine(kind, seed, shifts);
    switch (cfg.kind) {
      case TestKind::binary_rank:
      case TestKind::linear_complexity:
        if (cfg.extraction == BitExtraction::bit0) {
          Bit0Source<Engine> src(engine);
          out = run_bit_test(cfg, src);
        } else {
          PermutedStream<Engine> words(engine, perm);
          TopBitsSource<PermutedStream<Engine>> src(words, cfg.bits_per_word);
          out = run_bit_test(cfg, src);
        }
        break;
      case TestKind::hwd: {
        PackedWords words(engine, perm);
        const auto r = hwd_test(words, cfg.hwd);
        out.test = "hwd";
        out.params = {{"byte_budget", static_cast<double>(cfg.hwd.byte_budget)},
                      {"bytes_consumed", static_cast<double>(r.bytes_consumed)}};
        out.statistic = r.lag_chisq;
        out.p_values = {r.final_p.value()};
        out.status = r.detected ? OutcomeStatus::fail : OutcomeStatus::pass;
        break;
      }
      case TestKind::custom:
        if (!cfg.custom) throw std::invalid_argument("custom test without a body");
        out = cfg.custom(engine, perm);
        break;
    }
  } catch (const std::exception& e) {
    out = TestOutcome{};
    out.status = OutcomeStatus::error;
    out.error = e.what();
  }
  out.test = cfg.id;
  out.seed = seed;
  return out;
}

SuiteReport run_suite(GeneratorKind kind, ShiftTriple shifts, OutputPermutation perm,
                      const SeedPlan& plan, std::span<const TestConfig> tests, unsigned threads) {
  const std::size_t n_seeds = plan.seeds.size();
  const std::size_t n_tests = tests.size();
  std::vector<TestOutcome> grid(n_seeds * n_tests);
  std::atomic<std::size_t> next_job{0};
  auto worker = [&] {
    for (std::size_t job; (job = next_job.fetch_add(1)) < grid.size();) {
      const std::size_t s = job / n_tests;
      const std::size_t t = job % n_tests;
      grid[job] = run_test(tests[t], kind, shifts, perm, plan.seeds[s]);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, grid.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  SuiteReport report;
  report.generator = kind;
  report.shifts = shifts;
  report.permutation = perm;
  report.seeds = plan.seeds;
  report.outcomes = std::move(grid);
  report.systematic_failures = find_systematic_failures(report.outcomes, n_seeds);
  return report;
}

// --- parallel streams ---------------------------------------------------------------

Interleaved::Interleaved(std::vector<Engine> engines, int factor)
    : engines_(std::move(engines)), factor_(factor) {
  if (engines_.size() < 2) throw std::invalid_argument("interleave: need at least 2 engines");
  if (factor < 1) throw std::invalid_argument("interleave: factor must be >= 1");
}

std::uint64_t Interleaved::next() {
  if (taken_ == factor_) {
    taken_ = 0;
    if (++current_ == engines_.size()) current_ = 0;
  }
  ++taken_;
  return engines_[current_].next();
}

void Interleaved::fill(std::span<std::uint64_t> out) {
  for (auto& w : out) w = next();
}

double overlap_probability(u128 n_generators, u128 seq_len, u128 period) {
  if (period == 0) throw std::invalid_argument("overlap_probability: period must be positive");
  if (seq_len > period) throw std::invalid_argument("overlap_probability: seq_len exceeds period");
  if (n_generators == 0 || seq_len == 0) return 0.0;
  const long double n = static_cast<long double>(n_generators);
  const long double p = n * n * static_cast<long double>(seq_len) / static_cast<long double>(period);
  return static_cast<double>(std::min<long double>(1.0L, p));
}

u128 parse_count_u128(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) return parse_hex_u128(text);
  if (text.empty() || text.size() > 39) throw std::invalid_argument("expected a decimal count");
  u128 value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("invalid digit in '" + std::string(text) + "'");
    const u128 digit = static_cast<u128>(ch - '0');
    if (value > (kU128Max - digit) / 10) throw std::invalid_argument("count exceeds 128 bits");
    value = value * 10 + digit;
  }
  return value;
}

Engine128State partition_sequence(u128 base_seed, std::uint64_t index, ShiftTriple shifts) {
  const Engine128State base{lo64(base_seed), hi64(base_seed)};
  if (base.is_zero()) throw std::invalid_argument("partition_sequence: zero base state");
  if (index == 0) return base;
  return apply_matrix(matrix_power(xoroshiro_jump_matrix(shifts, 64), index), base);
}

NarrowXoroshiro::State partition_sequence(const NarrowXoroshiro& engine,
                                          NarrowXoroshiro::State base, std::uint64_t index) {
  if (base.s0 == 0 && base.s1 == 0) throw std::invalid_argument("partition_sequence: zero base state");
  const BitMatrix jump = matrix_power(engine.transition_matrix(), std::uint64_t{1} << engine.width());
  return engine.apply(matrix_power(jump, index), base);
}

}  // namespace aoxlab
