// aoxlab: stream emission and desk-scale quality tests.
//
// Exit codes: 0 pass, 1 systematic failure (or HWD detection), 2 usage error.

#include <cerrno>
#include <csignal>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aoxlab/engines.hpp"
#include "aoxlab/harness.hpp"
#include "aoxlab/quality_tests.hpp"
#include "aoxlab/report.hpp"
#include "aoxlab/scramblers.hpp"

namespace {

using namespace aoxlab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto usage_checked(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

struct Common {
  std::string engine = "xoroshiro128aox";
  std::string shifts = "55,14,36";
  std::string seed = "1";
  std::string perm = "std32";
  std::string format = "json";
  std::string output;
};

struct Resolved {
  GeneratorKind kind;
  ShiftTriple shifts;
  u128 seed;
  OutputPermutation perm;
};

Resolved resolve(const Common& c) {
  return usage_checked([&] {
    return Resolved{parse_generator(c.engine), ShiftTriple::parse(c.shifts), parse_hex_u128(c.seed),
                    parse_permutation(c.perm)};
  });
}

// "1048576", "64MiB", "8GiB", "512K", "4GB". Binary unless spelled KB/MB/GB/TB.
std::uint64_t parse_bytes(std::string text) {
  static const std::pair<std::string_view, std::uint64_t> kSuffixes[] = {
      {"KiB", 1ull << 10}, {"MiB", 1ull << 20}, {"GiB", 1ull << 30}, {"TiB", 1ull << 40},
      {"KB", 1000ull},     {"MB", 1000000ull},  {"GB", 1000000000ull}, {"TB", 1000000000000ull},
      {"K", 1ull << 10},   {"M", 1ull << 20},   {"G", 1ull << 30},   {"T", 1ull << 40}};
  std::uint64_t mult = 1;
  for (auto [suffix, m] : kSuffixes) {
    if (text.size() > suffix.size() && text.ends_with(suffix)) {
      text.resize(text.size() - suffix.size());
      mult = m;
      break;
    }
  }
  const u128 v = usage_checked([&] { return parse_count_u128(text); });
  const u128 total = v * mult;
  if (v != 0 && (total / mult != v || total > std::numeric_limits<std::uint64_t>::max())) {
    throw UsageError("byte count too large: " + text);
  }
  return static_cast<std::uint64_t>(total);
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty() || c.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + c.output);
  out << text;
}

std::string render(const Common& c, const nlohmann::json& j, const std::string& csv) {
  return c.format == "csv" ? csv : j.dump(2) + "\n";
}

void add_engine_options(CLI::App* sub, Common& c, bool with_seed = true, bool with_perm = true) {
  sub->add_option("--engine,--generator", c.engine,
                  "xoroshiro128aox | xoroshiro128plus | pcg64 | philox4x32-10 | mt32")
      ->capture_default_str();
  sub->add_option("--shifts", c.shifts, "xoroshiro shift triple, 55,14,36 or 24,16,37")
      ->capture_default_str();
  if (with_seed) sub->add_option("--seed", c.seed, "seed, up to 32 hex digits")->capture_default_str();
  if (with_perm) {
    sub->add_option("--perm", c.perm, "std32 | rev32 | std32lo | rev32lo | std32hi | rev32hi")
        ->capture_default_str();
  }
}

void add_output_options(CLI::App* sub, Common& c, const std::string& default_format) {
  c.format = default_format;
  sub->add_option("--format", c.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("-o,--output", c.output, "output path (default stdout)");
}

// --- gen ---------------------------------------------------------------------------

int cmd_gen(const Common& c, std::optional<std::uint64_t> bytes) {
  const Resolved r = resolve(c);
  Engine engine = seed_engine(r.kind, r.seed, r.shifts);
  std::signal(SIGPIPE, SIG_IGN);
  std::vector<unsigned char> buf(1 << 16);
  std::uint64_t remaining = bytes.value_or(0);
  const bool unlimited = !bytes.has_value();
  std::uint32_t words[2];
  while (unlimited || remaining > 0) {
    std::size_t len = 0;
    while (len + 8 <= buf.size()) {
      const int n = permute_output(engine.next(), r.perm, words);
      for (int i = 0; i < n; ++i) {
        for (int b = 0; b < 4; ++b) buf[len++] = static_cast<unsigned char>(words[i] >> (8 * b));
      }
    }
    if (!unlimited) len = static_cast<std::size_t>(std::min<std::uint64_t>(len, remaining));
    if (std::fwrite(buf.data(), 1, len, stdout) != len || std::fflush(stdout) != 0) {
      if (errno == EPIPE) return kExitPass;
      std::cerr << "aoxlab gen: write failed: " << std::strerror(errno) << "\n";
      return kExitUsage;
    }
    remaining -= unlimited ? 0 : len;
  }
  std::fflush(stdout);
  return kExitPass;
}

// --- test --------------------------------------------------------------------------

int cmd_test(const Common& c, const std::string& battery_name, std::optional<std::size_t> seeds,
             unsigned threads) {
  const Resolved r = resolve(c);
  const Battery battery = usage_checked([&] { return load_battery(battery_name); });
  const SeedPlan plan =
      usage_checked([&] { return make_seed_plan(battery.seed_bits, seeds.value_or(battery.seed_count)); });
  SuiteReport report = run_suite(r.kind, r.shifts, r.perm, plan, battery.tests, threads);
  report.battery = battery.name + "@" + battery.version;
  emit(c, render(c, to_json(report), to_csv(report)));
  for (const auto& id : report.systematic_failures) std::cerr << "systematic failure: " << id << "\n";
  return report.systematic_failures.empty() ? kExitPass : kExitFail;
}

// --- uniformity --------------------------------------------------------------------

int cmd_uniformity(const Common& c, const std::vector<int>& bits, bool counts) {
  nlohmann::json all = nlohmann::json::array();
  std::string csv;
  for (int n : bits) {
    const auto res = usage_checked([&] { return aox_uniformity_chisq(n); });
    auto j = to_json(res);
    if (counts) j["counts"] = res.counts;
    all.push_back(std::move(j));
    const std::string rows = to_csv(res);
    csv += csv.empty() ? rows : rows.substr(rows.find('\n') + 1);
  }
  emit(c, render(c, all, csv));
  return kExitPass;
}

// --- escape ------------------------------------------------------------------------

int cmd_escape(const Common& c, std::uint64_t iterations, std::uint64_t stride) {
  const Resolved r = resolve(c);
  const auto curve = usage_checked([&] { return zero_escape(r.kind, r.shifts, iterations, stride); });
  emit(c, render(c, to_json(curve), to_csv(curve)));
  return kExitPass;
}

// --- overlap -----------------------------------------------------------------------

int cmd_overlap(const Common& c, const std::string& gens, const std::string& len,
                const std::string& period) {
  const double p = usage_checked([&] {
    return overlap_probability(parse_count_u128(gens), parse_count_u128(len), parse_count_u128(period));
  });
  nlohmann::json j{{"generators", gens}, {"length", len}, {"period", period}, {"probability", p}};
  emit(c, render(c, j, "generators,length,period,probability\n" + gens + "," + len + "," + period +
                           "," + format_double(p) + "\n"));
  return kExitPass;
}

// --- hwd ---------------------------------------------------------------------------

int cmd_hwd(const Common& c, const std::string& budget, const std::string& interval, double p_stop,
            int lags, int interleave, int factor) {
  const Resolved r = resolve(c);
  HwdConfig cfg;
  cfg.byte_budget = parse_bytes(budget);
  cfg.check_interval_bytes = parse_bytes(interval);
  cfg.p_stop = p_stop;
  cfg.lags = lags;
  HwdReport rep;
  if (interleave > 1) {
    if (!is_xoroshiro(r.kind)) throw UsageError("--interleave needs a xoroshiro engine");
    std::vector<Engine> engines;
    const auto out = r.kind == GeneratorKind::xoroshiro128aox ? OutputFunction::aox : OutputFunction::plus;
    for (int i = 0; i < interleave; ++i) {
      const auto st = usage_checked(
          [&] { return partition_sequence(r.seed, static_cast<std::uint64_t>(i), r.shifts); });
      engines.emplace_back(r.kind, Xoroshiro128(st, r.shifts, out));
    }
    Interleaved gen = usage_checked([&] { return Interleaved(std::move(engines), factor); });
    rep = usage_checked([&] { return hwd_test(gen, cfg); });
  } else {
    Engine gen = seed_engine(r.kind, r.seed, r.shifts);
    rep = usage_checked([&] { return hwd_test(gen, cfg); });
  }
  auto j = to_json(rep);
  j["generator"] = to_string(r.kind);
  j["shifts"] = r.shifts.to_string();
  j["seed"] = format_hex_u128(r.seed);
  emit(c, render(c, j, to_csv(rep)));
  return rep.detected ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"xoroshiro128aox generator lab"};
  app.require_subcommand(1);

  Common gen_opts, test_opts, uni_opts, esc_opts, ov_opts, hwd_opts;

  auto* gen = app.add_subcommand("gen", "write raw little-endian output to stdout");
  add_engine_options(gen, gen_opts);
  std::optional<std::uint64_t> gen_bytes;
  gen->add_option("--bytes", gen_bytes, "byte count (default: unlimited)");

  auto* test = app.add_subcommand("test", "run a battery over equidistant seeds");
  add_engine_options(test, test_opts, false);
  add_output_options(test, test_opts, "json");
  std::string battery = "desk-v1";
  std::optional<std::size_t> seed_count;
  unsigned threads = 0;
  test->add_option("--battery", battery, "battery name")->capture_default_str();
  test->add_option("--seeds", seed_count, "number of seeds (default from battery)");
  test->add_option("--threads", threads, "worker threads, 0 = all cores")->capture_default_str();

  auto* uni = app.add_subcommand("uniformity", "chi^2 of the reduced-width AOX output");
  add_output_options(uni, uni_opts, "json");
  std::vector<int> bits{2};
  bool with_counts = false;
  uni->add_option("--bits", bits, "output widths in [2, 20]")->capture_default_str();
  uni->add_flag("--counts", with_counts, "include the per-value counts (json)");

  auto* esc = app.add_subcommand("escape", "mean set-bit proportion from one-hot states");
  add_engine_options(esc, esc_opts, false, false);
  add_output_options(esc, esc_opts, "csv");
  std::uint64_t iterations = 100, stride = 1;
  esc->add_option("--iterations", iterations)->capture_default_str();
  esc->add_option("--stride", stride)->capture_default_str();

  auto* ov = app.add_subcommand("overlap", "bound on overlap between parallel sequences");
  add_output_options(ov, ov_opts, "json");
  std::string gens, length, period = "340282366920938463463374607431768211455";
  ov->add_option("--generators", gens, "number of generators")->required();
  ov->add_option("--length", length, "outputs drawn per generator")->required();
  ov->add_option("--period", period, "generator period")->capture_default_str();

  auto* hwd = app.add_subcommand("hwd", "Hamming-weight dependency test");
  add_engine_options(hwd, hwd_opts, true, false);
  add_output_options(hwd, hwd_opts, "json");
  std::string budget = "64MiB", interval = "64MiB";
  double p_stop = 1e-3;
  int lags = 8, interleave = 1, factor = 1;
  hwd->add_option("--budget", budget, "byte budget, e.g. 8GiB")->capture_default_str();
  hwd->add_option("--check-interval", interval, "bytes between evaluations")->capture_default_str();
  hwd->add_option("--p-stop", p_stop)->capture_default_str();
  hwd->add_option("--lags", lags)->capture_default_str();
  hwd->add_option("--interleave", interleave, "N engines at 2^64-step offsets")->capture_default_str();
  hwd->add_option("--factor", factor, "consecutive outputs per engine")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_opts, gen_bytes);
    if (*test) return cmd_test(test_opts, battery, seed_count, threads);
    if (*uni) return cmd_uniformity(uni_opts, bits, with_counts);
    if (*esc) return cmd_escape(esc_opts, iterations, stride);
    if (*ov) return cmd_overlap(ov_opts, gens, length, period);
    if (*hwd) return cmd_hwd(hwd_opts, budget, interval, p_stop, lags, interleave, factor);
  } catch (const UsageError& e) {
    std::cerr << "aoxlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "aoxlab: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
