#include <doctest.h>

#include <stdexcept>

#include "aoxlab/report.hpp"

using namespace aoxlab;

namespace {

SuiteReport sample_report() {
  SuiteReport r;
  r.battery = "desk-v1@1";
  r.generator = GeneratorKind::xoroshiro128plus;
  r.shifts = ShiftTriple::revised();
  r.permutation = OutputPermutation::rev32lo;
  r.seeds = {1, make_u128(1, 0)};
  for (u128 s : r.seeds) {
    TestOutcome a;
    a.test = "rank";
    a.seed = s;
    a.p_values = {1e-30};
    a.status = OutcomeStatus::fail;
    a.statistic = 123.5;
    r.outcomes.push_back(a);
    TestOutcome b;
    b.test = "lc";
    b.seed = s;
    b.status = OutcomeStatus::error;
    b.error = "insufficient data";
    r.outcomes.push_back(b);
  }
  r.systematic_failures = {"rank"};
  return r;
}

}  // namespace

TEST_CASE("suite report json") {
  const auto j = to_json(sample_report());
  CHECK(j["generator"] == "xoroshiro128plus");
  CHECK(j["shifts"] == "24-16-37");
  CHECK(j["permutation"] == "rev32lo");
  CHECK(j["seeds"] == nlohmann::json::array({"0x1", "0x10000000000000000"}));
  REQUIRE(j["outcomes"].size() == 4);
  const auto& o = j["outcomes"][0];
  CHECK(o["test"] == "rank");
  CHECK(o["seed"] == "0x1");
  CHECK(o["verdict"] == "fail");
  CHECK(o["p_values"][0].get<double>() == 1e-30);
  CHECK(!o.contains("error"));
  CHECK(j["outcomes"][1]["verdict"] == "error");
  CHECK(j["outcomes"][1]["error"] == "insufficient data");
  CHECK(j["systematic_failures"] == nlohmann::json::array({"rank"}));
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("suite report csv") {
  const auto csv = to_csv(sample_report());
  std::vector<std::string> lines;
  for (std::size_t pos = 0, next; (next = csv.find('\n', pos)) != std::string::npos; pos = next + 1) {
    lines.push_back(csv.substr(pos, next - pos));
  }
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "generator,shifts,permutation,seed,test,verdict,statistic,p_values,systematic");
  CHECK(lines[1] == "xoroshiro128plus,24-16-37,rev32lo,0x1,rank,fail,123.5,1e-30,1");
  CHECK(lines[2] == "xoroshiro128plus,24-16-37,rev32lo,0x1,lc,error,0,,0");
}

TEST_CASE("result serializers") {
  const auto u = aox_uniformity_chisq(2);
  CHECK(to_json(u)["chisq"] == 4.5);
  CHECK(to_csv(u).starts_with("bits,chisq,df,p,critical95,state_df,p_state_df\n2,4.5,3,"));

  EscapeCurve c;
  c.samples = {{1, 0.25}, {2, 0.5}};
  CHECK(to_csv(c) == "iteration,proportion\n1,0.25\n2,0.5\n");
  CHECK(to_json(c)["samples"][1]["proportion"] == 0.5);

  HwdReport h;
  h.bytes_consumed = 64;
  h.p_trajectory = {{32, PValue(0.5)}, {64, PValue(0.25)}};
  h.final_p = PValue(0.25);
  CHECK(to_csv(h) == "bytes,p\n32,0.5\n64,0.25\n");
  CHECK(to_json(h)["final_p"] == 0.25);

  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-300) == "1e-300");
}
