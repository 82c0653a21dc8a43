#include "aoxlab/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace aoxlab {

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json j;
  j["generator"] = to_string(report.generator);
  j["shifts"] = report.shifts.to_string();
  j["permutation"] = to_string(report.permutation);
  j["battery"] = report.battery;
  j["seeds"] = nlohmann::json::array();
  for (u128 s : report.seeds) j["seeds"].push_back(format_hex_u128(s));
  j["outcomes"] = nlohmann::json::array();
  for (const auto& o : report.outcomes) {
    nlohmann::json oj;
    oj["test"] = o.test;
    oj["seed"] = format_hex_u128(o.seed);
    oj["p_values"] = o.p_values;
    oj["verdict"] = to_string(o.status);
    oj["statistic"] = o.statistic;
    if (o.status == OutcomeStatus::error) oj["error"] = o.error;
    j["outcomes"].push_back(std::move(oj));
  }
  j["systematic_failures"] = report.systematic_failures;
  return j;
}

std::string to_csv(const SuiteReport& report) {
  std::ostringstream out;
  out << "generator,shifts,permutation,seed,test,verdict,statistic,p_values,systematic\n";
  for (const auto& o : report.outcomes) {
    std::string ps;
    for (std::size_t i = 0; i < o.p_values.size(); ++i) {
      if (i) ps += ';';
      ps += format_double(o.p_values[i]);
    }
    const bool systematic = std::find(report.systematic_failures.begin(),
                                      report.systematic_failures.end(),
                                      o.test) != report.systematic_failures.end();
    out << to_string(report.generator) << ',' << report.shifts.to_string() << ','
        << to_string(report.permutation) << ',' << format_hex_u128(o.seed) << ',' << o.test << ','
        << to_string(o.status) << ',' << format_double(o.statistic) << ',' << ps << ','
        << (systematic ? 1 : 0) << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const UniformityResult& r) {
  return {{"bits", r.bits},
          {"chisq", r.chisq},
          {"df", r.df},
          {"p", r.p.value()},
          {"critical95", r.critical95},
          {"state_df", r.state_df},
          {"p_state_df", r.p_state_df.value()},
          {"verdict", to_string(classify(r.p))}};
}

std::string to_csv(const UniformityResult& r) {
  std::ostringstream out;
  out << "bits,chisq,df,p,critical95,state_df,p_state_df\n"
      << r.bits << ',' << format_double(r.chisq) << ',' << r.df << ',' << format_double(r.p) << ','
      << format_double(r.critical95) << ',' << r.state_df << ',' << format_double(r.p_state_df)
      << '\n';
  return out.str();
}

nlohmann::json to_json(const HwdReport& r) {
  nlohmann::json traj = nlohmann::json::array();
  for (const auto& [bytes, p] : r.p_trajectory) traj.push_back({{"bytes", bytes}, {"p", p.value()}});
  return {{"bytes_consumed", r.bytes_consumed}, {"final_p", r.final_p.value()},
          {"detected", r.detected},             {"lag_chisq", r.lag_chisq},
          {"weight_chisq", r.weight_chisq},     {"lag_z", r.lag_z},
          {"trajectory", traj}};
}

std::string to_csv(const HwdReport& r) {
  std::ostringstream out;
  out << "bytes,p\n";
  for (const auto& [bytes, p] : r.p_trajectory) out << bytes << ',' << format_double(p) << '\n';
  return out.str();
}

nlohmann::json to_json(const EscapeCurve& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [it, prop] : c.samples) rows.push_back({{"iteration", it}, {"proportion", prop}});
  return {{"samples", rows}};
}

std::string to_csv(const EscapeCurve& c) {
  std::ostringstream out;
  out << "iteration,proportion\n";
  for (const auto& [it, prop] : c.samples) out << it << ',' << format_double(prop) << '\n';
  return out.str();
}

}  // namespace aoxlab
