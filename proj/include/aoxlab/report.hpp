#pragma once

#include <string>

#include <json.hpp>

#include "aoxlab/harness.hpp"
#include "aoxlab/quality_tests.hpp"

namespace aoxlab {

/// {generator, shifts, permutation, battery, seeds, outcomes, systematic_failures}.
/// Seeds are 0x-prefixed hex strings; each outcome carries test, seed,
/// p_values, verdict (pass|fail|error), statistic and, for errors, error.
nlohmann::json to_json(const SuiteReport& report);

/// One row per outcome: generator,shifts,permutation,seed,test,verdict,
/// statistic,p_values,systematic. Multiple p-values are joined with ';'.
std::string to_csv(const SuiteReport& report);

nlohmann::json to_json(const UniformityResult& r);
/// Header row then one row: bits,chisq,df,p,critical95,state_df,p_state_df.
std::string to_csv(const UniformityResult& r);

nlohmann::json to_json(const HwdReport& r);
/// bytes,p rows of the trajectory.
std::string to_csv(const HwdReport& r);

nlohmann::json to_json(const EscapeCurve& c);
/// iteration,proportion rows.
std::string to_csv(const EscapeCurve& c);

/// Shortest decimal form that round-trips.
std::string format_double(double v);

}  // namespace aoxlab
