#pragma once

#include <cstdint>
#include <string_view>

namespace aoxlab {

/// A probability in [0, 1]. Construction rejects NaN and out-of-range values.
class PValue {
 public:
  PValue() = default;
  explicit PValue(double v);

  double value() const { return v_; }
  operator double() const { return v_; }

 private:
  double v_ = 1.0;
};

enum class Verdict { pass, fail };

inline constexpr double kFailLow = 0.001;
inline constexpr double kFailHigh = 0.999;

/// fail iff p < 0.001 or p > 0.999; the bounds themselves pass.
constexpr Verdict classify(double p) {
  return (p < kFailLow || p > kFailHigh) ? Verdict::fail : Verdict::pass;
}

std::string_view to_string(Verdict v);

/// Regularized incomplete gamma P(a, x) and Q(a, x) = 1 - P(a, x), each
/// computed directly so that tiny tails keep their relative accuracy.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

/// P(X <= x) for X ~ chi^2(df). Throws std::invalid_argument for x < 0 or
/// df == 0. Exact incomplete gamma up to df = 2^21, Wilson-Hilferty above.
PValue chisq_cdf(double x, std::uint64_t df);
/// P(X > x), the upper tail.
PValue chisq_sf(double x, std::uint64_t df);

/// x with chisq_cdf(x, df) == q, by bisection. Used for critical values.
double chisq_quantile(double q, std::uint64_t df);

PValue normal_cdf(double z);
/// Upper tail, accurate for large z.
PValue normal_sf(double z);

/// Probability that a uniform random rows x cols matrix over F2 has the
/// given rank. Throws std::invalid_argument if rank > min(rows, cols).
double f2_rank_probability(int rows, int cols, int rank);

}  // namespace aoxlab
