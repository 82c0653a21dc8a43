#include "aoxlab/stats_math.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace aoxlab {

PValue::PValue(double v) : v_(v) {
  if (std::isnan(v) || v < 0.0 || v > 1.0) {
    throw std::invalid_argument("p-value out of [0, 1]");
  }
}

std::string_view to_string(Verdict v) { return v == Verdict::pass ? "pass" : "fail"; }

namespace {

constexpr int kMaxIterations = 100'000'000;
constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;

// log(x^a e^-x / Gamma(a))
double gamma_prefactor_log(double a, double x) { return a * std::log(x) - x - std::lgamma(a); }

// Series for P(a, x); valid for x < a + 1.
double gamma_series(double a, double x) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  for (int n = 0; n < kMaxIterations; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kEps) break;
  }
  return sum * std::exp(gamma_prefactor_log(a, x));
}

// Modified Lentz continued fraction for Q(a, x); valid for x >= a + 1.
double gamma_continued_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return std::exp(gamma_prefactor_log(a, x)) * h;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

constexpr std::uint64_t kWilsonHilfertyAbove = std::uint64_t{1} << 21;

// Wilson-Hilferty: (X/k)^(1/3) is approximately normal.
double wilson_hilferty_z(double x, double k) {
  const double v = 2.0 / (9.0 * k);
  return (std::cbrt(x / k) - (1.0 - v)) / std::sqrt(v);
}

}  // namespace

double gamma_p(double a, double x) {
  if (x <= 0.0) return 0.0;
  if (x < a + 1.0) return clamp01(gamma_series(a, x));
  return clamp01(1.0 - gamma_continued_fraction(a, x));
}

double gamma_q(double a, double x) {
  if (x <= 0.0) return 1.0;
  if (x < a + 1.0) return clamp01(1.0 - gamma_series(a, x));
  return clamp01(gamma_continued_fraction(a, x));
}

PValue chisq_cdf(double x, std::uint64_t df) {
  if (df == 0) throw std::invalid_argument("chisq_cdf: df must be positive");
  if (!(x >= 0.0)) throw std::invalid_argument("chisq_cdf: x must be non-negative");
  if (df > kWilsonHilfertyAbove) return normal_cdf(wilson_hilferty_z(x, static_cast<double>(df)));
  return PValue(gamma_p(0.5 * static_cast<double>(df), 0.5 * x));
}

PValue chisq_sf(double x, std::uint64_t df) {
  if (df == 0) throw std::invalid_argument("chisq_sf: df must be positive");
  if (!(x >= 0.0)) throw std::invalid_argument("chisq_sf: x must be non-negative");
  if (df > kWilsonHilfertyAbove) return normal_sf(wilson_hilferty_z(x, static_cast<double>(df)));
  return PValue(gamma_q(0.5 * static_cast<double>(df), 0.5 * x));
}

double chisq_quantile(double q, std::uint64_t df) {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("chisq_quantile: q must be in (0, 1)");
  const double k = static_cast<double>(df);
  double lo = 0.0;
  double hi = k + 20.0 * std::sqrt(2.0 * k) + 100.0;
  while (chisq_cdf(hi, df) < q) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-9 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    (chisq_cdf(mid, df) < q ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

PValue normal_cdf(double z) {
  if (std::isnan(z)) throw std::invalid_argument("normal_cdf: NaN");
  return PValue(clamp01(0.5 * std::erfc(-z / std::sqrt(2.0))));
}

PValue normal_sf(double z) {
  if (std::isnan(z)) throw std::invalid_argument("normal_sf: NaN");
  return PValue(clamp01(0.5 * std::erfc(z / std::sqrt(2.0))));
}

double f2_rank_probability(int rows, int cols, int rank) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("f2_rank_probability: negative shape");
  if (rank < 0 || rank > std::min(rows, cols)) {
    throw std::invalid_argument("f2_rank_probability: rank out of range");
  }
  // P = 2^{-(m-r)(n-r)} prod_{i<r} (1-2^{i-m})(1-2^{i-n}) / (1-2^{i-r})
  const double m = rows, n = cols, r = rank;
  double log_p = -(m - r) * (n - r) * std::log(2.0);
  for (int i = 0; i < rank; ++i) {
    log_p += std::log1p(-std::ldexp(1.0, i - rows));
    log_p += std::log1p(-std::ldexp(1.0, i - cols));
    log_p -= std::log1p(-std::ldexp(1.0, i - rank));
  }
  return std::exp(log_p);
}

}  // namespace aoxlab
