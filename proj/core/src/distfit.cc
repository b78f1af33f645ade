#include "tenhundred/distfit.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "tenhundred/error.h"

namespace tenhundred {
namespace {

// B_2 .. B_16.
constexpr double kBernoulli[] = {1.0 / 6,    -1.0 / 30,   1.0 / 42,
                                 -1.0 / 30,  5.0 / 66,    -691.0 / 2730,
                                 7.0 / 6,    -3617.0 / 510};

constexpr double kAlphaLow = 1.0 + 1e-6;
constexpr double kAlphaHigh = 50.0;

// Negative log-likelihood per tail of the discrete power law.
double NegLogLikelihood(double alpha, double n, double sum_log,
                        std::uint64_t xmin) {
  return n * std::log(HurwitzZeta(alpha, static_cast<double>(xmin))) +
         alpha * sum_log;
}

struct TailStats {
  std::size_t begin;  // index of the first tail value in the sorted sample
  double sum_log;
};

double MaximizeAlpha(double n, double sum_log, std::uint64_t xmin) {
  // Closed-form approximation, then a bracketed 1-D refinement. The
  // likelihood is concave in alpha, so Brent converges to the global optimum.
  const double approx =
      1.0 + n / (sum_log - n * std::log(static_cast<double>(xmin) - 0.5));
  double lo = kAlphaLow, hi = kAlphaHigh;
  if (std::isfinite(approx) && approx > kAlphaLow) {
    lo = std::max(kAlphaLow, approx - 1.0);
    hi = std::min(kAlphaHigh, approx + 1.0);
  }
  auto f = [&](double a) { return NegLogLikelihood(a, n, sum_log, xmin); };
  auto [alpha, value] = boost::math::tools::brent_find_minima(f, lo, hi, 48);
  // Widen when the optimum sits on a narrowed bracket edge.
  if ((alpha - lo < 1e-6 && lo > kAlphaLow) ||
      (hi - alpha < 1e-6 && hi < kAlphaHigh)) {
    std::tie(alpha, value) =
        boost::math::tools::brent_find_minima(f, kAlphaLow, kAlphaHigh, 48);
  }
  return alpha;
}

double KsOverTail(std::span<const std::uint64_t> sorted, std::size_t begin,
                  double alpha, std::uint64_t xmin) {
  const double n = static_cast<double>(sorted.size() - begin);
  const double norm = HurwitzZeta(alpha, static_cast<double>(xmin));
  auto model_cdf = [&](std::uint64_t x) {
    return 1.0 - HurwitzZeta(alpha, static_cast<double>(x) + 1.0) / norm;
  };
  double ks = 0;
  std::size_t i = begin;
  while (i < sorted.size()) {
    const std::uint64_t v = sorted[i];
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == v) ++j;
    const double empirical = static_cast<double>(j - begin) / n;
    ks = std::max(ks, std::abs(empirical - model_cdf(v)));
    if (j < sorted.size() && sorted[j] > v + 1) {
      ks = std::max(ks, std::abs(empirical - model_cdf(sorted[j] - 1)));
    }
    i = j;
  }
  return ks;
}

PowerLawFit FitWithStats(const CountSample& sample, std::uint64_t xmin,
                         const TailStats& stats) {
  std::span<const std::uint64_t> values = sample.values();
  const std::size_t ntail = values.size() - stats.begin;
  if (ntail < 2 || values[stats.begin] == values.back()) {
    throw Error(ErrorCode::kDegenerateSample,
                "tail at xmin=" + std::to_string(xmin) +
                    " has fewer than two distinct values");
  }
  PowerLawFit fit;
  fit.xmin = xmin;
  fit.ntail = ntail;
  fit.alpha =
      MaximizeAlpha(static_cast<double>(ntail), stats.sum_log, xmin);
  fit.ks = KsOverTail(values, stats.begin, fit.alpha, xmin);
  fit.small_tail = ntail < kMinTailWarning;
  return fit;
}

}  // namespace

const char* PreferenceName(Preference p) {
  switch (p) {
    case Preference::kPowerLaw: return "power-law";
    case Preference::kExponential: return "exponential";
    case Preference::kUndecided: return "undecided";
  }
  return "undecided";
}

CountSample::CountSample(std::vector<std::uint64_t> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorCode::kDomain, "empty count sample");
  std::sort(values_.begin(), values_.end());
  if (values_.front() == 0) {
    throw Error(ErrorCode::kDomain, "counts must be >= 1");
  }
}

std::vector<std::uint64_t> CountSample::distinct() const {
  std::vector<std::uint64_t> out(values_.begin(), values_.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::span<const std::uint64_t> CountSample::tail(std::uint64_t xmin) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), xmin);
  return {it, values_.end()};
}

double HurwitzZeta(double s, double q) {
  if (!(s > 1.0) || !(q > 0.0)) {
    throw Error(ErrorCode::kDomain, "Hurwitz zeta needs s > 1 and q > 0");
  }
  constexpr int kDirect = 12;
  double sum = 0;
  for (int k = 0; k < kDirect; ++k) sum += std::pow(q + k, -s);
  const double a = q + kDirect;
  sum += std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
  // Euler-Maclaurin corrections: B_2j / (2j)! * s (s+1) ... (s+2j-2) *
  // a^(-s-2j+1).
  double rising = s;            // s (s+1) ... (s+2j-2)
  double factorial = 2.0;       // (2j)!
  double power = std::pow(a, -s - 1.0);
  for (int j = 1; j <= 8; ++j) {
    sum += kBernoulli[j - 1] / factorial * rising * power;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    factorial *= (2 * j + 1) * (2 * j + 2);
    power /= a * a;
  }
  return sum;
}

double PowerLawLogPmf(std::uint64_t x, double alpha, std::uint64_t xmin) {
  return -alpha * std::log(static_cast<double>(x)) -
         std::log(HurwitzZeta(alpha, static_cast<double>(xmin)));
}

double ExponentialLogPmf(std::uint64_t x, double rate, std::uint64_t xmin) {
  return std::log1p(-std::exp(-rate)) -
         rate * static_cast<double>(x - xmin);
}

PowerLawFit FitPowerLawAt(const CountSample& sample, std::uint64_t xmin) {
  if (xmin == 0) throw Error(ErrorCode::kDomain, "xmin must be >= 1");
  std::span<const std::uint64_t> values = sample.values();
  TailStats stats{
      static_cast<std::size_t>(sample.tail(xmin).data() - values.data()), 0};
  for (std::size_t i = stats.begin; i < values.size(); ++i) {
    stats.sum_log += std::log(static_cast<double>(values[i]));
  }
  return FitWithStats(sample, xmin, stats);
}

double PowerLawKs(const CountSample& sample, double alpha, std::uint64_t xmin) {
  std::span<const std::uint64_t> values = sample.values();
  std::size_t begin =
      static_cast<std::size_t>(sample.tail(xmin).data() - values.data());
  if (begin == values.size()) {
    throw Error(ErrorCode::kDomain, "no sample values at or above xmin");
  }
  return KsOverTail(values, begin, alpha, xmin);
}

PowerLawFit FitPowerLaw(const CountSample& sample) {
  std::span<const std::uint64_t> values = sample.values();
  if (values.front() == values.back()) {
    throw Error(ErrorCode::kDegenerateSample,
                "all counts are equal; no power law can be fitted");
  }
  // Suffix sums of log(x) so each candidate costs O(1) to set up.
  std::vector<double> suffix_log(values.size() + 1, 0.0);
  for (std::size_t i = values.size(); i-- > 0;) {
    suffix_log[i] = suffix_log[i + 1] + std::log(static_cast<double>(values[i]));
  }

  PowerLawFit best;
  bool have_best = false;
  std::size_t i = 0;
  while (i < values.size()) {
    const std::uint64_t xmin = values[i];
    if (xmin == values.back()) break;  // single-valued tail
    PowerLawFit fit = FitWithStats(sample, xmin, {i, suffix_log[i]});
    if (!have_best || fit.ks < best.ks) {
      best = fit;
      have_best = true;
    }
    while (i < values.size() && values[i] == xmin) ++i;
  }
  return best;
}

ExponentialFit FitExponential(const CountSample& sample, std::uint64_t xmin) {
  std::span<const std::uint64_t> tail = sample.tail(xmin);
  if (tail.size() < 2) {
    throw Error(ErrorCode::kDegenerateSample,
                "exponential fit needs at least two tail points");
  }
  double excess = 0;
  for (std::uint64_t x : tail) excess += static_cast<double>(x - xmin);
  if (excess == 0) {
    throw Error(ErrorCode::kDegenerateSample,
                "all tail points equal xmin; rate is unbounded");
  }
  const double mean_excess = excess / static_cast<double>(tail.size());
  return {std::log1p(1.0 / mean_excess), xmin, tail.size()};
}

LRTestResult CompareLogLikelihoods(std::span<const double> first,
                                   std::span<const double> second,
                                   double significance) {
  if (first.size() != second.size() || first.empty()) {
    throw Error(ErrorCode::kContract,
                "log-likelihood vectors must be non-empty and equal length");
  }
  const double n = static_cast<double>(first.size());
  double ratio = 0;
  for (std::size_t i = 0; i < first.size(); ++i) ratio += first[i] - second[i];
  const double mean = ratio / n;
  double var = 0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    const double d = first[i] - second[i] - mean;
    var += d * d;
  }
  var /= n;

  LRTestResult r;
  r.ratio = ratio;
  if (var == 0) {
    r.p_value = ratio == 0 ? 1.0 : 0.0;
  } else {
    r.p_value = std::erfc(std::abs(ratio) / (std::sqrt(2.0 * n * var)));
  }
  if (r.p_value < significance && ratio > 0) {
    r.preferred = Preference::kPowerLaw;
  } else if (r.p_value < significance && ratio < 0) {
    r.preferred = Preference::kExponential;
  }
  return r;
}

LRTestResult LikelihoodRatioTest(const CountSample& sample,
                                 const PowerLawFit& power_law,
                                 const ExponentialFit& exponential,
                                 double significance) {
  if (power_law.xmin != exponential.xmin) {
    throw Error(ErrorCode::kContract,
                "power-law and exponential fits use different xmin");
  }
  std::span<const std::uint64_t> tail = sample.tail(power_law.xmin);
  std::vector<double> pl, ex;
  pl.reserve(tail.size());
  ex.reserve(tail.size());
  const double log_norm =
      std::log(HurwitzZeta(power_law.alpha, static_cast<double>(power_law.xmin)));
  for (std::uint64_t x : tail) {
    pl.push_back(-power_law.alpha * std::log(static_cast<double>(x)) - log_norm);
    ex.push_back(ExponentialLogPmf(x, exponential.rate, exponential.xmin));
  }
  return CompareLogLikelihoods(pl, ex, significance);
}

}  // namespace tenhundred
