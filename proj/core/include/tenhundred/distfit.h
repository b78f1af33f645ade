#ifndef TENHUNDRED_DISTFIT_H_
#define TENHUNDRED_DISTFIT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tenhundred {

// Per-word occurrence counts. All values >= 1, non-empty.
class CountSample {
 public:
  // Throws Error(kDomain) on an empty sample or a zero value.
  explicit CountSample(std::vector<std::uint64_t> values);

  std::span<const std::uint64_t> values() const { return values_; }  // sorted
  std::size_t size() const { return values_.size(); }
  std::vector<std::uint64_t> distinct() const;
  std::span<const std::uint64_t> tail(std::uint64_t xmin) const;

 private:
  std::vector<std::uint64_t> values_;
};

// Discrete power law on [xmin, inf): p(x) = x^-alpha / zeta(alpha, xmin).
struct PowerLawFit {
  double alpha = 0;
  std::uint64_t xmin = 1;
  double ks = 1;
  std::size_t ntail = 0;
  bool small_tail = false;  // fewer than kMinTailWarning points above xmin
};

inline constexpr std::size_t kMinTailWarning = 10;

// Geometric tail on [xmin, inf): p(x) = (1 - e^-rate) e^(-rate (x - xmin)).
struct ExponentialFit {
  double rate = 0;
  std::uint64_t xmin = 1;
  std::size_t ntail = 0;
};

enum class Preference { kPowerLaw, kExponential, kUndecided };
const char* PreferenceName(Preference p);

struct LRTestResult {
  double ratio = 0;    // sum of log p_powerlaw - log p_exponential
  double p_value = 1;  // two-sided, normal approximation
  Preference preferred = Preference::kUndecided;
};

inline constexpr double kDefaultSignificance = 0.05;

// Hurwitz zeta sum_{k>=0} (q + k)^-s for s > 1, q > 0. Direct summation of
// the first terms plus an Euler-Maclaurin tail; relative error below 1e-12
// over the ranges used here.
double HurwitzZeta(double s, double q);

double PowerLawLogPmf(std::uint64_t x, double alpha, std::uint64_t xmin);
double ExponentialLogPmf(std::uint64_t x, double rate, std::uint64_t xmin);

// Maximum-likelihood exponent for a fixed xmin, with the KS distance of the
// resulting fit. Throws Error(kDegenerateSample) when the tail has fewer
// than two distinct values.
PowerLawFit FitPowerLawAt(const CountSample& sample, std::uint64_t xmin);

// KS distance between the empirical tail CDF and the fitted discrete CDF.
double PowerLawKs(const CountSample& sample, double alpha, std::uint64_t xmin);

// Scans every distinct value as xmin and keeps the fit with the smallest KS
// distance (ties to the smaller xmin). Throws Error(kDegenerateSample) when
// all values are equal.
PowerLawFit FitPowerLaw(const CountSample& sample);

// Throws Error(kDegenerateSample) when fewer than two tail points exist or
// all of them equal xmin.
ExponentialFit FitExponential(const CountSample& sample, std::uint64_t xmin);

// Vuong-style comparison over the shared tail. Throws Error(kContract) if the
// fits disagree on xmin.
LRTestResult LikelihoodRatioTest(const CountSample& sample,
                                 const PowerLawFit& power_law,
                                 const ExponentialFit& exponential,
                                 double significance = kDefaultSignificance);

// The comparison on raw per-point log-likelihoods of two models; `first`
// positive ratio means the first model fits better.
LRTestResult CompareLogLikelihoods(std::span<const double> first,
                                   std::span<const double> second,
                                   double significance = kDefaultSignificance);

}  // namespace tenhundred

#endif  // TENHUNDRED_DISTFIT_H_
