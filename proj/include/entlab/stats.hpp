#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace entlab {

struct SummaryStats {
  long n;
  double mean;
  double stderr_mean;
  double min;
  double p05;
  double median;
  double p95;
  double max;
};

SummaryStats summarize(std::vector<double> values);

/// Exact (Clopper-Pearson) 95% binomial interval.
struct BinomialInterval {
  double p_hat;
  double lower;
  double upper;
};
BinomialInterval clopper_pearson(long successes, long trials, double confidence = 0.95);

/// Asymptotic Kolmogorov tail Q(t) = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 t^2).
double kolmogorov_tail(double t);

/// Two-sample KS test p-value.
double ks_two_sample_pvalue(std::vector<double> a, std::vector<double> b);

/// One-sample KS p-value against a CDF.
double ks_one_sample_pvalue(std::vector<double> sample, const std::function<double(double)>& cdf);

/// Least-squares slope/intercept of y on x.
struct LinearFit {
  double slope;
  double intercept;
};
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace entlab
