#include "entlab/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/beta.hpp>
#include <cmath>
#include <stdexcept>

namespace entlab {

SummaryStats summarize(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("summarize: empty sample");
  std::sort(values.begin(), values.end());
  const long n = static_cast<long>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  double mean = sum / n;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var = (n > 1) ? var / (n - 1) : 0.0;
  auto q = [&](double p) {
    return values[static_cast<std::size_t>(p * (n - 1))];
  };
  return SummaryStats{n,      mean, std::sqrt(var / n), values.front(), q(0.05),
                      q(0.5), q(0.95), values.back()};
}

BinomialInterval clopper_pearson(long successes, long trials, double confidence) {
  if (trials <= 0 || successes < 0 || successes > trials) {
    throw std::invalid_argument("clopper_pearson: invalid counts");
  }
  const double a = (1.0 - confidence) / 2.0;
  double lower = 0.0, upper = 1.0;
  if (successes > 0) {
    lower = boost::math::quantile(boost::math::beta_distribution<>(successes, trials - successes + 1), a);
  }
  if (successes < trials) {
    upper = boost::math::quantile(boost::math::beta_distribution<>(successes + 1, trials - successes), 1.0 - a);
  }
  return BinomialInterval{double(successes) / trials, lower, upper};
}

double kolmogorov_tail(double t) {
  if (t <= 0.0) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    double term = 2.0 * ((k % 2) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * t * t);
    sum += term;
    if (std::abs(term) < 1e-12) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

double ks_two_sample_pvalue(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks test: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = double(a.size()), nb = double(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) ++i;
    else ++j;
    d = std::max(d, std::abs(double(i) / na - double(j) / nb));
  }
  double en = std::sqrt(na * nb / (na + nb));
  // Stephens' small-sample correction.
  return kolmogorov_tail((en + 0.12 + 0.11 / en) * d);
}

double ks_one_sample_pvalue(std::vector<double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw std::invalid_argument("ks test: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = double(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    double f = cdf(sample[i]);
    d = std::max({d, std::abs(double(i + 1) / n - f), std::abs(f - double(i) / n)});
  }
  double en = std::sqrt(n);
  return kolmogorov_tail((en + 0.12 + 0.11 / en) * d);
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("linear_fit: need >= 2 points");
  const double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-300) throw std::invalid_argument("linear_fit: degenerate x");
  double slope = (n * sxy - sx * sy) / denom;
  return LinearFit{slope, (sy - slope * sx) / n};
}

}  // namespace entlab
