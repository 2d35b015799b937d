#include "entlab/spectra.hpp"

#include "entlab/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace entlab {

namespace {
constexpr double kLn2 = std::numbers::ln2;
}

ConcentrationParams::ConcentrationParams(double a, double e, double c, int kk)
    : alpha(a), eta(e), c_const(c), k(kk) {
  if (alpha <= 0 || eta <= 0 || c_const <= 0 || k < 2) {
    throw config_error("ConcentrationParams: alpha, eta, C must be > 0 and k >= 2");
  }
}

double page_lower_bound(const BipartiteShape& shape) {
  return std::log2(shape.d_a) - shape.d_a / (2.0 * kLn2 * shape.d_b);
}

double beta(const BipartiteShape& shape) {
  return static_cast<double>(shape.d_a) / shape.d_b / kLn2;
}

double levy_rhs(const ConcentrationParams& p) {
  return std::exp(-p.c_const * (p.k - 1) * p.alpha * p.alpha / (p.eta * p.eta));
}

double tail_rhs(const BipartiteShape& shape, double alpha, double c_const) {
  if (shape.d_a < 3) {
    throw std::domain_error("tail_rhs: bound requires d_b >= d_a >= 3");
  }
  if (alpha < 0 || c_const <= 0) throw std::domain_error("tail_rhs: alpha >= 0 and C > 0 required");
  double l = std::log2(shape.d_a);
  return std::exp(-(static_cast<double>(shape.total()) - 1.0) * c_const * alpha * alpha / (l * l));
}

double union_bound(long net_size, double single_prob) {
  if (net_size < 0 || single_prob < 0) throw std::domain_error("union_bound: negative input");
  return std::min(1.0, static_cast<double>(net_size) * single_prob);
}

long subspace_dim_formula(const BipartiteShape& shape, double alpha, double c_const) {
  if (shape.d_a < 3) {
    throw std::domain_error("subspace_dim_formula: requires d_b >= d_a >= 3");
  }
  if (alpha <= 0 || alpha >= 1) {
    throw std::domain_error("subspace_dim_formula: requires 0 < alpha < 1");
  }
  double l = std::log2(shape.d_a);
  double value = shape.total() * c_const * std::pow(alpha, 2.5) / (l * l * l);
  return static_cast<long>(std::floor(value));
}

double mutual_information(const DensityOperator& rho, const BipartiteShape& shape) {
  double sa = von_neumann_entropy(partial_trace(rho, shape, Side::A));
  double sb = von_neumann_entropy(partial_trace(rho, shape, Side::B));
  double sab = von_neumann_entropy(rho);
  return std::max(0.0, sa + sb - sab);
}

SdcRates sdc_rates(long s, double lambda_max) {
  if (s < 1) throw std::domain_error("sdc_rates: s must be >= 1");
  if (lambda_max < 1.0 / s - 1e-12 || lambda_max > 1.0 + 1e-12) {
    throw std::domain_error("sdc_rates: lambda_max must lie in [1/s, 1]");
  }
  lambda_max = std::clamp(lambda_max, 1.0 / s, 1.0);
  double ls = std::log2(static_cast<double>(s));
  double ll = std::log2(lambda_max);
  return SdcRates{0.5 * ls + 0.5 * ll, 0.5 * ls - 0.5 * ll};
}

}  // namespace entlab
