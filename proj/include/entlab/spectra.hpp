#pragma once

#include "entlab/types.hpp"

namespace entlab {

/// Parameters of the sphere concentration bound.
struct ConcentrationParams {
  double alpha;    // deviation, bits
  double eta;      // Lipschitz constant
  double c_const;  // free constant, default 1
  int k;           // sphere dimension

  ConcentrationParams(double a, double e, double c, int kk);
};

/// Qubit/ebit rates for superdense coding of entangled states.
struct SdcRates {
  double qubits;
  double ebits;
};

/// Lower bound on the mean entanglement of a Haar state: log2 d_a - d_a/(2 ln2 d_b), bits.
double page_lower_bound(const BipartiteShape& shape);

/// beta = (1/ln 2)(d_a/d_b).
double beta(const BipartiteShape& shape);

/// exp(-C (k-1) alpha^2 / eta^2).
double levy_rhs(const ConcentrationParams& p);

/// exp(-(d_a d_b - 1) C alpha^2 / (log2 d_a)^2); requires d_a >= 3.
double tail_rhs(const BipartiteShape& shape, double alpha, double c_const);

/// min(1, net_size * single_prob).
double union_bound(long net_size, double single_prob);

/// floor(d_a d_b * C alpha^2.5 / (log2 d_a)^3); requires d_a >= 3 and 0 < alpha < 1.
long subspace_dim_formula(const BipartiteShape& shape, double alpha, double c_const);

/// S(rho_A) + S(rho_B) - S(rho_AB), bits.
double mutual_information(const DensityOperator& rho, const BipartiteShape& shape);

/// qubits = (log2 s + log2 lambda_max)/2, ebits = (log2 s - log2 lambda_max)/2.
/// lambda_max in probability convention, valid range [1/s, 1].
SdcRates sdc_rates(long s, double lambda_max);

}  // namespace entlab
