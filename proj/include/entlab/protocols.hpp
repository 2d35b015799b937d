#pragma once

#include "entlab/ef_gap.hpp"
#include "entlab/haar.hpp"
#include "entlab/types.hpp"

#include <optional>

namespace entlab {

struct SdcOutcome {
  double fidelity;
  double qubits_sent;
  double ebits_consumed;
  double input_entanglement_bits;
};

/// Superdense coding of a known pure state: Alice and Bob pre-share the rank
/// d_a maximally entangled state; Bob applies the basis-aligning local unitary
/// built from the Schmidt data of the target and sends his half. Fidelity is
/// computed by explicit state evolution; it equals |sum_i sqrt(lambda_i/d_a)|^2.
SdcOutcome sdc_send(const PureState& state, const BipartiteShape& shape);

/// Closed-form fidelity |sum_i sqrt(lambda_i/d_a)|^2, the independent check
/// against the explicit simulation in sdc_send.
double sdc_fidelity_formula(const PureState& state, const BipartiteShape& shape);

struct SdcRateCheck {
  long s;
  double lambda_max;  // max over the sample, probability convention
  double qubits;
  double ebits;
};

/// Rate accounting for the entangled-state variant: the largest Schmidt
/// spectrum entry over the ensemble sets the qubit/ebit trade-off.
SdcRateCheck sdc_rate_check(long s, const std::vector<PureState>& states,
                            const BipartiteShape& shape);

struct DistillOutcome {
  PureState conditional_state;  // bipartite state of the kept pair
  std::vector<int> outcome_indices;
  double entanglement_bits;
  double outcome_probability;
  int resampled;  // outcomes below the 1e-14 probability guard that were redrawn
};

/// Every remaining party measures in the corresponding basis (columns of the
/// given unitaries, one per measuring party in factor order); one joint
/// outcome is sampled with Born probabilities.
DistillOutcome distill_with_bases(const PureState& state, int keep_i, int keep_j,
                                  const std::vector<UnitaryMatrix>& bases, RngStream& rng);

/// Same protocol with Haar-random local bases.
DistillOutcome distill_random_measurement(const PureState& state, int keep_i, int keep_j,
                                          RngStream& rng);

/// All joint outcomes with their probabilities (enumerative mode; probabilities
/// sum to 1).
std::vector<DistillOutcome> enumerate_distill(const PureState& state, int keep_i, int keep_j,
                                              const std::vector<UnitaryMatrix>& bases);

struct CutEntropy {
  std::vector<int> cut;  // factor indices on the side containing factor 0
  double entropy_bits;
};

/// Entanglement entropy of every nontrivial bipartite cut (2^(n-1) - 1 rows).
std::vector<CutEntropy> bipartite_cuts_scan(const PureState& state);

struct EfProbeRow {
  int trial;
  int range_dim;
  double lower_bits;
  double upper_bits;
  double mutual_info_bits;
};

/// Haar n-qudit states: reduce to the first k factors, take the range subspace
/// of the reduced state, and bracket E_f across the declared first-vs-rest
/// split of the kept qudits. Requires 2 <= k < n.
std::vector<EfProbeRow> reduced_ef_probe(int n, int d, int k, int trials,
                                         const OptimizerOptions& opts, int decomposition_samples,
                                         RngStream& rng);

}  // namespace entlab
