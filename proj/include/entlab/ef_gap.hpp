#pragma once

#include "entlab/haar.hpp"
#include "entlab/subspace_opt.hpp"
#include "entlab/types.hpp"

namespace entlab {

/// Entanglement-of-formation bracket for the maximally mixed state on a
/// subspace, plus its quantum mutual information.
struct EfBracket {
  double lower_bits;
  double upper_bits;
  double mutual_info_bits;
  int subspace_dim;
};

/// V V^dag / s.
DensityOperator maximally_mixed_on(const Subspace& subspace);

/// Lower bound: minimum entanglement over the subspace (every decomposition
/// vector lies in the range). Upper bound: best average entanglement over
/// `decomposition_samples` Haar-mixed uniform decompositions of rho.
EfBracket ef_bracket(const Subspace& subspace, const OptimizerOptions& opts,
                     int decomposition_samples, RngStream& rng);

struct GapRow {
  int trial;
  double lower_bits;
  double upper_bits;
  double mutual_info_bits;
};

/// Per-trial brackets over random subspaces of dimension s.
std::vector<GapRow> gap_report(const BipartiteShape& shape, int s, int trials,
                               const OptimizerOptions& opts, int decomposition_samples,
                               RngStream& rng);

/// One uniform pure-state decomposition of V V^dag / s: the s states
/// V * (columns of W^dag applied to the coordinate basis), weight 1/s each.
std::vector<PureState> mixed_decomposition(const Subspace& subspace, const UnitaryMatrix& mixer);

}  // namespace entlab
