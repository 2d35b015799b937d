#include "entlab/ef_gap.hpp"

#include "entlab/spectra.hpp"
#include "entlab/tensor.hpp"

#include <cmath>

namespace entlab {

DensityOperator maximally_mixed_on(const Subspace& subspace) {
  Matrix rho = subspace.isometry * subspace.isometry.adjoint() / double(subspace.dim());
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityOperator(std::move(rho));
}

std::vector<PureState> mixed_decomposition(const Subspace& subspace, const UnitaryMatrix& mixer) {
  const int s = subspace.dim();
  if (mixer.dim() != s) throw config_error("mixed_decomposition: mixer dimension != s");
  // rho = (1/s) sum_j |v_j><v_j| = (1/s) sum_k |psi_k><psi_k| for
  // psi_k = V * (k-th column of W^dag); each weight stays exactly 1/s.
  std::vector<PureState> out;
  out.reserve(s);
  Matrix w_dag = mixer.matrix.adjoint();
  for (int k = 0; k < s; ++k) {
    Vector c = w_dag.col(k);
    c /= c.norm();
    out.push_back(subspace.embed(c));
  }
  return out;
}

EfBracket ef_bracket(const Subspace& subspace, const OptimizerOptions& opts,
                     int decomposition_samples, RngStream& rng) {
  if (decomposition_samples < 1) throw config_error("ef_bracket: decomposition_samples >= 1");
  const int s = subspace.dim();

  RngStream rng_opt = rng.substream(0);
  double lower = min_entanglement(subspace, opts, rng_opt).min_bits;

  double upper = std::log2(double(subspace.shape.d_a)) + 1.0;
  for (int t = 0; t < decomposition_samples; ++t) {
    RngStream sub = rng.substream(1 + t);
    UnitaryMatrix w = haar_unitary(s, sub);
    double avg = 0.0;
    for (const PureState& psi : mixed_decomposition(subspace, w)) {
      avg += entanglement_entropy(psi, subspace.shape);
    }
    avg /= s;
    upper = std::min(upper, avg);
  }
  lower = std::min(lower, upper);  // optimizer reports an upper bound on the
                                   // true minimum; never let the bracket invert

  double mi = mutual_information(maximally_mixed_on(subspace), subspace.shape);
  return EfBracket{lower, upper, mi, s};
}

std::vector<GapRow> gap_report(const BipartiteShape& shape, int s, int trials,
                               const OptimizerOptions& opts, int decomposition_samples,
                               RngStream& rng) {
  if (trials < 1) throw config_error("gap_report: trials must be >= 1");
  std::vector<GapRow> rows;
  rows.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    RngStream sub = rng.substream(t);
    RngStream sub_space = sub.substream(0);
    RngStream sub_ef = sub.substream(1);
    Subspace sp = random_subspace(shape, s, sub_space);
    EfBracket b = ef_bracket(sp, opts, decomposition_samples, sub_ef);
    rows.push_back(GapRow{t, b.lower_bits, b.upper_bits, b.mutual_info_bits});
  }
  return rows;
}

}  // namespace entlab
