#pragma once

#include "entlab/haar.hpp"
#include "entlab/types.hpp"

namespace entlab {

struct OptimizerOptions {
  int restarts = 5;
  int max_iters = 2000;
  double tol = 1e-6;  // on the Riemannian gradient norm
};

struct OptimizerReport {
  double min_bits;
  PureState argmin;           // ambient state
  Vector argmin_coords;       // unit coordinates in the subspace
  int restarts;
  std::vector<int> iterations;
  bool converged;
  double gradient_norm_final;
};

/// Entanglement entropy (bits) of the embedded state at unit coordinates.
double subspace_entanglement(const Subspace& subspace, const Vector& coords);

/// Riemannian gradient of coords -> S(Tr_B |Vc><Vc|) on the unit sphere of
/// C^s: Euclidean Wirtinger gradient pulled back through the isometry,
/// projected onto the tangent space. Convention: the derivative along a
/// tangent direction u is Re(u^dag g).
Vector entanglement_gradient(const Vector& coords, const Subspace& subspace);

/// Projected gradient descent with backtracking line search and normalization
/// retraction, restarted from Haar-random subspace points. Returns the best
/// (lowest) entanglement found; an upper bound on the true minimum. Ties
/// across restarts break to the lowest restart index.
OptimizerReport min_entanglement(const Subspace& subspace, const OptimizerOptions& opts,
                                 RngStream& rng);

struct ScanRow {
  int s;
  int trials;
  double mean_min_bits;
  double min_min_bits;
  double p05_min_bits;
  double median_min_bits;
  std::vector<double> minima;  // per-trial, in trial order
};

/// Random-subspace minimum-entanglement scan: per s, `trials` random
/// subspaces, each minimized with the given options.
std::vector<ScanRow> subspace_scan(const BipartiteShape& shape, const std::vector<int>& s_values,
                                   int trials, const OptimizerOptions& opts, RngStream& rng);

}  // namespace entlab
