#pragma once

#include "entlab/types.hpp"

namespace entlab {

/// Reduced operator of a bipartite pure state on the kept side.
DensityOperator partial_trace(const PureState& state, const BipartiteShape& shape, Side keep);

/// Reduced operator of a density operator on the kept side of a bipartite split.
DensityOperator partial_trace(const DensityOperator& rho, const BipartiteShape& shape, Side keep);

/// Partial trace over the complement of `keep` (factor indices, any order).
/// The kept factors retain their original relative order.
DensityOperator reduced_state(const PureState& state, const std::vector<int>& keep);

SchmidtDecomposition schmidt(const PureState& state, const BipartiteShape& shape);

/// -sum p log2 p over the eigenvalues, in bits. Eigenvalues within -1e-10 of
/// zero are clipped; anything more negative is a domain error.
double von_neumann_entropy(const DensityOperator& rho);

/// Entropy of entanglement across the (A|B) cut, in bits.
double entanglement_entropy(const PureState& state, const BipartiteShape& shape);

/// |<a|b>|^2, phase invariant.
double state_fidelity(const PureState& a, const PureState& b);

/// Reshape a bipartite pure state into its d_a x d_b coefficient matrix
/// (row index = A, column index = B).
Matrix as_matrix(const PureState& state, const BipartiteShape& shape);

}  // namespace entlab
