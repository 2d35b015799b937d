#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace entlab {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Thrown for invalid configuration / arguments (CLI exit code 2).
struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when a computation would exceed a feasibility guard (CLI exit code 3).
struct feasibility_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical-domain violations map to std::domain_error (CLI exit code 4).

/// Bipartite factor dimensions, normalized so d_a <= d_b.
/// Convention throughout: factor 0 (the A side) is the leftmost tensor factor.
struct BipartiteShape {
  int d_a;
  int d_b;

  BipartiteShape(int da, int db) : d_a(da), d_b(db) {
    if (da < 2 || db < 2) throw config_error("BipartiteShape: dimensions must be >= 2");
    if (d_a > d_b) std::swap(d_a, d_b);
  }

  int total() const { return d_a * d_b; }
};

enum class Side { A, B };

/// Pure state on a composite system with an explicit factor-dimension list.
struct PureState {
  Vector amplitudes;
  std::vector<int> dims;

  PureState(Vector amps, std::vector<int> factor_dims);

  int total_dim() const { return static_cast<int>(amplitudes.size()); }
  int n_factors() const { return static_cast<int>(dims.size()); }
};

/// Density operator; Hermitian, unit trace, PSD up to small slack.
struct DensityOperator {
  Matrix matrix;

  explicit DensityOperator(Matrix m);

  int dim() const { return static_cast<int>(matrix.rows()); }
};

/// Schmidt data in the probability convention: spectrum entries are the
/// squared Schmidt coefficients (eigenvalues of either reduced state),
/// sorted nonincreasing. lambda_max() is the first entry.
struct SchmidtDecomposition {
  Eigen::VectorXd spectrum;
  Matrix left_basis;   // d_a x r, orthonormal columns
  Matrix right_basis;  // d_b x r, orthonormal columns

  double lambda_max() const { return spectrum(0); }
  int rank(double tol = 1e-12) const;
};

/// Isometric embedding of an s-dimensional space into a bipartite space.
struct Subspace {
  Matrix isometry;  // (d_a*d_b) x s, orthonormal columns
  BipartiteShape shape;

  Subspace(Matrix v, BipartiteShape sh);

  int dim() const { return static_cast<int>(isometry.cols()); }

  /// Ambient state for unit coordinates c.
  PureState embed(const Vector& coords) const;
};

}  // namespace entlab
