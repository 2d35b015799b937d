#include "entlab/tensor.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace entlab {

namespace {

void check_bipartite(const PureState& state, const BipartiteShape& shape) {
  if (state.n_factors() != 2 || state.dims[0] != shape.d_a || state.dims[1] != shape.d_b) {
    throw config_error("state dims do not match bipartite shape (" +
                       std::to_string(shape.d_a) + "," + std::to_string(shape.d_b) + ")");
  }
}

}  // namespace

PureState::PureState(Vector amps, std::vector<int> factor_dims)
    : amplitudes(std::move(amps)), dims(std::move(factor_dims)) {
  long prod = 1;
  for (int d : dims) {
    if (d <= 0) throw config_error("PureState: factor dimensions must be positive");
    prod *= d;
  }
  if (prod != amplitudes.size()) {
    throw config_error("PureState: product of dims != amplitude count");
  }
  double n2 = amplitudes.squaredNorm();
  if (std::abs(n2 - 1.0) > 1e-12) {
    throw config_error("PureState: squared norm " + std::to_string(n2) + " != 1");
  }
}

DensityOperator::DensityOperator(Matrix m) : matrix(std::move(m)) {
  if (matrix.rows() != matrix.cols()) {
    throw config_error("DensityOperator: matrix not square");
  }
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::domain_error("DensityOperator: not Hermitian within 1e-12");
  }
  if (std::abs(matrix.trace().real() - 1.0) > 1e-12 || std::abs(matrix.trace().imag()) > 1e-12) {
    throw std::domain_error("DensityOperator: trace != 1 within 1e-12");
  }
}

int SchmidtDecomposition::rank(double tol) const {
  int r = 0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i)
    if (spectrum(i) > tol) ++r;
  return r;
}

Subspace::Subspace(Matrix v, BipartiteShape sh) : isometry(std::move(v)), shape(sh) {
  if (isometry.rows() != shape.total()) {
    throw config_error("Subspace: ambient dimension mismatch");
  }
  if (isometry.cols() < 1 || isometry.cols() > isometry.rows()) {
    throw config_error("Subspace: inner dimension out of range");
  }
  Matrix gram = isometry.adjoint() * isometry;
  gram -= Matrix::Identity(isometry.cols(), isometry.cols());
  if (gram.cwiseAbs().maxCoeff() > 1e-10) {
    throw std::domain_error("Subspace: columns not orthonormal within 1e-10");
  }
}

PureState Subspace::embed(const Vector& coords) const {
  if (coords.size() != isometry.cols()) throw config_error("Subspace::embed: bad coordinate size");
  Vector amps = isometry * coords;
  return PureState(amps, {shape.d_a, shape.d_b});
}

Matrix as_matrix(const PureState& state, const BipartiteShape& shape) {
  check_bipartite(state, shape);
  // Amplitude index i*d_b + j, so the reshape is row-major.
  return Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      state.amplitudes.data(), shape.d_a, shape.d_b);
}

DensityOperator partial_trace(const PureState& state, const BipartiteShape& shape, Side keep) {
  Matrix m = as_matrix(state, shape);
  Matrix rho = (keep == Side::A) ? Matrix(m * m.adjoint()) : Matrix(m.transpose() * m.conjugate());
  // Symmetrize away round-off before validation.
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityOperator(std::move(rho));
}

DensityOperator partial_trace(const DensityOperator& rho, const BipartiteShape& shape, Side keep) {
  const int da = shape.d_a, db = shape.d_b;
  if (rho.dim() != da * db) throw config_error("partial_trace: dimension mismatch");
  Matrix out;
  if (keep == Side::A) {
    out = Matrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        for (int k = 0; k < db; ++k) out(i, j) += rho.matrix(i * db + k, j * db + k);
  } else {
    out = Matrix::Zero(db, db);
    for (int i = 0; i < db; ++i)
      for (int j = 0; j < db; ++j)
        for (int k = 0; k < da; ++k) out(i, j) += rho.matrix(k * db + i, k * db + j);
  }
  out = (out + out.adjoint()) / 2.0;
  return DensityOperator(std::move(out));
}

DensityOperator reduced_state(const PureState& state, const std::vector<int>& keep) {
  const int n = state.n_factors();
  if (keep.empty() || static_cast<int>(keep.size()) >= n) {
    throw std::domain_error("reduced_state: keep must be a nonempty proper subset");
  }
  std::vector<bool> kept(n, false);
  for (int idx : keep) {
    if (idx < 0 || idx >= n) throw std::domain_error("reduced_state: factor index out of range");
    if (kept[idx]) throw std::domain_error("reduced_state: duplicate factor index");
    kept[idx] = true;
  }
  // Group kept factors (original order) against traced factors via strides.
  long d_keep = 1, d_trace = 1;
  for (int f = 0; f < n; ++f) (kept[f] ? d_keep : d_trace) *= state.dims[f];

  std::vector<long> stride(n);
  long acc = 1;
  for (int f = n - 1; f >= 0; --f) {
    stride[f] = acc;
    acc *= state.dims[f];
  }

  // Map each global index to (kept multi-index, traced multi-index).
  Matrix m(d_keep, d_trace);
  std::vector<int> digits(n);
  for (long g = 0; g < acc; ++g) {
    long rem = g, ik = 0, it = 0;
    for (int f = 0; f < n; ++f) {
      int dg = static_cast<int>(rem / stride[f]);
      rem %= stride[f];
      if (kept[f]) ik = ik * state.dims[f] + dg;
      else it = it * state.dims[f] + dg;
    }
    m(ik, it) = state.amplitudes(g);
  }
  Matrix rho = m * m.adjoint();
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityOperator(std::move(rho));
}

SchmidtDecomposition schmidt(const PureState& state, const BipartiteShape& shape) {
  Matrix m = as_matrix(state, shape);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtDecomposition out;
  Eigen::VectorXd sv = svd.singularValues();
  out.spectrum = sv.array().square();
  double total = out.spectrum.sum();
  if (total > 0) out.spectrum /= total;  // absorb round-off
  out.left_basis = svd.matrixU();
  out.right_basis = svd.matrixV().conjugate();
  return out;
}

double von_neumann_entropy(const DensityOperator& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix, Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double p = es.eigenvalues()(i);
    if (p < -1e-10) {
      throw std::domain_error("von_neumann_entropy: eigenvalue " + std::to_string(p) +
                              " below -1e-10, operator not PSD");
    }
    p = std::clamp(p, 0.0, 1.0);
    if (p > 0.0) h -= p * std::log2(p);
  }
  return std::max(h, 0.0);
}

double entanglement_entropy(const PureState& state, const BipartiteShape& shape) {
  return von_neumann_entropy(partial_trace(state, shape, Side::A));
}

double state_fidelity(const PureState& a, const PureState& b) {
  if (a.total_dim() != b.total_dim()) throw config_error("state_fidelity: dimension mismatch");
  return std::norm(a.amplitudes.dot(b.amplitudes));
}

}  // namespace entlab
