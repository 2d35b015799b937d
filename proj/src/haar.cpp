#include "entlab/haar.hpp"

#include <Eigen/QR>
#include <cmath>
#include <numbers>

namespace entlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed),
      stream_index_(stream_index),
      gen_(splitmix64(splitmix64(master_seed) ^ splitmix64(stream_index ^ 0xa5a5a5a5a5a5a5a5ULL))) {}

RngStream RngStream::substream(std::uint64_t stream_index) const {
  return RngStream(master_seed_, splitmix64(stream_index_) ^ stream_index);
}

double RngStream::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform(), u2 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

Complex RngStream::complex_normal() {
  return {normal(), normal()};
}

UnitaryMatrix::UnitaryMatrix(Matrix m) : matrix(std::move(m)) {
  if (matrix.rows() != matrix.cols()) throw config_error("UnitaryMatrix: not square");
  Matrix res = matrix.adjoint() * matrix - Matrix::Identity(matrix.rows(), matrix.cols());
  if (res.cwiseAbs().maxCoeff() > 1e-10) {
    throw std::domain_error("UnitaryMatrix: U†U != I within 1e-10");
  }
}

PureState haar_state(int dim, RngStream& rng) {
  if (dim < 1) throw std::domain_error("haar_state: dim must be >= 1");
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rng.complex_normal();
  v /= v.norm();
  return PureState(std::move(v), {dim});
}

PureState haar_state(const std::vector<int>& dims, RngStream& rng) {
  long total = 1;
  for (int d : dims) {
    if (d < 1) throw std::domain_error("haar_state: factor dim must be >= 1");
    total *= d;
  }
  PureState flat = haar_state(static_cast<int>(total), rng);
  return PureState(std::move(flat.amplitudes), dims);
}

UnitaryMatrix haar_unitary(int dim, RngStream& rng) {
  if (dim < 1) throw std::domain_error("haar_unitary: dim must be >= 1");
  Matrix g(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) g(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the gauge: multiply each column by the phase of the matching R diagonal.
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    double a = std::abs(d);
    q.col(j) *= (a > 0 ? d / a : Complex(1, 0));
  }
  return UnitaryMatrix(std::move(q));
}

Subspace random_subspace(const BipartiteShape& shape, int s, RngStream& rng) {
  const int total = shape.total();
  if (s < 1 || s > total) throw std::domain_error("random_subspace: s out of range [1, d_a*d_b]");
  UnitaryMatrix u = haar_unitary(total, rng);
  return Subspace(u.matrix.leftCols(s), shape);
}

std::vector<UnitaryMatrix> random_local_bases(const std::vector<int>& dims, RngStream& rng) {
  std::vector<UnitaryMatrix> out;
  out.reserve(dims.size());
  for (std::size_t f = 0; f < dims.size(); ++f) {
    RngStream sub = rng.substream(0x10000000ULL + f);
    out.push_back(haar_unitary(dims[f], sub));
  }
  return out;
}

}  // namespace entlab
