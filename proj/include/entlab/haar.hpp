#pragma once

#include "entlab/types.hpp"

#include <cstdint>
#include <random>

namespace entlab {

/// Seeded random stream. Identical (master_seed, stream_index) gives an
/// identical sample sequence on every platform and worker count, so parallel
/// trials use disjoint stream indices and aggregate with fixed-order reductions.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index = 0);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  /// Independent stream derived from the same master seed.
  RngStream substream(std::uint64_t stream_index) const;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal via Box-Muller (std::normal_distribution is not
  /// bit-specified across implementations).
  double normal();

  Complex complex_normal();

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct UnitaryMatrix {
  Matrix matrix;

  explicit UnitaryMatrix(Matrix m);

  int dim() const { return static_cast<int>(matrix.rows()); }
};

/// Haar-random pure state: normalized vector of i.i.d. complex Gaussians.
PureState haar_state(int dim, RngStream& rng);

/// Same sampler, with an explicit factor split.
PureState haar_state(const std::vector<int>& dims, RngStream& rng);

/// Haar-random unitary: QR of a complex Gaussian matrix with the R-diagonal
/// phase correction (plain QR is not Haar without it).
UnitaryMatrix haar_unitary(int dim, RngStream& rng);

/// First s columns of a Haar unitary on d_a*d_b.
Subspace random_subspace(const BipartiteShape& shape, int s, RngStream& rng);

/// One independent Haar unitary per factor; columns are the measurement basis.
std::vector<UnitaryMatrix> random_local_bases(const std::vector<int>& dims, RngStream& rng);

}  // namespace entlab
