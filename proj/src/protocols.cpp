#include "entlab/protocols.hpp"

#include "entlab/spectra.hpp"
#include "entlab/tensor.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace entlab {

namespace {

// Unitary completion: given a d x r matrix with orthonormal columns, return a
// d x d unitary whose first r columns are those columns.
Matrix complete_basis(const Matrix& cols) {
  const auto d = cols.rows(), r = cols.cols();
  Eigen::HouseholderQR<Matrix> qr(cols);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  Matrix full(d, d);
  full.leftCols(r) = cols;
  full.rightCols(d - r) = q.rightCols(d - r);
  return full;
}

// Apply a unitary to one tensor factor of a state vector.
Vector apply_local(const Vector& amps, const std::vector<int>& dims, int factor, const Matrix& u) {
  const int df = dims[factor];
  long inner = 1;
  for (std::size_t f = factor + 1; f < dims.size(); ++f) inner *= dims[f];
  long outer = amps.size() / (inner * df);
  Vector out = Vector::Zero(amps.size());
  for (long o = 0; o < outer; ++o) {
    for (long i = 0; i < inner; ++i) {
      long base = o * df * inner + i;
      for (int a = 0; a < df; ++a) {
        Complex acc(0);
        for (int b = 0; b < df; ++b) acc += u(a, b) * amps(base + b * inner);
        out(base + a * inner) = acc;
      }
    }
  }
  return out;
}

double pair_entanglement(const PureState& pair_state) {
  return von_neumann_entropy(reduced_state(pair_state, {0}));
}

struct MeasurementTable {
  Matrix columns;                // (d_i * d_j) x (# joint outcomes)
  std::vector<double> probs;     // per joint outcome
  std::vector<int> meas_factors;
  std::vector<int> meas_dims;
  int d_i, d_j;
};

MeasurementTable measurement_table(const PureState& state, int keep_i, int keep_j,
                                   const std::vector<UnitaryMatrix>& bases) {
  const int n = state.n_factors();
  if (n < 3) throw config_error("distill: needs at least 3 parties");
  if (keep_i == keep_j || keep_i < 0 || keep_j < 0 || keep_i >= n || keep_j >= n) {
    throw config_error("distill: keep indices must be distinct and in range");
  }

  std::vector<int> meas_factors;
  for (int f = 0; f < n; ++f)
    if (f != keep_i && f != keep_j) meas_factors.push_back(f);
  if (bases.size() != meas_factors.size()) {
    throw config_error("distill: need one basis per measuring party");
  }

  Vector rotated = state.amplitudes;
  for (std::size_t m = 0; m < meas_factors.size(); ++m) {
    int f = meas_factors[m];
    if (bases[m].dim() != state.dims[f]) throw config_error("distill: basis dimension mismatch");
    rotated = apply_local(rotated, state.dims, f, bases[m].matrix.adjoint());
  }

  MeasurementTable table;
  table.meas_factors = meas_factors;
  table.d_i = state.dims[keep_i];
  table.d_j = state.dims[keep_j];
  long d_meas = 1;
  for (int f : meas_factors) {
    table.meas_dims.push_back(state.dims[f]);
    d_meas *= state.dims[f];
  }

  std::vector<long> stride(n);
  long acc = 1;
  for (int f = n - 1; f >= 0; --f) {
    stride[f] = acc;
    acc *= state.dims[f];
  }

  table.columns = Matrix::Zero(long(table.d_i) * table.d_j, d_meas);
  for (long g = 0; g < acc; ++g) {
    long rem = g, col = 0;
    int di = 0, dj = 0;
    for (int f = 0; f < n; ++f) {
      int digit = static_cast<int>(rem / stride[f]);
      rem %= stride[f];
      if (f == keep_i) di = digit;
      else if (f == keep_j) dj = digit;
      else col = col * state.dims[f] + digit;
    }
    table.columns(long(di) * table.d_j + dj, col) = rotated(g);
  }
  table.probs.resize(d_meas);
  for (long c = 0; c < d_meas; ++c) table.probs[c] = table.columns.col(c).squaredNorm();
  return table;
}

DistillOutcome outcome_from_column(const MeasurementTable& table, long col, int resampled) {
  double p = table.probs[col];
  Vector cond = table.columns.col(col) / std::sqrt(p);
  PureState cond_state(std::move(cond), {table.d_i, table.d_j});
  std::vector<int> outcome(table.meas_dims.size());
  long rem = col;
  for (int m = static_cast<int>(table.meas_dims.size()) - 1; m >= 0; --m) {
    outcome[m] = static_cast<int>(rem % table.meas_dims[m]);
    rem /= table.meas_dims[m];
  }
  double ent = pair_entanglement(cond_state);
  return DistillOutcome{std::move(cond_state), std::move(outcome), ent, p, resampled};
}

}  // namespace

double sdc_fidelity_formula(const PureState& state, const BipartiteShape& shape) {
  SchmidtDecomposition sd = schmidt(state, shape);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < sd.spectrum.size(); ++i) {
    acc += std::sqrt(std::max(sd.spectrum(i), 0.0) / shape.d_a);
  }
  return acc * acc;
}

SdcOutcome sdc_send(const PureState& state, const BipartiteShape& shape) {
  const int da = shape.d_a, db = shape.d_b;
  SchmidtDecomposition sd = schmidt(state, shape);

  // Pre-shared rank-d_a maximally entangled state, embedded in d_a x d_b.
  Vector shared = Vector::Zero(long(da) * db);
  for (int i = 0; i < da; ++i) shared(long(i) * db + i) = Complex(1.0 / std::sqrt(double(da)), 0);

  // In the A-Schmidt basis the shared state reads
  // (1/sqrt(d_a)) sum_j |a_j> |abar_j> with abar_j = conj(a_j) embedded in B.
  Matrix abar = Matrix::Zero(db, da);
  abar.topRows(da) = sd.left_basis.conjugate();
  Matrix u_b = complete_basis(sd.right_basis) * complete_basis(abar).adjoint();

  // Bob's local rotation on the sent half: M' = M * U_B^T.
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      shared.data(), da, db);
  Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> evolved =
      m * u_b.transpose();
  Vector result = Eigen::Map<const Vector>(evolved.data(), long(da) * db);
  PureState received(std::move(result), {da, db});

  double input_ent = entanglement_entropy(state, shape);
  return SdcOutcome{state_fidelity(received, state), std::log2(double(db)),
                    std::log2(double(da)), input_ent};
}

SdcRateCheck sdc_rate_check(long s, const std::vector<PureState>& states,
                            const BipartiteShape& shape) {
  if (states.empty()) throw config_error("sdc_rate_check: empty sample");
  double lmax = 0.0;
  for (const PureState& st : states) lmax = std::max(lmax, schmidt(st, shape).lambda_max());
  SdcRates rates = sdc_rates(s, lmax);
  return SdcRateCheck{s, lmax, rates.qubits, rates.ebits};
}

DistillOutcome distill_with_bases(const PureState& state, int keep_i, int keep_j,
                                  const std::vector<UnitaryMatrix>& bases, RngStream& rng) {
  MeasurementTable table = measurement_table(state, keep_i, keep_j, bases);
  int resampled = 0;
  long chosen = -1;
  for (int attempt = 0; attempt < 100 && chosen < 0; ++attempt) {
    double u = rng.uniform(), acc = 0.0;
    long pick = static_cast<long>(table.probs.size()) - 1;
    for (std::size_t c = 0; c < table.probs.size(); ++c) {
      acc += table.probs[c];
      if (u < acc) {
        pick = static_cast<long>(c);
        break;
      }
    }
    if (table.probs[pick] >= 1e-14) chosen = pick;
    else ++resampled;  // guard against normalization blowup
  }
  if (chosen < 0) {
    chosen = static_cast<long>(
        std::max_element(table.probs.begin(), table.probs.end()) - table.probs.begin());
  }
  return outcome_from_column(table, chosen, resampled);
}

DistillOutcome distill_random_measurement(const PureState& state, int keep_i, int keep_j,
                                          RngStream& rng) {
  std::vector<int> meas_dims;
  for (int f = 0; f < state.n_factors(); ++f)
    if (f != keep_i && f != keep_j) meas_dims.push_back(state.dims[f]);
  RngStream basis_rng = rng.substream(0x4221);
  std::vector<UnitaryMatrix> bases = random_local_bases(meas_dims, basis_rng);
  RngStream outcome_rng = rng.substream(0x4222);
  return distill_with_bases(state, keep_i, keep_j, bases, outcome_rng);
}

std::vector<DistillOutcome> enumerate_distill(const PureState& state, int keep_i, int keep_j,
                                              const std::vector<UnitaryMatrix>& bases) {
  MeasurementTable table = measurement_table(state, keep_i, keep_j, bases);
  std::vector<DistillOutcome> out;
  out.reserve(table.probs.size());
  for (std::size_t c = 0; c < table.probs.size(); ++c) {
    if (table.probs[c] < 1e-14) continue;  // zero-probability branches skipped
    out.push_back(outcome_from_column(table, static_cast<long>(c), 0));
  }
  return out;
}

std::vector<CutEntropy> bipartite_cuts_scan(const PureState& state) {
  const int n = state.n_factors();
  if (n < 2) throw config_error("bipartite_cuts_scan: needs at least 2 factors");
  std::vector<CutEntropy> rows;
  // Each cut once: enumerate subsets containing factor 0.
  for (unsigned mask = 1; mask < (1u << n) - 1; ++mask) {
    if (!(mask & 1u)) continue;
    std::vector<int> cut;
    for (int f = 0; f < n; ++f)
      if (mask & (1u << f)) cut.push_back(f);
    double ent = von_neumann_entropy(reduced_state(state, cut));
    rows.push_back(CutEntropy{std::move(cut), ent});
  }
  return rows;
}

std::vector<EfProbeRow> reduced_ef_probe(int n, int d, int k, int trials,
                                         const OptimizerOptions& opts, int decomposition_samples,
                                         RngStream& rng) {
  if (k < 2 || k >= n) {
    throw std::domain_error(
        "reduced_ef_probe: needs 2 <= k < n (a single qudit has no bipartite split)");
  }
  if (d < 2) throw config_error("reduced_ef_probe: d must be >= 2");

  std::vector<int> dims(n, d);
  std::vector<int> keep(k);
  std::iota(keep.begin(), keep.end(), 0);
  long dk = 1;
  for (int i = 0; i < k; ++i) dk *= d;
  // Declared split of the kept qudits: first vs rest.
  BipartiteShape split(d, static_cast<int>(dk / d));

  std::vector<EfProbeRow> rows;
  for (int t = 0; t < trials; ++t) {
    RngStream sub = rng.substream(t);
    RngStream sub_state = sub.substream(0);
    RngStream sub_ef = sub.substream(1);
    PureState psi = haar_state(dims, sub_state);
    DensityOperator rho_k = reduced_state(psi, keep);

    Eigen::SelfAdjointEigenSolver<Matrix> es(rho_k.matrix);
    std::vector<int> kept_cols;
    for (int i = 0; i < rho_k.dim(); ++i)
      if (es.eigenvalues()(i) > 1e-10) kept_cols.push_back(i);
    Matrix iso(rho_k.dim(), kept_cols.size());
    for (std::size_t c = 0; c < kept_cols.size(); ++c) iso.col(c) = es.eigenvectors().col(kept_cols[c]);

    Subspace range(std::move(iso), split);
    EfBracket b = ef_bracket(range, opts, decomposition_samples, sub_ef);
    rows.push_back(EfProbeRow{t, range.dim(), b.lower_bits, b.upper_bits, b.mutual_info_bits});
  }
  return rows;
}

}  // namespace entlab
