#include "entlab/subspace_opt.hpp"

#include "entlab/tensor.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace entlab {

namespace {

constexpr double kEigFloor = 1e-12;  // -p log p has unbounded slope at 0

Matrix reduced_of(const Subspace& sub, const Vector& coords) {
  Vector phi = sub.isometry * coords;
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      phi.data(), sub.shape.d_a, sub.shape.d_b);
  Matrix rho = m * m.adjoint();
  return (rho + rho.adjoint()) / 2.0;
}

double entropy_of_reduced(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double p = std::clamp(es.eigenvalues()(i), 0.0, 1.0);
    if (p > 0) h -= p * std::log2(p);
  }
  return h;
}

}  // namespace

double subspace_entanglement(const Subspace& subspace, const Vector& coords) {
  return entropy_of_reduced(reduced_of(subspace, coords));
}

Vector entanglement_gradient(const Vector& coords, const Subspace& subspace) {
  const int da = subspace.shape.d_a, db = subspace.shape.d_b;
  Matrix rho = reduced_of(subspace, coords);
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);

  // L = log2(rho_A) + I/ln2, eigenvalues floored inside the log.
  Eigen::VectorXd lvals(da);
  for (int i = 0; i < da; ++i) {
    double p = std::max(es.eigenvalues()(i), kEigFloor);
    lvals(i) = std::log2(p) + 1.0 / std::numbers::ln2;
  }
  Matrix l_op = es.eigenvectors() * lvals.asDiagonal() * es.eigenvectors().adjoint();

  // (L x I_B) applied to phi, pulled back through the isometry.
  Vector phi = subspace.isometry * coords;
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      phi.data(), da, db);
  Matrix lm = l_op * m;
  Vector lphi = Eigen::Map<const Vector>(
      Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>(lm).data(), da * db);
  Vector g_full = -(subspace.isometry.adjoint() * lphi);

  // Real-identified gradient is 2*g_full; project out the radial component.
  double radial = (coords.dot(g_full)).real();
  return 2.0 * (g_full - radial * coords);
}

OptimizerReport min_entanglement(const Subspace& subspace, const OptimizerOptions& opts,
                                 RngStream& rng) {
  if (opts.restarts < 1) throw config_error("min_entanglement: restarts must be >= 1");
  const int s = subspace.dim();

  struct Best {
    double value = -1.0;
    Vector coords;
    bool converged = false;
    double grad_norm = 0.0;
  } best;
  std::vector<int> iterations;

  for (int r = 0; r < opts.restarts; ++r) {
    RngStream sub = rng.substream(r);
    Vector c = haar_state(s, sub).amplitudes;
    double f = subspace_entanglement(subspace, c);
    double gnorm = 0.0;
    bool converged = false;
    int iters = 0;
    double step = 1.0;
    for (; iters < opts.max_iters; ++iters) {
      Vector g = entanglement_gradient(c, subspace);
      gnorm = g.norm();
      if (gnorm < opts.tol) {
        converged = true;
        break;
      }
      // Backtracking line search with normalization retraction; Armijo
      // sufficient decrease on the tangent gradient norm.
      double t = std::min(step * 2.0, 1.0);
      bool moved = false;
      while (t > 1e-14) {
        Vector cand = c - t * g;
        cand /= cand.norm();
        double fc = subspace_entanglement(subspace, cand);
        if (fc <= f - 1e-4 * t * gnorm * gnorm) {
          c = std::move(cand);
          f = fc;
          step = t;
          moved = true;
          break;
        }
        t *= 0.5;
      }
      if (!moved) break;  // stalled; report final gradient norm as-is
    }
    iterations.push_back(iters);
    if (best.value < 0.0 || f < best.value) {  // ties keep the earlier restart
      best.value = f;
      best.coords = c;
      best.converged = converged;
      best.grad_norm = gnorm;
    }
  }

  return OptimizerReport{best.value,    subspace.embed(best.coords), best.coords,
                         opts.restarts, std::move(iterations),       best.converged,
                         best.grad_norm};
}

std::vector<ScanRow> subspace_scan(const BipartiteShape& shape, const std::vector<int>& s_values,
                                   int trials, const OptimizerOptions& opts, RngStream& rng) {
  if (trials < 1) throw config_error("subspace_scan: trials must be >= 1");
  std::vector<ScanRow> rows;
  for (std::size_t si = 0; si < s_values.size(); ++si) {
    ScanRow row;
    row.s = s_values[si];
    row.trials = trials;
    for (int t = 0; t < trials; ++t) {
      RngStream sub = rng.substream((si << 32) | static_cast<std::uint64_t>(t));
      RngStream sub_space = sub.substream(0);
      RngStream sub_opt = sub.substream(1);
      Subspace sp = random_subspace(shape, row.s, sub_space);
      row.minima.push_back(min_entanglement(sp, opts, sub_opt).min_bits);
    }
    std::vector<double> sorted = row.minima;
    std::sort(sorted.begin(), sorted.end());
    double sum = 0.0;
    for (double v : sorted) sum += v;
    row.mean_min_bits = sum / trials;
    row.min_min_bits = sorted.front();
    row.p05_min_bits = sorted[static_cast<std::size_t>(0.05 * (trials - 1))];
    row.median_min_bits = sorted[sorted.size() / 2];
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace entlab
