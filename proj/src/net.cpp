#include "entlab/net.hpp"

#include "entlab/spectra.hpp"
#include "entlab/tensor.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>

namespace entlab {

namespace {

struct GridParams {
  double h;    // lattice spacing epsilon / sqrt(2s)
  int k_max;   // enumeration range: lattice points inside the unit ball
  int n_real;  // 2s
};

// For any unit x, rounding (1 - eps/2) x to the lattice stays inside the
// ball and the normalized point is within angle asin(eps/2 / (1 - eps)) of x,
// which is <= eps in trace distance whenever eps <= 1/2. Keeping the ball
// radius fixed at 1 makes the count a clean power law in 1/eps.
GridParams grid_params(int s, double epsilon) {
  if (epsilon <= 0.0 || epsilon > 1.0) throw std::domain_error("net: epsilon must be in (0, 1]");
  GridParams p;
  p.n_real = 2 * s;
  p.h = epsilon / std::sqrt(static_cast<double>(p.n_real));
  p.k_max = static_cast<int>(std::floor(1.0 / p.h));
  return p;
}

// Enumerate lattice points of h*Z^{2s} with 0 < |x| <= radius, in a fixed
// lexicographic order, invoking visit(x).
void enumerate_grid(const GridParams& p, const std::function<void(const std::vector<double>&)>& visit) {
  std::vector<double> x(p.n_real, 0.0);
  const double r2 = 1.0;
  std::function<void(int, double)> rec = [&](int coord, double norm2) {
    if (coord == p.n_real) {
      if (norm2 > 0.0) visit(x);
      return;
    }
    for (int k = -p.k_max; k <= p.k_max; ++k) {
      double v = k * p.h;
      double n2 = norm2 + v * v;
      if (n2 > r2) continue;
      x[coord] = v;
      rec(coord + 1, n2);
    }
  };
  rec(0, 0.0);
  // TODO: prune the k-loop range analytically instead of testing every k;
  // only matters if the s <= 3 guard is ever lifted.
}

void check_guard(int s, bool override_guard) {
  if (s > 3 && !override_guard) {
    throw feasibility_error("net: subspace dimension " + std::to_string(s) +
                            " exceeds the brute-force guard s <= 3 (pass override to force)");
  }
}

Vector to_coords(const std::vector<double>& x, int s) {
  Vector c(s);
  double n2 = 0.0;
  for (int j = 0; j < s; ++j) {
    c(j) = Complex(x[2 * j], x[2 * j + 1]);
    n2 += std::norm(c(j));
  }
  c /= std::sqrt(n2);
  return c;
}

// Canonical global phase: first entry of magnitude > 1e-12 made real positive.
void canonicalize_phase(Vector& c) {
  for (Eigen::Index j = 0; j < c.size(); ++j) {
    double a = std::abs(c(j));
    if (a > 1e-12) {
      c *= std::conj(c(j)) / a;
      return;
    }
  }
}

std::string dedup_key(const Vector& c) {
  std::string key;
  key.reserve(c.size() * 16);
  for (Eigen::Index j = 0; j < c.size(); ++j) {
    auto quantize = [](double v) { return static_cast<long long>(std::llround(v * 1e9)); };
    long long re = quantize(c(j).real()), im = quantize(c(j).imag());
    if (re == 0) re = 0;  // normalize -0
    if (im == 0) im = 0;
    key.append(reinterpret_cast<const char*>(&re), sizeof(re));
    key.append(reinterpret_cast<const char*>(&im), sizeof(im));
  }
  return key;
}

// Entropy of the reduced state of V*c, with a closed-form 2x2 fast path.
double coord_entropy(const Subspace& sub, const Vector& coords) {
  Vector phi = sub.isometry * coords;
  const int da = sub.shape.d_a, db = sub.shape.d_b;
  if (da == 2) {
    // rho = M M^dag for the 2 x d_b coefficient matrix; eigenvalues from
    // trace 1 and det.
    Complex a(0), b(0), c(0);
    for (int j = 0; j < db; ++j) {
      a += phi(j) * std::conj(phi(j));
      b += phi(j) * std::conj(phi(db + j));
      c += phi(db + j) * std::conj(phi(db + j));
    }
    double det = a.real() * c.real() - std::norm(b);
    double disc = std::sqrt(std::max(0.25 - det, 0.0));
    double p = std::clamp(0.5 + disc, 0.0, 1.0), q = std::clamp(0.5 - disc, 0.0, 1.0);
    double h = 0.0;
    if (p > 0) h -= p * std::log2(p);
    if (q > 0) h -= q * std::log2(q);
    return h;
  }
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      phi.data(), da, db);
  Matrix rho = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (int i = 0; i < da; ++i) {
    double p = std::clamp(es.eigenvalues()(i), 0.0, 1.0);
    if (p > 0) h -= p * std::log2(p);
  }
  return h;
}

}  // namespace

long ball_net_size(int s, double epsilon) {
  if (s < 1) throw std::domain_error("ball_net_size: s must be >= 1");
  GridParams p = grid_params(s, epsilon);
  long count = 0;
  enumerate_grid(p, [&](const std::vector<double>&) { ++count; });
  return count;
}

Net build_net(const Subspace& subspace, double epsilon, bool override_guard, long max_points) {
  const int s = subspace.dim();
  check_guard(s, override_guard);
  GridParams p = grid_params(s, epsilon);

  Net net;
  net.epsilon = epsilon;
  net.subspace_dim = s;
  net.grid_size = 0;

  std::unordered_set<std::string> seen;
  enumerate_grid(p, [&](const std::vector<double>& x) {
    ++net.grid_size;
    Vector c = to_coords(x, s);
    canonicalize_phase(c);
    if (!seen.insert(dedup_key(c)).second) return;
    if (static_cast<long>(net.points.size()) >= max_points) {
      throw feasibility_error("build_net: materialized net exceeds max_points = " +
                              std::to_string(max_points));
    }
    net.points.push_back(subspace.embed(c));
    net.coords.push_back(std::move(c));
  });
  return net;
}

double brute_min_entropy(const Subspace& subspace, const BipartiteShape& shape, double epsilon,
                         bool override_guard) {
  if (shape.d_a != subspace.shape.d_a || shape.d_b != subspace.shape.d_b) {
    throw config_error("brute_min_entropy: shape does not match subspace");
  }
  const int s = subspace.dim();
  check_guard(s, override_guard);
  GridParams p = grid_params(s, epsilon);
  double best = std::log2(static_cast<double>(shape.d_a)) + 1.0;
  enumerate_grid(p, [&](const std::vector<double>& x) {
    double h = coord_entropy(subspace, to_coords(x, s));
    if (h < best) best = h;
  });
  return best;
}

double union_tail(const Net& net, const BipartiteShape& shape, double alpha, double c_const) {
  return union_bound(net.size(), tail_rhs(shape, alpha, c_const));
}

double trace_distance(const PureState& a, const PureState& b) {
  double f = state_fidelity(a, b);
  return std::sqrt(std::max(0.0, 1.0 - f));
}

double covering_radius_estimate(const Net& net, const Subspace& subspace, int samples,
                                RngStream& rng) {
  if (net.points.empty()) throw config_error("covering_radius_estimate: empty net");
  double worst = 0.0;
  for (int t = 0; t < samples; ++t) {
    RngStream sub = rng.substream(t);
    PureState coords = haar_state(subspace.dim(), sub);
    PureState state = subspace.embed(coords.amplitudes);
    double best = 2.0;
    for (const PureState& q : net.points) {
      best = std::min(best, trace_distance(state, q));
      if (best == 0.0) break;
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace entlab
