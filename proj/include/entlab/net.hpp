#pragma once

#include "entlab/haar.hpp"
#include "entlab/types.hpp"

namespace entlab {

/// epsilon-net of the pure states of a subspace, covering in trace distance
/// between pure-state projectors (phase invariant).
///
/// Construction: cubic lattice of spacing epsilon/sqrt(2s) on the real
/// 2s-dimensional unit ball of the coordinate space, points normalized to the
/// sphere and embedded. grid_size is the ball-lattice count, the quantity with
/// the (C/epsilon)^(2s) scaling; points holds the distinct states after
/// global-phase dedup (a single state when s = 1).
struct Net {
  std::vector<PureState> points;
  std::vector<Vector> coords;  // matching subspace coordinates, unit norm
  double epsilon;
  int subspace_dim;
  long grid_size;

  long size() const { return static_cast<long>(points.size()); }
};

/// Ball-lattice count for given (s, epsilon), without materializing anything.
long ball_net_size(int s, double epsilon);

/// Feasibility guard: s <= 3 unless overridden; materialized points are
/// additionally capped by max_points.
Net build_net(const Subspace& subspace, double epsilon, bool override_guard = false,
              long max_points = 2'000'000);

/// Minimum entanglement entropy over the net points (streamed, nothing
/// materialized). Upper-bounds the true subspace minimum; the declared slack
/// band is +-2*epsilon*log2(d_a).
double brute_min_entropy(const Subspace& subspace, const BipartiteShape& shape, double epsilon,
                         bool override_guard = false);

/// union_bound(|net|, tail_rhs(shape, alpha, c_const)).
double union_tail(const Net& net, const BipartiteShape& shape, double alpha, double c_const);

/// Trace distance sqrt(1 - |<a|b>|^2) between pure states.
double trace_distance(const PureState& a, const PureState& b);

/// Max over `samples` Haar subspace states of the distance to the nearest net
/// point; an empirical check of the covering radius.
double covering_radius_estimate(const Net& net, const Subspace& subspace, int samples,
                                RngStream& rng);

}  // namespace entlab
