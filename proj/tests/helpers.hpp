#pragma once

#include "entlab/types.hpp"

#include <cmath>
#include <initializer_list>

namespace entlab::testing {

inline PureState make_state(std::initializer_list<Complex> amps, std::vector<int> dims) {
  Vector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (Complex a : amps) v(i++) = a;
  v /= v.norm();
  return PureState(std::move(v), std::move(dims));
}

inline PureState bell_state() {
  return make_state({1, 0, 0, 1}, {2, 2});
}

inline PureState singlet_state() {
  return make_state({0, 1, -1, 0}, {2, 2});
}

inline PureState ghz_state(int n) {
  Vector v = Vector::Zero(1L << n);
  v(0) = 1.0 / std::sqrt(2.0);
  v((1L << n) - 1) = 1.0 / std::sqrt(2.0);
  return PureState(std::move(v), std::vector<int>(n, 2));
}

}  // namespace entlab::testing
