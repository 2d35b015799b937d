#include "entlab/tensor.hpp"

#include "entlab/haar.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace entlab;
using namespace entlab::testing;

TEST_SUITE("tensor") {

TEST_CASE("partial trace of Bell state is maximally mixed") {
  DensityOperator rho = partial_trace(bell_state(), BipartiteShape(2, 2), Side::A);
  CHECK(std::abs(rho.matrix(0, 0).real() - 0.5) < 1e-12);
  CHECK(std::abs(rho.matrix(1, 1).real() - 0.5) < 1e-12);
  CHECK(std::abs(rho.matrix(0, 1)) < 1e-12);
}

TEST_CASE("partial trace of product state |01> keeps |0><0|") {
  PureState s = make_state({0, 1, 0, 0}, {2, 2});
  DensityOperator rho = partial_trace(s, BipartiteShape(2, 2), Side::A);
  CHECK(std::abs(rho.matrix(0, 0).real() - 1.0) < 1e-12);
  CHECK(std::abs(rho.matrix(1, 1)) < 1e-12);
}

TEST_CASE("partial trace with unequal dimensions") {
  // (|0,0> + |1,2>)/sqrt(2) on 2x3
  PureState s = make_state({1, 0, 0, 0, 0, 1}, {2, 3});
  DensityOperator rho_a = partial_trace(s, BipartiteShape(2, 3), Side::A);
  CHECK(std::abs(rho_a.matrix(0, 0).real() - 0.5) < 1e-12);
  CHECK(std::abs(rho_a.matrix(1, 1).real() - 0.5) < 1e-12);
  DensityOperator rho_b = partial_trace(s, BipartiteShape(2, 3), Side::B);
  CHECK(rho_b.dim() == 3);
  CHECK(std::abs(von_neumann_entropy(rho_a) - von_neumann_entropy(rho_b)) < 1e-8);
}

TEST_CASE("partial trace rejects dimension mismatch") {
  CHECK_THROWS_AS(partial_trace(bell_state(), BipartiteShape(2, 3), Side::A), config_error);
}

TEST_CASE("schmidt spectrum examples") {
  CHECK(std::abs(schmidt(bell_state(), BipartiteShape(2, 2)).spectrum(0) - 0.5) < 1e-12);
  SchmidtDecomposition sd = schmidt(make_state({1, 0, 0, 0}, {2, 2}), BipartiteShape(2, 2));
  CHECK(std::abs(sd.spectrum(0) - 1.0) < 1e-12);
  CHECK(std::abs(sd.spectrum(1)) < 1e-12);
  CHECK(sd.rank() == 1);
}

TEST_CASE("schmidt reconstruction reproduces random states") {
  RngStream rng(11, 0);
  for (int t = 0; t < 20; ++t) {
    RngStream sub = rng.substream(t);
    int da = 2 + (t % 3), db = da + (t % 4);
    PureState s = haar_state({da, db}, sub);
    BipartiteShape shape(da, db);
    SchmidtDecomposition sd = schmidt(s, shape);
    CHECK(std::abs(sd.spectrum.sum() - 1.0) < 1e-10);
    for (Eigen::Index i = 1; i < sd.spectrum.size(); ++i) CHECK(sd.spectrum(i) <= sd.spectrum(i - 1) + 1e-12);
    Vector rebuilt = Vector::Zero(da * db);
    for (Eigen::Index k = 0; k < sd.spectrum.size(); ++k) {
      double c = std::sqrt(std::max(sd.spectrum(k), 0.0));
      for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j)
          rebuilt(i * db + j) += c * sd.left_basis(i, k) * sd.right_basis(j, k);
    }
    rebuilt /= rebuilt.norm();
    PureState r(rebuilt, {da, db});
    CHECK(state_fidelity(r, s) >= 1.0 - 1e-10);
  }
}

TEST_CASE("von Neumann entropy examples") {
  Matrix mm = Matrix::Identity(4, 4) / 4.0;
  CHECK(std::abs(von_neumann_entropy(DensityOperator(mm)) - 2.0) < 1e-12);

  DensityOperator pure = partial_trace(make_state({0, 1, 0, 0}, {2, 2}), BipartiteShape(2, 2), Side::A);
  CHECK(von_neumann_entropy(pure) < 1e-12);

  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 0.75;
  d(1, 1) = 0.25;
  CHECK(std::abs(von_neumann_entropy(DensityOperator(d)) - 0.811278) < 1e-6);
}

TEST_CASE("entropy rejects non-PSD operators beyond tolerance") {
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 0) = 1.1;
  bad(1, 1) = -0.1;
  CHECK_THROWS_AS(von_neumann_entropy(DensityOperator(bad)), std::domain_error);
}

TEST_CASE("entanglement entropy examples and bounds") {
  BipartiteShape shape(2, 2);
  CHECK(std::abs(entanglement_entropy(bell_state(), shape) - 1.0) < 1e-10);
  CHECK(entanglement_entropy(make_state({0, 0, 1, 0}, {2, 2}), shape) < 1e-10);

  RngStream rng(3, 0);
  for (int t = 0; t < 30; ++t) {
    RngStream sub = rng.substream(t);
    PureState s = haar_state({3, 5}, sub);
    double e = entanglement_entropy(s, BipartiteShape(3, 5));
    CHECK(e >= 0.0);
    CHECK(e <= std::log2(3.0) + 1e-10);
  }
}

TEST_CASE("mean Haar entanglement for (2,2) matches the high-sample oracle") {
  // Oracle value 0.4808 bits = 1/(3 ln 2), cross-checked by direct Monte Carlo.
  RngStream rng(2024, 0);
  const long n = 1'000'000;
  double sum = 0.0;
  BipartiteShape shape(2, 2);
  for (long t = 0; t < n; ++t) {
    RngStream sub = rng.substream(t);
    sum += entanglement_entropy(haar_state({2, 2}, sub), shape);
  }
  CHECK(std::abs(sum / n - 0.4808) < 0.001);
}

TEST_CASE("reduced state examples") {
  DensityOperator rho = reduced_state(ghz_state(3), {0});
  CHECK(std::abs(rho.matrix(0, 0).real() - 0.5) < 1e-12);
  CHECK(std::abs(rho.matrix(0, 1)) < 1e-12);

  PureState prod = make_state({1, 0, 0, 0, 0, 0, 0, 0}, {2, 2, 2});
  DensityOperator rho01 = reduced_state(prod, {0, 1});
  CHECK(std::abs(rho01.matrix(0, 0).real() - 1.0) < 1e-12);

  CHECK_THROWS_AS(reduced_state(prod, {}), std::domain_error);
  CHECK_THROWS_AS(reduced_state(prod, {0, 1, 2}), std::domain_error);
}

TEST_CASE("entropy of a subset equals entropy of its complement") {
  RngStream rng(5, 0);
  for (int t = 0; t < 10; ++t) {
    RngStream sub = rng.substream(t);
    PureState s = haar_state({2, 3, 2}, sub);
    double e1 = von_neumann_entropy(reduced_state(s, {0, 2}));
    double e2 = von_neumann_entropy(reduced_state(s, {1}));
    CHECK(std::abs(e1 - e2) < 1e-8);
  }
}

TEST_CASE("state fidelity") {
  CHECK(std::abs(state_fidelity(bell_state(), bell_state()) - 1.0) < 1e-12);
  PureState e0 = make_state({1, 0, 0, 0}, {2, 2});
  PureState e1 = make_state({0, 1, 0, 0}, {2, 2});
  CHECK(state_fidelity(e0, e1) < 1e-12);
  CHECK(std::abs(state_fidelity(bell_state(), e0) - 0.5) < 1e-12);
  // Phase invariance.
  Vector v = bell_state().amplitudes * Complex(std::cos(1.3), std::sin(1.3));
  CHECK(std::abs(state_fidelity(PureState(v, {2, 2}), bell_state()) - 1.0) < 1e-12);
}

TEST_CASE("PureState validation") {
  Vector v(3);
  v << 1, 1, 1;
  CHECK_THROWS_AS(PureState(v, {3}), config_error);          // not normalized
  Vector u(4);
  u << 1, 0, 0, 0;
  CHECK_THROWS_AS(PureState(u, {3}), config_error);          // dims mismatch
}

}  // TEST_SUITE
