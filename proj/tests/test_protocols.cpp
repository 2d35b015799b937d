#include "entlab/protocols.hpp"

#include "entlab/spectra.hpp"
#include "entlab/tensor.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace entlab;
using namespace entlab::testing;

namespace {

UnitaryMatrix hadamard() {
  Matrix h(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  return UnitaryMatrix(h);
}

UnitaryMatrix identity2() { return UnitaryMatrix(Matrix::Identity(2, 2)); }

}  // namespace

TEST_SUITE("protocols") {

TEST_CASE("sdc on a maximally entangled input is perfect") {
  SdcOutcome out = sdc_send(bell_state(), BipartiteShape(2, 2));
  CHECK(std::abs(out.fidelity - 1.0) < 1e-12);
  CHECK(std::abs(out.qubits_sent - 1.0) < 1e-12);
  CHECK(std::abs(out.ebits_consumed - 1.0) < 1e-12);
  CHECK(std::abs(out.input_entanglement_bits - 1.0) < 1e-10);
}

TEST_CASE("sdc on a product input has fidelity 1/d_a") {
  PureState prod = make_state({1, 0, 0, 0}, {2, 2});
  SdcOutcome out = sdc_send(prod, BipartiteShape(2, 2));
  CHECK(std::abs(out.fidelity - 0.5) < 1e-12);
  CHECK(out.input_entanglement_bits < 1e-10);
}

TEST_CASE("explicit evolution matches the closed-form fidelity") {
  for (auto [da, db] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 5}}) {
    BipartiteShape shape(da, db);
    for (int t = 0; t < 20; ++t) {
      RngStream rng(60 + da * 10 + db, t);
      PureState psi = haar_state({da, db}, rng);
      SdcOutcome out = sdc_send(psi, shape);
      CHECK(std::abs(out.fidelity - sdc_fidelity_formula(psi, shape)) < 1e-10);
      CHECK(out.fidelity >= 1.0 / da - 1e-12);
      CHECK(out.fidelity <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("fidelity is invariant under local basis changes") {
  BipartiteShape shape(3, 4);
  RngStream rng(61, 0);
  PureState psi = haar_state({3, 4}, rng);
  double f = sdc_fidelity_formula(psi, shape);
  RngStream brng(61, 1);
  auto bases = random_local_bases({3, 4}, brng);
  Matrix m = bases[0].matrix * as_matrix(psi, shape) * bases[1].matrix.transpose();
  Vector amps(12);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) amps(i * 4 + j) = m(i, j);
  PureState rotated(amps, {3, 4});
  CHECK(std::abs(sdc_fidelity_formula(rotated, shape) - f) < 1e-10);
}

TEST_CASE("sdc_rate_check uses the worst lambda over the ensemble") {
  std::vector<PureState> states = {bell_state(), make_state({1, 0, 0, 0}, {2, 2})};
  SdcRateCheck rc = sdc_rate_check(2, states, BipartiteShape(2, 2));
  CHECK(rc.s == 2);
  CHECK(std::abs(rc.lambda_max - 1.0) < 1e-12);
  SdcRates rates = sdc_rates(2, rc.lambda_max);
  CHECK(std::abs(rc.qubits - rates.qubits) < 1e-12);
  CHECK(std::abs(rc.ebits - rates.ebits) < 1e-12);

  std::vector<PureState> bell_only = {bell_state()};
  SdcRateCheck rc2 = sdc_rate_check(2, bell_only, BipartiteShape(2, 2));
  CHECK(std::abs(rc2.lambda_max - 0.5) < 1e-12);
  CHECK(std::abs(rc2.qubits) < 1e-10);
  CHECK(std::abs(rc2.ebits - 1.0) < 1e-10);
}

TEST_CASE("GHZ distillation: computational basis yields a product pair") {
  RngStream rng(62, 0);
  DistillOutcome out = distill_with_bases(ghz_state(3), 0, 1, {identity2()}, rng);
  CHECK(out.entanglement_bits < 1e-10);
  CHECK(std::abs(out.outcome_probability - 0.5) < 1e-12);
  REQUIRE(out.outcome_indices.size() == 1);
}

TEST_CASE("GHZ distillation: Hadamard basis yields one ebit") {
  RngStream rng(63, 0);
  DistillOutcome out = distill_with_bases(ghz_state(3), 0, 1, {hadamard()}, rng);
  CHECK(std::abs(out.entanglement_bits - 1.0) < 1e-10);
  CHECK(std::abs(out.outcome_probability - 0.5) < 1e-12);
  CHECK(out.conditional_state.dims == std::vector<int>{2, 2});
}

TEST_CASE("enumerate_distill covers all outcomes with unit total probability") {
  auto outcomes = enumerate_distill(ghz_state(4), 0, 1, {hadamard(), hadamard()});
  REQUIRE(outcomes.size() == 4);
  double total = 0.0;
  for (const DistillOutcome& o : outcomes) {
    total += o.outcome_probability;
    CHECK(std::abs(o.entanglement_bits - 1.0) < 1e-10);  // GHZ in X basis distills
  }
  CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("sampled outcome distribution matches enumeration") {
  RngStream brng(64, 0);
  auto bases = random_local_bases({2}, brng);
  auto enumerated = enumerate_distill(ghz_state(3), 0, 1, bases);
  REQUIRE(enumerated.size() == 2);
  long hits0 = 0;
  const long n = 20'000;
  for (long t = 0; t < n; ++t) {
    RngStream rng(65, t);
    DistillOutcome o = distill_with_bases(ghz_state(3), 0, 1, bases, rng);
    if (o.outcome_indices[0] == 0) ++hits0;
  }
  double p0 = enumerated[0].outcome_probability;
  CHECK(std::abs(double(hits0) / n - p0) < 0.02);
}

TEST_CASE("distill_random_measurement is seed-deterministic") {
  RngStream a(66, 3), b(66, 3);
  DistillOutcome oa = distill_random_measurement(ghz_state(3), 0, 2, a);
  DistillOutcome ob = distill_random_measurement(ghz_state(3), 0, 2, b);
  CHECK(oa.outcome_indices == ob.outcome_indices);
  CHECK((oa.conditional_state.amplitudes - ob.conditional_state.amplitudes).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("bipartite cuts of GHZ are all one bit") {
  auto cuts = bipartite_cuts_scan(ghz_state(4));
  REQUIRE(cuts.size() == 7);  // 2^(4-1) - 1 cuts, side containing factor 0
  for (const CutEntropy& c : cuts) {
    REQUIRE(!c.cut.empty());
    CHECK(c.cut[0] == 0);
    CHECK(std::abs(c.entropy_bits - 1.0) < 1e-10);
  }
}

TEST_CASE("bipartite cuts of a product state vanish") {
  PureState prod = make_state({1, 0, 0, 0, 0, 0, 0, 0}, {2, 2, 2});
  for (const CutEntropy& c : bipartite_cuts_scan(prod)) CHECK(c.entropy_bits < 1e-10);
}

TEST_CASE("reduced_ef_probe brackets are ordered and in range") {
  RngStream rng(67, 0);
  auto rows = reduced_ef_probe(3, 2, 2, 4, OptimizerOptions{3, 500, 1e-6}, 4, rng);
  REQUIRE(rows.size() == 4);
  for (const EfProbeRow& r : rows) {
    CHECK(r.range_dim >= 1);
    CHECK(r.range_dim <= 2);  // rank of a two-qubit marginal of a 3-qubit pure state
    CHECK(r.lower_bits >= -1e-10);
    CHECK(r.lower_bits <= r.upper_bits + 1e-8);
    CHECK(r.mutual_info_bits >= -1e-10);
  }
  CHECK_THROWS_AS(reduced_ef_probe(3, 2, 1, 1, OptimizerOptions{1, 10, 1e-6}, 1, rng),
                  std::domain_error);
  CHECK_THROWS_AS(reduced_ef_probe(3, 2, 3, 1, OptimizerOptions{1, 10, 1e-6}, 1, rng),
                  std::domain_error);
}

}  // TEST_SUITE
