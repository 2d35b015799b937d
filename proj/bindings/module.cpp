#include "entlab/ef_gap.hpp"
#include "entlab/haar.hpp"
#include "entlab/net.hpp"
#include "entlab/protocols.hpp"
#include "entlab/spectra.hpp"
#include "entlab/subspace_opt.hpp"
#include "entlab/tensor.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace entlab;

PYBIND11_MODULE(_core, m) {
  m.doc() = "entlab core: entanglement in random subspaces";

  py::register_exception<config_error>(m, "ConfigError");
  py::register_exception<feasibility_error>(m, "FeasibilityError");

  py::class_<RngStream>(m, "RngStream")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("master_seed"),
           py::arg("stream_index") = 0)
      .def("substream", &RngStream::substream, py::arg("stream_index"))
      .def("uniform", &RngStream::uniform)
      .def("normal", &RngStream::normal);

  py::class_<BipartiteShape>(m, "BipartiteShape")
      .def(py::init<int, int>(), py::arg("d_a"), py::arg("d_b"))
      .def_readonly("d_a", &BipartiteShape::d_a)
      .def_readonly("d_b", &BipartiteShape::d_b)
      .def("total", &BipartiteShape::total);

  py::class_<PureState>(m, "PureState")
      .def(py::init<Vector, std::vector<int>>(), py::arg("amplitudes"), py::arg("dims"))
      .def_readonly("amplitudes", &PureState::amplitudes)
      .def_readonly("dims", &PureState::dims);

  py::class_<DensityOperator>(m, "DensityOperator")
      .def(py::init<Matrix>(), py::arg("matrix"))
      .def_readonly("matrix", &DensityOperator::matrix);

  py::class_<UnitaryMatrix>(m, "UnitaryMatrix")
      .def(py::init<Matrix>(), py::arg("matrix"))
      .def_readonly("matrix", &UnitaryMatrix::matrix);

  py::class_<Subspace>(m, "Subspace")
      .def(py::init<Matrix, BipartiteShape>(), py::arg("isometry"), py::arg("shape"))
      .def_readonly("isometry", &Subspace::isometry)
      .def_readonly("shape", &Subspace::shape)
      .def("embed", &Subspace::embed, py::arg("coords"));

  py::class_<SchmidtDecomposition>(m, "SchmidtDecomposition")
      .def_readonly("spectrum", &SchmidtDecomposition::spectrum)
      .def_readonly("left_basis", &SchmidtDecomposition::left_basis)
      .def_readonly("right_basis", &SchmidtDecomposition::right_basis)
      .def("lambda_max", &SchmidtDecomposition::lambda_max);

  // sampling
  m.def("haar_state", py::overload_cast<const std::vector<int>&, RngStream&>(&haar_state),
        py::arg("dims"), py::arg("rng"));
  m.def("haar_unitary", &haar_unitary, py::arg("dim"), py::arg("rng"));
  m.def("random_subspace", &random_subspace, py::arg("shape"), py::arg("s"), py::arg("rng"));

  // tensor operations
  m.def("entanglement_entropy", &entanglement_entropy, py::arg("state"), py::arg("shape"));
  m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("rho"));
  m.def("schmidt", &schmidt, py::arg("state"), py::arg("shape"));
  m.def("partial_trace",
        py::overload_cast<const PureState&, const BipartiteShape&, Side>(&partial_trace),
        py::arg("state"), py::arg("shape"), py::arg("keep"));
  m.def("state_fidelity", &state_fidelity, py::arg("a"), py::arg("b"));
  py::enum_<Side>(m, "Side").value("A", Side::A).value("B", Side::B);

  // closed forms
  m.def("page_lower_bound", &page_lower_bound, py::arg("shape"));
  m.def("beta", &beta, py::arg("shape"));
  m.def("tail_rhs", &tail_rhs, py::arg("shape"), py::arg("alpha"), py::arg("c_const") = 1.0);
  m.def("subspace_dim_formula", &subspace_dim_formula, py::arg("shape"), py::arg("alpha"),
        py::arg("c_const") = 1.0);
  m.def("mutual_information", &mutual_information, py::arg("rho"), py::arg("shape"));
  m.def("sdc_rates", [](long s, double lambda_max) {
    SdcRates r = sdc_rates(s, lambda_max);
    return py::make_tuple(r.qubits, r.ebits);
  }, py::arg("s"), py::arg("lambda_max"));

  // nets
  m.def("ball_net_size", &ball_net_size, py::arg("s"), py::arg("epsilon"));
  m.def("brute_min_entropy", &brute_min_entropy, py::arg("subspace"), py::arg("shape"),
        py::arg("epsilon"), py::arg("override_guard") = false);
  m.def("trace_distance", &trace_distance, py::arg("a"), py::arg("b"));

  // optimizer
  py::class_<OptimizerReport>(m, "OptimizerReport")
      .def_readonly("min_bits", &OptimizerReport::min_bits)
      .def_readonly("argmin", &OptimizerReport::argmin)
      .def_readonly("argmin_coords", &OptimizerReport::argmin_coords)
      .def_readonly("converged", &OptimizerReport::converged);
  m.def("min_entanglement",
        [](const Subspace& sp, int restarts, int max_iters, double tol, RngStream& rng) {
          return min_entanglement(sp, OptimizerOptions{restarts, max_iters, tol}, rng);
        },
        py::arg("subspace"), py::arg("restarts"), py::arg("max_iters"), py::arg("tol"),
        py::arg("rng"));

  // E_f bracket
  py::class_<EfBracket>(m, "EfBracket")
      .def_readonly("lower_bits", &EfBracket::lower_bits)
      .def_readonly("upper_bits", &EfBracket::upper_bits)
      .def_readonly("mutual_info_bits", &EfBracket::mutual_info_bits);
  m.def("ef_bracket",
        [](const Subspace& sp, int restarts, int max_iters, double tol,
           int decomposition_samples, RngStream& rng) {
          return ef_bracket(sp, OptimizerOptions{restarts, max_iters, tol},
                            decomposition_samples, rng);
        },
        py::arg("subspace"), py::arg("restarts"), py::arg("max_iters"), py::arg("tol"),
        py::arg("decomposition_samples"), py::arg("rng"));

  // protocols
  py::class_<SdcOutcome>(m, "SdcOutcome")
      .def_readonly("fidelity", &SdcOutcome::fidelity)
      .def_readonly("qubits_sent", &SdcOutcome::qubits_sent)
      .def_readonly("ebits_consumed", &SdcOutcome::ebits_consumed)
      .def_readonly("input_entanglement_bits", &SdcOutcome::input_entanglement_bits);
  m.def("sdc_send", &sdc_send, py::arg("state"), py::arg("shape"));
  m.def("sdc_fidelity_formula", &sdc_fidelity_formula, py::arg("state"), py::arg("shape"));

  py::class_<DistillOutcome>(m, "DistillOutcome")
      .def_readonly("conditional_state", &DistillOutcome::conditional_state)
      .def_readonly("outcome_indices", &DistillOutcome::outcome_indices)
      .def_readonly("entanglement_bits", &DistillOutcome::entanglement_bits)
      .def_readonly("outcome_probability", &DistillOutcome::outcome_probability);
  m.def("distill_random_measurement", &distill_random_measurement, py::arg("state"),
        py::arg("keep_i"), py::arg("keep_j"), py::arg("rng"));
}
