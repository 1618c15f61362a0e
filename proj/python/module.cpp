#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "telenoise/canonical.hpp"
#include "telenoise/channels.hpp"
#include "telenoise/costopt.hpp"
#include "telenoise/fidelity.hpp"
#include "telenoise/oracle.hpp"
#include "telenoise/qstate.hpp"
#include "telenoise/statespec.hpp"
#include "telenoise/strategy.hpp"

namespace py = pybind11;
using namespace telenoise;

PYBIND11_MODULE(telenoise, m) {
  m.doc() =
      "two-qubit teleportation fidelity and deviation under noisy classical "
      "communication";

  py::class_<TwoQubitState>(m, "TwoQubitState")
      .def_static("from_matrix", &TwoQubitState::from_matrix, py::arg("rho"))
      .def("matrix",
           [](const TwoQubitState& s) { return Eigen::Matrix4cd(s.matrix()); });

  py::class_<InputQubit>(m, "InputQubit")
      .def(py::init<const Eigen::Vector3d&>(), py::arg("bloch"))
      .def("bloch", [](const InputQubit& q) { return q.bloch(); })
      .def("density", &InputQubit::density);

  py::class_<PauliDecomposition>(m, "PauliDecomposition")
      .def_readonly("R", &PauliDecomposition::R)
      .def_readonly("S", &PauliDecomposition::S)
      .def_readonly("T", &PauliDecomposition::T);

  m.def("pauli_decompose", &pauli_decompose);
  m.def("reconstruct", &reconstruct);
  m.def("concurrence", &concurrence);
  m.def("bell_state", &bell_state);
  m.def("bell_vector", &bell_vector, py::arg("k"));
  m.def("pure_state", &pure_state, py::arg("a"));
  m.def("werner_state", &werner_state, py::arg("eps"));
  m.def("tdiag_state", &tdiag_state, py::arg("t"),
        py::arg("r") = Eigen::Vector3d(Eigen::Vector3d::Zero()),
        py::arg("s") = Eigen::Vector3d(Eigen::Vector3d::Zero()));

  py::enum_<DetSign>(m, "DetSign")
      .value("Negative", DetSign::Negative)
      .value("Zero", DetSign::Zero)
      .value("Positive", DetSign::Positive);

  py::class_<CanonicalForm>(m, "CanonicalForm")
      .def_readonly("tmag", &CanonicalForm::tmag)
      .def_readonly("lambda_", &CanonicalForm::lambda)
      .def_readonly("det_sign", &CanonicalForm::detSign)
      .def_readonly("r", &CanonicalForm::r)
      .def_readonly("s", &CanonicalForm::s)
      .def("axis_correlation", &CanonicalForm::axis_correlation);

  py::class_<LocalRotations>(m, "LocalRotations")
      .def_readonly("OA", &LocalRotations::OA)
      .def_readonly("OB", &LocalRotations::OB);

  py::class_<CanonicalizeResult>(m, "CanonicalizeResult")
      .def_readonly("form", &CanonicalizeResult::form)
      .def_readonly("rotations", &CanonicalizeResult::rotations);

  m.def("canonicalize",
        py::overload_cast<const TwoQubitState&>(&canonicalize));
  m.def("make_canonical_form", &make_canonical_form, py::arg("tmag_desc"),
        py::arg("det_sign"),
        py::arg("r") = Eigen::Vector3d(Eigen::Vector3d::Zero()),
        py::arg("s") = Eigen::Vector3d(Eigen::Vector3d::Zero()));
  m.def("canonical_state", &canonical_state);

  py::class_<NoiseModelI>(m, "NoiseModelI")
      .def(py::init<double, double, double, double>(), py::arg("p0"),
           py::arg("p1"), py::arg("p2"), py::arg("p3"))
      .def_property_readonly("p", [](const NoiseModelI& ch) {
        return std::vector<double>(ch.p, ch.p + 4);
      });

  py::class_<NoiseModelII>(m, "NoiseModelII")
      .def(py::init<double, double>(), py::arg("eta"), py::arg("eta_prime"))
      .def_readonly("eta", &NoiseModelII::eta)
      .def_readonly("eta_prime", &NoiseModelII::etaPrime);

  m.def("mutual_information",
        py::overload_cast<const NoiseModelI&>(&mutual_information));
  m.def("mutual_information_pair",
        py::overload_cast<const NoiseModelII&>(&mutual_information));
  m.def("to_model_i", &to_model_i);

  py::class_<CorrectionStrategy>(m, "CorrectionStrategy")
      .def(py::init([](const std::array<int, 4>& pauli) {
             return CorrectionStrategy{pauli};
           }),
           py::arg("pauli"))
      .def_readonly("pauli", &CorrectionStrategy::pauli);

  m.def("standard_strategy", &standard_strategy);
  m.def("regime_strategy", &regime_strategy);

  py::class_<StrategySearch>(m, "StrategySearch")
      .def_readonly("best", &StrategySearch::best)
      .def_readonly("best_fidelity", &StrategySearch::bestFidelity)
      .def_readonly("values", &StrategySearch::values);

  m.def("search_all_strategies", &search_all_strategies);
  m.def("regime_fidelity", &regime_fidelity);

  py::class_<ChiMatrix>(m, "ChiMatrix").def_readonly("diag", &ChiMatrix::diag);

  m.def("chi_matrix",
        py::overload_cast<const CanonicalForm&, const NoiseModelI&,
                          const CorrectionStrategy&>(&chi_matrix));
  m.def("chi_matrix_ii",
        py::overload_cast<const CanonicalForm&, const NoiseModelII&,
                          const CorrectionStrategy&>(&chi_matrix));
  m.def("average_fidelity",
        py::overload_cast<const CanonicalForm&, const NoiseModelI&,
                          const CorrectionStrategy&>(&average_fidelity));
  m.def("average_fidelity_ii",
        py::overload_cast<const CanonicalForm&, const NoiseModelII&,
                          const CorrectionStrategy&>(&average_fidelity));
  m.def("fidelity_deviation",
        py::overload_cast<const CanonicalForm&, const NoiseModelI&,
                          const CorrectionStrategy&>(&fidelity_deviation));
  m.def("fidelity_deviation_ii",
        py::overload_cast<const CanonicalForm&, const NoiseModelII&,
                          const CorrectionStrategy&>(&fidelity_deviation));

  py::class_<NonClassicality>(m, "NonClassicality")
      .def_readonly("non_classical", &NonClassicality::nonClassical)
      .def_readonly("f_noise", &NonClassicality::fNoise);

  m.def("nonclassical_condition",
        py::overload_cast<const CanonicalForm&, const NoiseModelI&>(
            &nonclassical_condition));
  m.def("nonclassical_condition_ii",
        py::overload_cast<const CanonicalForm&, const NoiseModelII&>(
            &nonclassical_condition));
  m.def("zero_deviation_residual",
        py::overload_cast<const CanonicalForm&, const NoiseModelI&>(
            &zero_deviation_residual));
  m.def("zero_deviation_residual_ii",
        py::overload_cast<const CanonicalForm&, const NoiseModelII&>(
            &zero_deviation_residual));

  py::class_<DispersionFreeResult>(m, "DispersionFreeResult")
      .def_readonly("channel", &DispersionFreeResult::channel)
      .def_readonly("fidelity", &DispersionFreeResult::fidelity)
      .def_readonly("non_classical", &DispersionFreeResult::nonClassical);

  m.def("find_dispersion_free_channel", &find_dispersion_free_channel,
        py::arg("form"), py::arg("fixed"));

  py::class_<FormulaValues>(m, "FormulaValues")
      .def_readonly("fidelity", &FormulaValues::fidelity)
      .def_readonly("deviation", &FormulaValues::deviation);

  m.def("werner_formulas",
        py::overload_cast<double, const NoiseModelI&>(&werner_formulas));
  m.def("werner_formulas_ii",
        py::overload_cast<double, const NoiseModelII&>(&werner_formulas));
  m.def("pure_state_formulas",
        py::overload_cast<double, const NoiseModelI&>(&pure_state_formulas));
  m.def("pure_state_formulas_ii",
        py::overload_cast<double, const NoiseModelII&>(&pure_state_formulas));

  py::class_<FidelityReport>(m, "FidelityReport")
      .def_readonly("fidelity", &FidelityReport::fidelity)
      .def_readonly("deviation", &FidelityReport::deviation)
      .def_readonly("non_classical", &FidelityReport::nonClassical)
      .def_readonly("dispersion_free", &FidelityReport::dispersionFree)
      .def_readonly("f_noise", &FidelityReport::fNoise)
      .def_readonly("strategy_used", &FidelityReport::strategyUsed);

  m.def("make_report", &make_report, py::arg("form"), py::arg("channel"),
        py::arg("strategy"), py::arg("strategy_name"));

  py::class_<ProtocolOutcome>(m, "ProtocolOutcome")
      .def_readonly("probability", &ProtocolOutcome::probability)
      .def_readonly("post_state", &ProtocolOutcome::postState)
      .def_readonly("zero_probability", &ProtocolOutcome::zeroProbability);

  m.def("bell_measure", &bell_measure);
  m.def("per_input_fidelity", &per_input_fidelity);

  py::class_<ExactAverage>(m, "ExactAverage")
      .def_readonly("fidelity", &ExactAverage::fidelity)
      .def_readonly("deviation", &ExactAverage::deviation);

  m.def("exact_average", &exact_average);

  py::class_<RunStatistics>(m, "RunStatistics")
      .def_readonly("mean_f", &RunStatistics::meanF)
      .def_readonly("delta", &RunStatistics::delta)
      .def_readonly("std_error", &RunStatistics::stdError)
      .def_readonly("samples", &RunStatistics::samples);

  m.def("haar_average", &haar_average, py::arg("resource"), py::arg("channel"),
        py::arg("strategy"), py::arg("n"), py::arg("seed"),
        py::arg("threads") = 0);
  m.def("haar_average_sampled", &haar_average_sampled, py::arg("resource"),
        py::arg("channel"), py::arg("strategy"), py::arg("n"),
        py::arg("seed"));

  py::enum_<CostStatus>(m, "CostStatus")
      .value("Solved", CostStatus::Solved)
      .value("Infeasible", CostStatus::Infeasible)
      .value("Boundary", CostStatus::Boundary);

  py::class_<CostSolutionI>(m, "CostSolutionI")
      .def_readonly("status", &CostSolutionI::status)
      .def_readonly("channel", &CostSolutionI::channel)
      .def_readonly("cost", &CostSolutionI::cost)
      .def_readonly("constraint_residual", &CostSolutionI::constraintResidual)
      .def_readonly("stationary_residuals",
                    &CostSolutionI::stationaryResiduals);

  py::class_<CostSolutionII>(m, "CostSolutionII")
      .def_readonly("status", &CostSolutionII::status)
      .def_readonly("channel", &CostSolutionII::channel)
      .def_readonly("cost", &CostSolutionII::cost)
      .def_readonly("constraint_residual", &CostSolutionII::constraintResidual)
      .def_readonly("stationary_residuals",
                    &CostSolutionII::stationaryResiduals);

  m.def("min_cost_model_i", &min_cost_model_i);
  m.def("min_cost_model_ii", &min_cost_model_ii);
  m.def("stationary_residuals",
        py::overload_cast<const CanonicalForm&, const NoiseModelI&>(
            &stationary_residuals));
  m.def("stationary_residuals_ii",
        py::overload_cast<const CanonicalForm&, const NoiseModelII&>(
            &stationary_residuals));
  m.def("grid_min_cost_model_i", &grid_min_cost_model_i);
  m.def("grid_min_cost_model_ii", &grid_min_cost_model_ii);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("x", &SweepRow::x)
      .def_readonly("fidelity", &SweepRow::fidelity)
      .def_readonly("deviation", &SweepRow::deviation)
      .def_readonly("non_classical", &SweepRow::nonClassical);

  m.def("run_sweep_text", [](const std::string& text) {
    return run_sweep(parse_sweep_spec(parse_spec_text(text, "<text>")));
  });
}
