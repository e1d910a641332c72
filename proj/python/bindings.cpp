// Copyright 2026 The teleop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "teleop/channel.hpp"
#include "teleop/errors.hpp"
#include "teleop/protocol.hpp"
#include "teleop/qmath.hpp"
#include "teleop/sigma.hpp"

#ifndef TELEOP_VERSION
#define TELEOP_VERSION "0.0.0"
#endif

namespace py = pybind11;
using namespace teleop;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexArray to_numpy(const Matrix& m) {
  ComplexArray out({m.rows(), m.cols()});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) view(r, c) = m(r, c);
  }
  return out;
}

ComplexArray to_numpy(std::span<const Complex> v) {
  ComplexArray out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

Matrix from_numpy(const ComplexArray& a) {
  if (a.ndim() != 2) {
    throw std::invalid_argument("expected a 2-D array");
  }
  const auto rows = static_cast<std::size_t>(a.shape(0));
  const auto cols = static_cast<std::size_t>(a.shape(1));
  return Matrix(rows, cols, std::vector<Complex>(a.data(), a.data() + rows * cols));
}

InputState to_input(const std::vector<Complex>& amps) {
  if (amps.size() != 4) {
    throw std::invalid_argument("input state needs 4 amplitudes");
  }
  return InputState({amps[0], amps[1], amps[2], amps[3]}, tol::kUserNorm);
}

}  // namespace

PYBIND11_MODULE(_teleop, m) {
  m.doc() = "Transformation-operator analysis of four-qubit teleportation channels";
  m.attr("__version__") = TELEOP_VERSION;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NormalizationError>(m, "NormalizationError", PyExc_ValueError);
  py::register_exception<UnknownName>(m, "UnknownName", PyExc_KeyError);
  py::register_exception<BadParameter>(m, "BadParameter", PyExc_ValueError);
  py::register_exception<SingularMatrix>(m, "SingularMatrix", PyExc_ArithmeticError);
  py::register_exception<NormExceeded>(m, "NormExceeded", PyExc_ValueError);

  py::enum_<Verdict>(m, "Verdict")
      .value("Perfect", Verdict::Perfect)
      .value("Probabilistic", Verdict::Probabilistic)
      .value("Impossible", Verdict::Impossible);

  py::class_<Channel>(m, "Channel")
      .def(py::init([](const std::vector<Complex>& amps, std::string name) {
             return Channel::from_amplitudes(amps, std::move(name));
           }),
           py::arg("amplitudes"), py::arg("name") = "")
      .def_property_readonly("name", &Channel::name)
      .def_property_readonly("amplitudes", [](const Channel& c) { return to_numpy(c.amplitudes()); })
      .def("__repr__", [](const Channel& c) { return "<Channel '" + c.name() + "'>"; });

  py::class_<Classification>(m, "Classification")
      .def_readonly("verdict", &Classification::verdict)
      .def_readonly("success_probability", &Classification::success_probability)
      .def_readonly("det_magnitude", &Classification::det_magnitude)
      .def_readonly("singular_values", &Classification::singular_values)
      .def_readonly("borderline", &Classification::borderline);

  py::class_<OutcomeRecord>(m, "OutcomeRecord")
      .def_property_readonly("i", [](const OutcomeRecord& r) { return r.i.value(); })
      .def_property_readonly("j", [](const OutcomeRecord& r) { return r.j.value(); })
      .def_readonly("probability", &OutcomeRecord::probability)
      .def_property_readonly("correction", [](const OutcomeRecord& r) { return std::string(to_string(r.correction)); })
      .def_readonly("fidelity", &OutcomeRecord::fidelity)
      .def_readonly("filter_success_probability", &OutcomeRecord::filter_success_probability)
      .def_readonly("verdict", &OutcomeRecord::verdict)
      .def_property_readonly("bob_state_raw", [](const OutcomeRecord& r) { return to_numpy(r.bob_state_raw); })
      .def_property_readonly("bob_state_corrected", [](const OutcomeRecord& r) -> py::object {
        if (!r.bob_state_corrected) return py::none();
        return to_numpy(*r.bob_state_corrected);
      });

  py::class_<RunStats>(m, "RunStats")
      .def_readonly("trials", &RunStats::trials)
      .def_readonly("seed", &RunStats::seed)
      .def_readonly("outcome_counts", &RunStats::outcome_counts)
      .def_readonly("successes", &RunStats::successes)
      .def_readonly("empirical_success_rate", &RunStats::empirical_success_rate)
      .def_readonly("mean_fidelity_on_success", &RunStats::mean_fidelity_on_success);

  m.def("catalog", py::overload_cast<std::string_view>(&catalog), py::arg("name"),
        "Builtin channel, e.g. 'yeo-chua' or 'partial-pair:theta=0.5'");
  m.def("parse_channel", &parse_channel, py::arg("text"), py::arg("normalize") = false, py::arg("name") = "");
  m.def("serialize_channel", &serialize_channel);
  m.def("random_channel", &random_channel, py::arg("seed"));
  m.def("random_state", [](std::uint64_t seed) { return to_numpy(InputState::random(seed).amps()); },
        py::arg("seed"));

  m.def("bell_state", [](int i) { return to_numpy(bell_state(BellIndex(i)).amps()); }, py::arg("i"));
  m.def("g_state", [](int i, int j) { return to_numpy(g_state(BellIndex(i), BellIndex(j)).amps()); },
        py::arg("i"), py::arg("j"));

  m.def("extract_sigma",
        [](const Channel& c, int i, int j) { return to_numpy(extract_sigma(c, BellIndex(i), BellIndex(j)).m); },
        py::arg("channel"), py::arg("i") = 1, py::arg("j") = 1);
  m.def("extract_all", [](const Channel& c) {
    py::dict out;
    for (const TransformOp& op : extract_all(c)) {
      out[py::make_tuple(op.i.value(), op.j.value())] = to_numpy(op.m);
    }
    return out;
  });
  m.def("verify_pauli_relation", [](const Channel& c) { return verify_pauli_relation(c).defect; });
  m.def("classify", &classify, py::arg("channel"), py::arg("tol") = tol::kClassify);
  m.def(
      "analyze",
      [](const Channel& c, double tol) {
        const AnalysisReport r = analyze(c, tol);
        py::dict out;
        out["channel"] = r.channel_name;
        out["sigma11"] = to_numpy(r.sigma11);
        out["classification"] = r.classification;
        out["completeness_defect"] = r.completeness_defect;
        out["pauli_relation_defect"] = r.pauli_relation_defect;
        return out;
      },
      py::arg("channel"), py::arg("tol") = tol::kClassify);

  m.def("determinant", [](const ComplexArray& a) { return determinant(from_numpy(a)); });
  m.def("singular_values", [](const ComplexArray& a) { return singular_values(from_numpy(a)); });
  m.def("inverse", [](const ComplexArray& a) { return to_numpy(inverse(from_numpy(a))); });
  m.def("is_unitary", [](const ComplexArray& a, double tol) { return is_unitary(from_numpy(a), tol); },
        py::arg("m"), py::arg("tol") = tol::kIdentity);
  m.def("dilation_unitary", [](const ComplexArray& a) { return to_numpy(dilation_unitary(from_numpy(a))); });

  m.def(
      "outcome_probabilities",
      [](const std::vector<Complex>& chi, const Channel& c) { return outcome_probabilities(to_input(chi), c); },
      py::arg("state"), py::arg("channel"));
  m.def(
      "run_deterministic",
      [](const std::vector<Complex>& chi, const Channel& c, double tol) {
        return run_deterministic(to_input(chi), c, tol);
      },
      py::arg("state"), py::arg("channel"), py::arg("tol") = tol::kClassify);
  m.def(
      "run_sampled",
      [](const std::vector<Complex>& chi, const Channel& c, std::uint64_t seed, std::uint64_t trials) {
        return run_sampled(to_input(chi), c, seed, trials);
      },
      py::arg("state"), py::arg("channel"), py::arg("seed"), py::arg("trials"));
  m.def(
      "fidelity",
      [](const std::vector<Complex>& a, const std::vector<Complex>& b) {
        if (a.size() != 4 || b.size() != 4) throw std::invalid_argument("fidelity expects 4 amplitudes each");
        return fidelity(std::span<const Complex, 4>(a.data(), 4), std::span<const Complex, 4>(b.data(), 4));
      },
      py::arg("a"), py::arg("b"));
}
