// Copyright 2026 The qmcforge Authors
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

#include "qmcforge/bench.hpp"
#include "qmcforge/circuit_text.hpp"
#include "qmcforge/emitter.hpp"
#include "qmcforge/error.hpp"
#include "qmcforge/gates.hpp"
#include "qmcforge/normalizer.hpp"
#include "qmcforge/qmc.hpp"
#include "qmcforge/semantics.hpp"

namespace py = pybind11;
using namespace qmcforge;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexArray to_numpy(const CMatrix& m) {
    ComplexArray out({m.rows(), m.cols()});
    auto e = m.entries();
    std::copy(e.begin(), e.end(), out.mutable_data());
    return out;
}

ComplexArray to_numpy(const KetVector& k) {
    ComplexArray out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(k.dim())});
    Complex* dst = out.mutable_data();
    for (std::size_t i = 0; i < k.dim(); ++i) dst[i] = k[i];
    return out;
}

CMatrix to_matrix(const ComplexArray& a) {
    if (a.ndim() != 2) throw Error(ErrorCode::DimensionMismatch, "expected a 2-d array");
    return CMatrix(a.shape(0), a.shape(1), std::vector<Complex>(a.data(), a.data() + a.size()));
}

KetVector to_ket(const ComplexArray& a) {
    if (a.ndim() != 1) throw Error(ErrorCode::DimensionMismatch, "expected a 1-d array");
    return KetVector(std::vector<Complex>(a.data(), a.data() + a.size()));
}

// Accept either a basis string such as "01" or an amplitude array.
KetVector ket_from(const py::object& state) {
    if (py::isinstance<py::str>(state)) return KetVector::from_bits(state.cast<std::string>());
    return to_ket(state.cast<ComplexArray>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum circuit to quantum Markov chain compiler";

    auto error = py::register_exception<Error>(m, "QmcforgeError", PyExc_ValueError);
    (void)error;

    py::enum_<SwapStrategy>(m, "SwapStrategy")
        .value("COMPOSED", SwapStrategy::Composed)
        .value("DIRECT", SwapStrategy::Direct)
        .value("NAIVE_ADJACENT", SwapStrategy::NaiveAdjacent);

    py::class_<Circuit>(m, "Circuit")
        .def_property_readonly("size", &Circuit::size)
        .def_property_readonly("unitary_count", &Circuit::unitary_count)
        .def_property_readonly("measured_wires", &Circuit::measured_wires)
        .def("is_normal_form", &Circuit::is_normal_form)
        .def("to_text", [](const Circuit& c) { return emit_circuit_text(c); })
        .def("violations", [](const Circuit& c) {
            std::vector<std::string> out;
            for (const auto& v : validate(c)) out.push_back(std::string(to_string(v.rule)) + ": " + v.message);
            return out;
        });

    py::class_<SnfCircuit>(m, "SnfCircuit")
        .def_readonly("k", &SnfCircuit::k)
        .def_readonly("h", &SnfCircuit::h)
        .def_readonly("output_order", &SnfCircuit::output_order)
        .def_readonly("labels", &SnfCircuit::labels)
        .def_property_readonly("unitaries",
                               [](const SnfCircuit& s) {
                                   py::list out;
                                   for (const auto& u : s.unitaries) out.append(to_numpy(u));
                                   return out;
                               })
        .def("accumulated_unitary", [](const SnfCircuit& s) { return to_numpy(accumulated_unitary(s)); });

    py::class_<SwapAccountEntry>(m, "SwapAccountEntry")
        .def_readonly("gate", &SwapAccountEntry::gate)
        .def_readonly("wires", &SwapAccountEntry::wires)
        .def_readonly("binary_swaps", &SwapAccountEntry::binary_swaps);

    py::class_<SwapAccount>(m, "SwapAccount")
        .def_readonly("strategy", &SwapAccount::strategy)
        .def_readonly("per_gate", &SwapAccount::per_gate)
        .def_readonly("total", &SwapAccount::total);

    py::class_<Qmc>(m, "Qmc")
        .def_readonly("k", &Qmc::k)
        .def_readonly("h", &Qmc::h)
        .def_property_readonly("internal_count", &Qmc::internal_count)
        .def_property_readonly("terminal_count", &Qmc::terminal_count)
        .def_property_readonly("state_names",
                               [](const Qmc& q) {
                                   std::vector<std::string> out;
                                   for (const auto& s : q.states) out.push_back(s.name);
                                   return out;
                               })
        .def("row_violations", [](const Qmc& q, double tol) {
            std::vector<std::pair<std::string, double>> out;
            for (const auto& v : verify_row_stochasticity(q, tol)) out.emplace_back(v.state_name, v.deviation);
            return out;
        }, py::arg("tol") = kDefaultTolerances.row);

    py::class_<TerminalResult>(m, "TerminalResult")
        .def_readonly("bits", &TerminalResult::bits)
        .def_readonly("probability", &TerminalResult::probability)
        .def_property_readonly("density", [](const TerminalResult& t) { return to_numpy(t.density); });

    py::class_<EquivalenceReport>(m, "EquivalenceReport")
        .def_readonly("passed", &EquivalenceReport::pass)
        .def_readonly("inputs_checked", &EquivalenceReport::inputs_checked)
        .def_readonly("failures", &EquivalenceReport::failures)
        .def_property_readonly("worst", [](const EquivalenceReport& r) {
            py::dict d;
            d["state"] = r.worst.state;
            d["rank_one"] = r.worst.rank_one;
            d["probability"] = r.worst.probability;
            d["support"] = r.worst.support;
            d["probability_sum"] = r.worst.probability_sum;
            return d;
        });

    m.def("parse_circuit", &parse_circuit, py::arg("text"));
    m.def("load_circuit", &load_circuit_file, py::arg("path"));
    m.def(
        "translate",
        [](const Circuit& c, SwapStrategy strategy, bool emit_swaps_as_gates) {
            return translate(c, {strategy, emit_swaps_as_gates});
        },
        py::arg("circuit"), py::arg("strategy") = SwapStrategy::Composed, py::arg("emit_swaps_as_gates") = false);
    m.def("build_qmc", [](const SnfCircuit& s) { return build_qmc(s); }, py::arg("snf"));
    m.def("emit_qpmc", &emit_qpmc, py::arg("qmc"), py::arg("name") = "model");
    m.def("reparse_model", &reparse_model, py::arg("text"));
    m.def("compare_qmc", &compare_qmc, py::arg("a"), py::arg("b"));
    m.def(
        "run_qmc",
        [](const Qmc& q, const py::object& state) {
            if (py::isinstance<py::str>(state) ||
                (py::isinstance<py::array>(state) && state.cast<py::array>().ndim() == 1)) {
                return run_qmc(q, outer(ket_from(state))).terminals;
            }
            return run_qmc(q, to_matrix(state.cast<ComplexArray>())).terminals;
        },
        py::arg("qmc"), py::arg("state"), "state: basis string, ket, or density matrix");
    m.def(
        "simulate_circuit", [](const Circuit& c, const py::object& state) { return to_numpy(simulate_circuit(c, ket_from(state))); },
        py::arg("circuit"), py::arg("state"));
    m.def(
        "outcome_probability",
        [](const Circuit& c, const py::object& state, const std::string& bits) {
            return outcome_probability(c, ket_from(state), bits);
        },
        py::arg("circuit"), py::arg("state"), py::arg("bits"));
    m.def(
        "check_equivalence",
        [](const Circuit& c, const SnfCircuit& s, const Qmc& q, std::size_t random_inputs, std::uint64_t seed) {
            return check_equivalence(c, s, q, standard_inputs(c.size(), random_inputs, seed));
        },
        py::arg("circuit"), py::arg("snf"), py::arg("qmc"), py::arg("random_inputs") = 8,
        py::arg("seed") = 20170607);
    m.def("gen_test_circuit", &gen_test_circuit, py::arg("k"));
    m.def("gen_test_circuit_text", &gen_test_circuit_text, py::arg("k"));
    m.def(
        "gate_matrix",
        [](const std::string& expression) { return to_numpy(resolve_gate(expression).matrix); },
        py::arg("expression"));
    m.def(
        "measurement_matrix", [](std::size_t h, std::size_t k, std::size_t i) { return to_numpy(measurement_matrix(h, k, i)); },
        py::arg("h"), py::arg("k"), py::arg("outcome"));
    m.def(
        "generalized_swap",
        [](const std::vector<std::size_t>& images, SwapStrategy strategy) {
            const auto syn = generalized_swap(WirePermutation(images), strategy);
            return py::make_tuple(to_numpy(syn.matrix), syn.binary_swaps);
        },
        py::arg("images"), py::arg("strategy") = SwapStrategy::Composed);
    m.def("format_matrix", [](const ComplexArray& a) { return format_matrix(to_matrix(a)); }, py::arg("matrix"));
}
