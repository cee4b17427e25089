// Copyright 2026 The otocsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "otocsim/analysis.hpp"
#include "otocsim/compiler.hpp"
#include "otocsim/errors.hpp"
#include "otocsim/io.hpp"
#include "otocsim/qasm.hpp"

namespace py = pybind11;
using namespace otocsim;

namespace {

py::array_t<cplx> amplitudes(const StateVector &s) {
    const auto a = s.amplitudes();
    return py::array_t<cplx>(static_cast<py::ssize_t>(a.size()), a.data());
}

py::dict sweep_dict(const OtocSweep &s) {
    const auto n = static_cast<py::ssize_t>(s.points.size());
    py::array_t<double> t(n), re_f(n), re_oracle(n), im_oracle(n), comm(n);
    for (py::ssize_t k = 0; k < n; ++k) {
        const auto &p = s.points[static_cast<std::size_t>(k)];
        t.mutable_at(k) = p.t;
        re_f.mutable_at(k) = p.re_f;
        re_oracle.mutable_at(k) = p.f_exact.real();
        im_oracle.mutable_at(k) = p.f_exact.imag();
        comm.mutable_at(k) = p.commutator_sq;
    }
    py::dict d;
    d["t"] = t;
    d["re_f"] = re_f;
    d["re_f_oracle"] = re_oracle;
    d["im_f_oracle"] = im_oracle;
    d["commutator_sq"] = comm;
    d["provenance"] = to_string(s.provenance);
    return d;
}

ProtocolConfig make_config(const std::string &initial, double time, int steps, double omega, double v12,
                           const std::string &interaction) {
    ProtocolConfig cfg;
    cfg.hamiltonian = HamiltonianSpec::two_spin(omega, v12, interaction_form_from_string(interaction));
    cfg.initial = initial_state_from_string(initial);
    cfg.time = time;
    cfg.evolution = steps > 0 ? Evolution::trotter(steps) : Evolution::exact();
    cfg.validate();
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Statevector simulation of out-of-time-ordered correlators";
    m.attr("__version__") = kVersion;

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<SizeError>(m, "SizeError", base.ptr());
    py::register_exception<IndexError>(m, "IndexError", base.ptr());
    py::register_exception<UnitarityError>(m, "UnitarityError", base.ptr());
    py::register_exception<SymmetryError>(m, "SymmetryError", base.ptr());
    py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());
    py::register_exception<CapabilityError>(m, "CapabilityError", base.ptr());
    py::register_exception<EmissionError>(m, "EmissionError", base.ptr());
    py::register_exception<SyntaxError>(m, "QasmSyntaxError", base.ptr());

    py::class_<StateVector>(m, "StateVector")
        .def(py::init<int>(), py::arg("n_qubits"))
        .def_static("from_amplitudes", &StateVector::from_amplitudes)
        .def_property_readonly("n_qubits", &StateVector::n_qubits)
        .def_property_readonly("amplitudes", &amplitudes)
        .def("norm_squared", &StateVector::norm_squared)
        .def("__len__", &StateVector::size);

    m.def("apply_1q", &apply_1q, py::arg("state"), py::arg("u"), py::arg("target"));
    m.def("apply_controlled", &apply_controlled, py::arg("state"), py::arg("u"), py::arg("control"),
          py::arg("target"), py::arg("control_on_zero") = false);
    m.def("expectation_x", &expectation_x, py::arg("state"), py::arg("qubit"));
    m.def("inner_product", &inner_product);

    m.def("u1", &u1, py::arg("lam"));
    m.def("u3", py::overload_cast<double, double, double>(&u3), py::arg("theta"), py::arg("phi"), py::arg("lam"));
    m.def("x", &x);
    m.def("h", &h);
    m.def("cnot", &cnot);
    m.def("controlled", &controlled);

    m.def(
        "hamiltonian",
        [](double omega, double v12, const std::string &interaction) {
            return build_hamiltonian(HamiltonianSpec::two_spin(omega, v12, interaction_form_from_string(interaction)));
        },
        py::arg("omega") = 1.0, py::arg("v12") = 1.0, py::arg("interaction") = "zz",
        "Dense two-spin Hamiltonian.");
    m.def("exact_evolution", &exact_evolution, py::arg("h"), py::arg("t"));
    m.def(
        "trotter_unitary",
        [](double total_time, int steps, double omega, double v12, const std::string &interaction) {
            const auto spec = HamiltonianSpec::two_spin(omega, v12, interaction_form_from_string(interaction));
            return circuit_unitary(trotterized_evolution(spec, {total_time, steps}));
        },
        py::arg("total_time"), py::arg("steps"), py::arg("omega") = 1.0, py::arg("v12") = 1.0,
        py::arg("interaction") = "zz");

    m.def(
        "compile_unitary",
        [](const GateMatrix &u) {
            int n = 0;
            while ((Eigen::Index{1} << n) < u.rows()) {
                ++n;
            }
            const auto cu = compile_unitary(u, n);
            return py::make_tuple(emit_qasm(cu.circuit), cu.global_phase, circuit_unitary(cu.circuit));
        },
        py::arg("u"), "Returns (qasm text, global phase alpha, circuit matrix = exp(i alpha) u).");
    m.def("butterfly_operator", &butterfly_operator, py::arg("phase") = std::numbers::pi / 4, py::arg("n_spins") = 2);
    m.def(
        "prepare_initial", [](const std::string &kind) { return prepare_initial(initial_state_from_string(kind)); },
        py::arg("kind"));

    m.def(
        "run_protocol",
        [](const std::string &initial, double time, int steps, double omega, double v12,
           const std::string &interaction) {
            return run_protocol(make_config(initial, time, steps, omega, v12, interaction));
        },
        py::arg("initial") = "product", py::arg("time") = 0.0, py::arg("steps") = 0, py::arg("omega") = 1.0,
        py::arg("v12") = 1.0, py::arg("interaction") = "zz",
        "<X> of the control qubit; steps = 0 uses the exact evolution.");
    m.def(
        "otoc_exact",
        [](const std::string &initial, double time, double omega, double v12, const std::string &interaction) {
            const auto cfg = make_config(initial, time, 0, omega, v12, interaction);
            return otoc_exact(cfg.hamiltonian, cfg.v_operator(), cfg.w_operator(), prepare_initial(cfg.initial), time);
        },
        py::arg("initial") = "product", py::arg("time") = 0.0, py::arg("omega") = 1.0, py::arg("v12") = 1.0,
        py::arg("interaction") = "zz");
    m.def(
        "run_protocol_noisy",
        [](const std::string &initial, double time, int steps, std::uint64_t shots, std::uint64_t seed) {
            return run_protocol_noisy(make_config(initial, time, steps, 1.0, 1.0, "zz"), table1_noise_model(seed),
                                      shots);
        },
        py::arg("initial") = "product", py::arg("time") = 0.0, py::arg("steps") = 0, py::arg("shots") = 8192,
        py::arg("seed") = 0, "Estimate under the ibmqx4-derived noise model.", py::call_guard<py::gil_scoped_release>());

    m.def(
        "sweep",
        [](const std::string &initial, const std::string &mode, double t_max, int points, int steps,
           std::uint64_t shots, std::uint64_t seed, const std::string &interaction) {
            auto cfg = make_config(initial, 0.0, steps, 1.0, 1.0, interaction);
            SweepOptions opts;
            opts.noise = table1_noise_model(seed);
            opts.shots = shots;
            OtocSweep s;
            {
                py::gil_scoped_release release;
                s = sweep(cfg, t_max, points, provenance_from_string(mode), opts);
            }
            return sweep_dict(s);
        },
        py::arg("initial") = "product", py::arg("mode") = "oracle", py::arg("t_max") = 8.0, py::arg("points") = 81,
        py::arg("steps") = 0, py::arg("shots") = 8192, py::arg("seed") = 0, py::arg("interaction") = "zz");

    m.def(
        "experiment_qasm",
        [](const std::string &initial, double time, int steps) {
            return emit_qasm(experiment_circuit(make_config(initial, time, steps, 1.0, 1.0, "zz")));
        },
        py::arg("initial") = "product", py::arg("time") = 1.0, py::arg("steps") = 1);
    m.def(
        "qasm_unitary", [](const std::string &text) { return circuit_unitary(parse_qasm(text)); }, py::arg("text"),
        "Matrix of a measurement-free QASM program.");
    m.def(
        "qasm_op_count", [](const std::string &text) { return parse_qasm(text).size(); }, py::arg("text"));

    m.def("commutator_magnitude", &commutator_magnitude, py::arg("re_f"));
    m.def("scrambling_time", &scrambling_time, py::arg("n_spins"), py::arg("delta_t"));
}
