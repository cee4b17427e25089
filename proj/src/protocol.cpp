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

#include "otocsim/protocol.hpp"

#include <bit>
#include <cmath>

#include "otocsim/compiler.hpp"
#include "otocsim/errors.hpp"

namespace otocsim {

namespace {

// Compiled gates reproducing `u` exactly, global phase included.
Circuit exact_circuit(const GateMatrix &u, int n_qubits) {
    auto compiled = compile_unitary(u, n_qubits);
    compiled.circuit.set_global_phase(-compiled.global_phase);
    return std::move(compiled.circuit);
}

Circuit widen(const Circuit &c, int n_qubits) {
    Circuit out(n_qubits);
    out.append(c);
    return out;
}

}  // namespace

std::string to_string(InitialState s) { return s == InitialState::Product00 ? "product" : "bell"; }

InitialState initial_state_from_string(const std::string &text) {
    if (text == "product" || text == "product00" || text == "PRODUCT_00") {
        return InitialState::Product00;
    }
    if (text == "bell" || text == "bell_blockade" || text == "BELL_BLOCKADE") {
        return InitialState::BellBlockade;
    }
    throw ArgumentError("unknown initial state '" + text + "' (expected product or bell)");
}

GateMatrix ProtocolConfig::v_operator() const {
    return v ? *v : butterfly_operator(butterfly_phase, n_system());
}

GateMatrix ProtocolConfig::w_operator() const {
    return w ? *w : butterfly_operator(butterfly_phase, n_system());
}

void ProtocolConfig::validate() const {
    hamiltonian.validate();
    if (!(time >= 0.0) || !std::isfinite(time)) {
        throw ArgumentError("protocol time must be finite and >= 0");
    }
    if (evolution.kind == Evolution::Kind::Trotter && evolution.steps < 1) {
        throw ArgumentError("Trotter steps must be >= 1");
    }
    if (n_system() + 1 > kMaxQubits) {
        throw CapabilityError("system plus control exceeds the simulator limit");
    }
    const auto dim = Eigen::Index{1} << n_system();
    for (const auto *op : {&v, &w}) {
        if (*op) {
            if ((*op)->rows() != dim || (*op)->cols() != dim) {
                throw SizeError("butterfly operator must be " + std::to_string(dim) + "x" + std::to_string(dim));
            }
            require_unitary(**op);
        }
    }
}

Circuit preparation_circuit(InitialState kind, int n_system) {
    Circuit c(n_system);
    if (kind == InitialState::Product00) {
        return c;
    }
    if (n_system != 2) {
        throw CapabilityError("the blockade Bell state is defined for two spins");
    }
    c.x(0);
    c.h(1);
    c.cx(1, 0);
    return c;
}

StateVector prepare_initial(InitialState kind, int n_system) {
    return apply_circuit(StateVector(n_system), preparation_circuit(kind, n_system));
}

GateMatrix butterfly_operator(double phase, int n_spins) {
    if (n_spins < 1 || n_spins > kMaxQubits) {
        throw ArgumentError("n_spins must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    const std::size_t dim = std::size_t{1} << n_spins;
    GateMatrix m = GateMatrix::Zero(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const double sz = n_spins - 2.0 * std::popcount(k);
        m(k, k) = std::polar(1.0, -phase * sz);
    }
    return m;
}

Circuit evolution_circuit(const ProtocolConfig &cfg, double time) {
    if (cfg.evolution.kind == Evolution::Kind::Trotter) {
        return trotterized_evolution(cfg.hamiltonian, {time, cfg.evolution.steps});
    }
    return exact_circuit(exact_evolution(build_hamiltonian(cfg.hamiltonian), time), cfg.n_system());
}

Circuit heisenberg_circuit(const ProtocolConfig &cfg) {
    Circuit c(cfg.n_system());
    c.append(evolution_circuit(cfg, cfg.time));
    c.append(exact_circuit(cfg.w_operator(), cfg.n_system()));
    c.append(evolution_circuit(cfg, -cfg.time));
    return c;
}

Circuit build_protocol_circuit(const ProtocolConfig &cfg) {
    cfg.validate();
    const int n = cfg.n_system();
    const int control = cfg.control_qubit();
    const Circuit v = exact_circuit(cfg.v_operator(), n);

    Circuit c(n + 1);
    c.h(control);
    c.append(lower_controls(controlled_by(v, control, false)));
    c.append(widen(heisenberg_circuit(cfg), n + 1));
    c.append(lower_controls(controlled_by(v, control, true)));
    return c;
}

Circuit experiment_circuit(const ProtocolConfig &cfg) {
    const int n = cfg.n_system();
    Circuit c(n + 1);
    c.append(preparation_circuit(cfg.initial, n));
    c.append(build_protocol_circuit(cfg));
    c.h(cfg.control_qubit());
    c.measure(cfg.control_qubit(), 0);
    return c;
}

StateVector branch_state(const ProtocolConfig &cfg) {
    const int n = cfg.n_system();
    StateVector s(n + 1);
    apply_circuit_inplace(s, widen(preparation_circuit(cfg.initial, n), n + 1));
    apply_circuit_inplace(s, build_protocol_circuit(cfg));
    return s;
}

double run_protocol(const ProtocolConfig &cfg) { return expectation_x(branch_state(cfg), cfg.control_qubit()); }

}  // namespace otocsim
