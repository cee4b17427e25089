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

#pragma once

#include <numbers>
#include <optional>
#include <string>

#include "otocsim/circuit.hpp"
#include "otocsim/hamiltonian.hpp"

namespace otocsim {

/// System register preparations.
enum class InitialState {
    Product00,     // |00>
    BellBlockade,  // (|01> + |10>)/sqrt(2): never both spins excited
};

std::string to_string(InitialState s);
InitialState initial_state_from_string(const std::string &text);

/// How U(t) is realized inside the protocol circuit.
struct Evolution {
    enum class Kind { ExactOracle, Trotter };
    Kind kind = Kind::ExactOracle;
    int steps = 1;  // Trotter only

    static Evolution exact() { return {Kind::ExactOracle, 1}; }
    static Evolution trotter(int steps) { return {Kind::Trotter, steps}; }
    bool operator==(const Evolution &) const = default;
};

struct ProtocolConfig {
    HamiltonianSpec hamiltonian = HamiltonianSpec::two_spin();
    double time = 0.0;
    Evolution evolution = Evolution::exact();
    InitialState initial = InitialState::Product00;
    double butterfly_phase = std::numbers::pi / 4.0;
    // Override the butterfly operators; both default to
    // exp(-i butterfly_phase S_Z).
    std::optional<GateMatrix> v;
    std::optional<GateMatrix> w;

    int n_system() const { return hamiltonian.n_spins; }
    /// The ancilla sits above the system register.
    int control_qubit() const { return hamiltonian.n_spins; }

    GateMatrix v_operator() const;
    GateMatrix w_operator() const;

    void validate() const;
};

/// Gates preparing `kind` from |0...0>. The Bell preparation is X on spin 1,
/// H on spin 2, then CNOT with spin 2 as control and spin 1 as target.
Circuit preparation_circuit(InitialState kind, int n_system = 2);

StateVector prepare_initial(InitialState kind, int n_system = 2);

/// exp(-i phase S_Z) with S_Z = sum_i sigma_z^i: diagonal, entry k is
/// exp(-i phase (n - 2 popcount(k))).
GateMatrix butterfly_operator(double phase, int n_spins);

/// Gates for U(t) on the system register under the configured evolution.
/// Negative times give the backward evolution (oracle adjoint, or the Trotter
/// circuit with negated angles).
Circuit evolution_circuit(const ProtocolConfig &cfg, double time);

/// W_t = U(-t) W U(t) as a system-register circuit.
Circuit heisenberg_circuit(const ProtocolConfig &cfg);

/**
 * The interferometric circuit on n_system + 1 qubits. Applied to
 * |psi_s> (x) |0>_c it produces
 *
 *   ( V W_t |psi_s> |0>_c + W_t V |psi_s> |1>_c ) / sqrt(2)
 *
 * via: H on the control; V controlled on |1>; W_t unconditionally; V
 * controlled on |0>. Only V is ever controlled. The compiled V's global phase
 * is restored as a phase gate on the control, and all ops are lowered to at
 * most one control.
 */
Circuit build_protocol_circuit(const ProtocolConfig &cfg);

/// Preparation, protocol, X-basis rotation of the control, and a measure of
/// the control into c[0].
Circuit experiment_circuit(const ProtocolConfig &cfg);

/// Joint state after the protocol circuit, control at the top qubit.
StateVector branch_state(const ProtocolConfig &cfg);

/// <X> of the control qubit after the protocol circuit, which equals Re[F].
double run_protocol(const ProtocolConfig &cfg);

}  // namespace otocsim
