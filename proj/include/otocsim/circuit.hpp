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

#include <string>
#include <vector>

#include "otocsim/gates.hpp"
#include "otocsim/statevector.hpp"

namespace otocsim {

/// Base operation of a circuit op. Controlled variants (CNOT, CU1, CU3,
/// CPHASE and their anti-controlled forms) are a base kind plus controls.
enum class GateKind { X, H, U1, U3, Measure, Barrier };

struct Op {
    GateKind kind = GateKind::X;
    std::vector<double> params;     // radians; U1: {lambda}, U3: {theta, phi, lambda}
    std::vector<Control> controls;  // empty for plain single-qubit gates
    std::vector<int> targets;       // one qubit for gates and measure, any for barrier
    int clbit = -1;                 // measure only

    bool operator==(const Op &) const = default;

    bool is_unitary_gate() const { return kind != GateKind::Measure && kind != GateKind::Barrier; }

    /// Conventional mnemonic: x, h, u1, u3, cx, cu1, cu3, measure, barrier.
    /// Anti-controlled ops are prefixed with "a", multi-controlled with "mc".
    std::string name() const;

    /// The 2x2 matrix applied to the target when the controls are satisfied.
    GateMatrix base_matrix() const;
};

/**
 * An ordered gate list over a fixed register.
 *
 * `global_phase` is an exact scalar e^{i global_phase} carried alongside the
 * ops so that the circuit's matrix can match a target unitary exactly. It is
 * not observable and is dropped by the QASM emitter.
 */
class Circuit {
   public:
    explicit Circuit(int n_qubits = 1);

    int n_qubits() const { return n_qubits_; }
    const std::vector<Op> &ops() const { return ops_; }
    std::size_t size() const { return ops_.size(); }
    bool empty() const { return ops_.empty(); }

    double global_phase() const { return global_phase_; }
    void set_global_phase(double phase) { global_phase_ = phase; }
    void add_global_phase(double phase) { global_phase_ += phase; }

    /// Appends after validating qubit indices and control/target overlap.
    Circuit &add(Op op);

    Circuit &x(int target, std::vector<Control> controls = {});
    Circuit &h(int target, std::vector<Control> controls = {});
    Circuit &u1(double lambda, int target, std::vector<Control> controls = {});
    Circuit &u3(double theta, double phi, double lambda, int target, std::vector<Control> controls = {});
    Circuit &cx(int control, int target) { return x(target, {{control, false}}); }
    Circuit &cu1(double lambda, int control, int target) { return u1(lambda, target, {{control, false}}); }
    Circuit &measure(int qubit, int clbit);
    Circuit &barrier(std::vector<int> qubits);

    /// Appends `other`'s ops and phase. `other` must not be wider than this.
    Circuit &append(const Circuit &other);

    bool operator==(const Circuit &) const = default;

   private:
    int n_qubits_;
    std::vector<Op> ops_;
    double global_phase_ = 0.0;
};

/// Applies every unitary op of `circuit` to `state` in order. Barriers are
/// skipped; a measure op raises CapabilityError.
void apply_circuit_inplace(StateVector &state, const Circuit &circuit);
StateVector apply_circuit(StateVector state, const Circuit &circuit);

/// The 2^n x 2^n matrix of the circuit, including its global phase.
GateMatrix circuit_unitary(const Circuit &circuit);

/// Reverse-ordered adjoint circuit.
Circuit inverse(const Circuit &circuit);

/// Adds `control` (on |1>, or |0> when `on_zero`) to every op. The global
/// phase becomes a phase gate on the control. The result has
/// max(circuit width, control + 1) qubits.
Circuit controlled_by(const Circuit &circuit, int control, bool on_zero = false);

/// Same ops on a wider register with indices remapped by `mapping[q]`.
Circuit remap(const Circuit &circuit, int n_qubits, const std::vector<int> &mapping);

/// Op tallies by arity: uncontrolled, single-control and multi-control.
struct GateCounts {
    std::size_t single = 0;
    std::size_t two_qubit = 0;
    std::size_t multi = 0;
};
GateCounts count_gates(const Circuit &circuit);

}  // namespace otocsim
