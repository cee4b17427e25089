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

#include "otocsim/circuit.hpp"

#include <algorithm>

#include "otocsim/errors.hpp"

namespace otocsim {

std::string Op::name() const {
    std::string base;
    switch (kind) {
        case GateKind::X:
            base = "x";
            break;
        case GateKind::H:
            base = "h";
            break;
        case GateKind::U1:
            base = "u1";
            break;
        case GateKind::U3:
            base = "u3";
            break;
        case GateKind::Measure:
            return "measure";
        case GateKind::Barrier:
            return "barrier";
    }
    if (controls.empty()) {
        return base;
    }
    const bool anti = std::any_of(controls.begin(), controls.end(), [](const Control &c) { return c.on_zero; });
    const std::string prefix = controls.size() == 1 ? "c" : "mc";
    return (anti ? "a" : "") + prefix + base;
}

GateMatrix Op::base_matrix() const {
    switch (kind) {
        case GateKind::X:
            return otocsim::x();
        case GateKind::H:
            return otocsim::h();
        case GateKind::U1:
            return otocsim::u1(params.at(0));
        case GateKind::U3:
            return otocsim::u3(params.at(0), params.at(1), params.at(2));
        case GateKind::Measure:
        case GateKind::Barrier:
            break;
    }
    throw CapabilityError(name() + " has no matrix");
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw SizeError("circuit width " + std::to_string(n_qubits) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
    }
}

Circuit &Circuit::add(Op op) {
    auto check = [this](int q) {
        if (q < 0 || q >= n_qubits_) {
            throw IndexError("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_qubits_) +
                             "-qubit circuit");
        }
    };
    for (int t : op.targets) {
        check(t);
    }
    for (const auto &c : op.controls) {
        check(c.qubit);
        if (std::find(op.targets.begin(), op.targets.end(), c.qubit) != op.targets.end()) {
            throw IndexError("qubit " + std::to_string(c.qubit) + " is both control and target");
        }
        const auto dup = std::count_if(op.controls.begin(), op.controls.end(),
                                       [&](const Control &o) { return o.qubit == c.qubit; });
        if (dup > 1) {
            throw IndexError("qubit " + std::to_string(c.qubit) + " listed twice as control");
        }
    }
    const std::size_t want_params = op.kind == GateKind::U1 ? 1 : op.kind == GateKind::U3 ? 3 : 0;
    if (op.params.size() != want_params) {
        throw ArgumentError(op.name() + " takes " + std::to_string(want_params) + " parameter(s)");
    }
    if (op.kind == GateKind::Barrier) {
        if (op.targets.empty() || !op.controls.empty()) {
            throw ArgumentError("barrier needs at least one qubit and no controls");
        }
    } else if (op.targets.size() != 1) {
        throw ArgumentError(op.name() + " takes exactly one target");
    }
    if (op.kind == GateKind::Measure) {
        if (op.clbit < 0 || !op.controls.empty()) {
            throw ArgumentError("measure needs a classical bit and no controls");
        }
    }
    ops_.push_back(std::move(op));
    return *this;
}

Circuit &Circuit::x(int target, std::vector<Control> controls) {
    return add({GateKind::X, {}, std::move(controls), {target}});
}

Circuit &Circuit::h(int target, std::vector<Control> controls) {
    return add({GateKind::H, {}, std::move(controls), {target}});
}

Circuit &Circuit::u1(double lambda, int target, std::vector<Control> controls) {
    return add({GateKind::U1, {lambda}, std::move(controls), {target}});
}

Circuit &Circuit::u3(double theta, double phi, double lambda, int target, std::vector<Control> controls) {
    return add({GateKind::U3, {theta, phi, lambda}, std::move(controls), {target}});
}

Circuit &Circuit::measure(int qubit, int clbit) { return add({GateKind::Measure, {}, {}, {qubit}, clbit}); }

Circuit &Circuit::barrier(std::vector<int> qubits) { return add({GateKind::Barrier, {}, {}, std::move(qubits)}); }

Circuit &Circuit::append(const Circuit &other) {
    if (other.n_qubits() > n_qubits_) {
        throw SizeError("cannot append a " + std::to_string(other.n_qubits()) + "-qubit circuit to a " +
                        std::to_string(n_qubits_) + "-qubit one");
    }
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    global_phase_ += other.global_phase_;
    return *this;
}

void apply_circuit_inplace(StateVector &state, const Circuit &circuit) {
    if (state.n_qubits() != circuit.n_qubits()) {
        throw SizeError("circuit has " + std::to_string(circuit.n_qubits()) + " qubits, state has " +
                        std::to_string(state.n_qubits()));
    }
    for (const auto &op : circuit.ops()) {
        if (op.kind == GateKind::Barrier) {
            continue;
        }
        if (op.kind == GateKind::Measure) {
            throw CapabilityError("measure ops cannot be applied to a statevector");
        }
        state.apply_controlled_inplace(op.base_matrix(), op.controls, op.targets.front());
    }
    if (circuit.global_phase() != 0.0) {
        state.scale(std::polar(1.0, circuit.global_phase()));
    }
}

StateVector apply_circuit(StateVector state, const Circuit &circuit) {
    apply_circuit_inplace(state, circuit);
    return state;
}

GateMatrix circuit_unitary(const Circuit &circuit) {
    const int n = circuit.n_qubits();
    const std::size_t dim = std::size_t{1} << n;
    GateMatrix m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<cplx> amps(dim, 0.0);
        amps[col] = 1.0;
        auto s = StateVector::from_amplitudes(std::move(amps));
        apply_circuit_inplace(s, circuit);
        for (std::size_t row = 0; row < dim; ++row) {
            m(row, col) = s[row];
        }
    }
    return m;
}

Circuit inverse(const Circuit &circuit) {
    Circuit out(circuit.n_qubits());
    for (auto it = circuit.ops().rbegin(); it != circuit.ops().rend(); ++it) {
        Op op = *it;
        if (op.kind == GateKind::Measure) {
            throw CapabilityError("cannot invert a circuit containing measurements");
        }
        if (op.kind == GateKind::U1) {
            op.params[0] = -op.params[0];
        } else if (op.kind == GateKind::U3) {
            op.params = {-op.params[0], -op.params[2], -op.params[1]};
        }
        out.add(std::move(op));
    }
    out.set_global_phase(-circuit.global_phase());
    return out;
}

Circuit controlled_by(const Circuit &circuit, int control, bool on_zero) {
    const int width = std::max(circuit.n_qubits(), control + 1);
    Circuit out(width);
    const Control c{control, on_zero};
    for (Op op : circuit.ops()) {
        if (!op.is_unitary_gate()) {
            throw CapabilityError("cannot control a " + op.name() + " op");
        }
        op.controls.push_back(c);
        out.add(std::move(op));
    }
    const double phase = circuit.global_phase();
    if (phase != 0.0) {
        if (on_zero) {
            // diag(e^{i phase}, 1) = e^{i phase} * u1(-phase)
            out.u1(-phase, control);
            out.add_global_phase(phase);
        } else {
            out.u1(phase, control);
        }
    }
    return out;
}

Circuit remap(const Circuit &circuit, int n_qubits, const std::vector<int> &mapping) {
    if (static_cast<int>(mapping.size()) < circuit.n_qubits()) {
        throw SizeError("qubit mapping shorter than circuit width");
    }
    Circuit out(n_qubits);
    for (Op op : circuit.ops()) {
        for (auto &t : op.targets) {
            t = mapping[t];
        }
        for (auto &c : op.controls) {
            c.qubit = mapping[c.qubit];
        }
        out.add(std::move(op));
    }
    out.set_global_phase(circuit.global_phase());
    return out;
}

GateCounts count_gates(const Circuit &circuit) {
    GateCounts counts;
    for (const auto &op : circuit.ops()) {
        if (!op.is_unitary_gate()) {
            continue;
        }
        switch (op.controls.size()) {
            case 0:
                ++counts.single;
                break;
            case 1:
                ++counts.two_qubit;
                break;
            default:
                ++counts.multi;
        }
    }
    return counts;
}

}  // namespace otocsim
