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

#include "otocsim/statevector.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "otocsim/errors.hpp"

namespace otocsim {

double unitarity_defect(const GateMatrix &u) {
    if (u.rows() != u.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    const GateMatrix d = u.adjoint() * u - GateMatrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

bool is_unitary(const GateMatrix &u, double tol) { return u.size() > 0 && unitarity_defect(u) <= tol; }

void require_unitary(const GateMatrix &u, double tol) {
    if (u.rows() != u.cols()) {
        throw UnitarityError("matrix is not square (" + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                             ")");
    }
    const double defect = unitarity_defect(u);
    if (!(defect <= tol)) {
        throw UnitarityError("matrix is not unitary: max|U^dagger U - I| = " + std::to_string(defect));
    }
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw SizeError("qubit count " + std::to_string(n_qubits) + " outside [1, " + std::to_string(kMaxQubits) +
                        "]");
    }
    amps_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amplitudes) {
    const std::size_t n = amplitudes.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw SizeError("amplitude count " + std::to_string(n) + " is not a power of two >= 2");
    }
    const int qubits = std::countr_zero(n);
    if (qubits > kMaxQubits) {
        throw SizeError("state exceeds " + std::to_string(kMaxQubits) + " qubits");
    }
    double norm = 0.0;
    for (const auto &a : amplitudes) {
        norm += std::norm(a);
    }
    if (!(std::abs(norm - 1.0) <= kUnitarityTol)) {
        throw ArgumentError("amplitudes have squared norm " + std::to_string(norm) + ", expected 1");
    }
    StateVector s;
    s.n_qubits_ = qubits;
    s.amps_ = std::move(amplitudes);
    return s;
}

double StateVector::norm_squared() const {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

double StateVector::probability_one(int qubit) const {
    check_qubit(qubit);
    const std::size_t mask = std::size_t{1} << qubit;
    double p = 0.0;
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if (k & mask) {
            p += std::norm(amps_[k]);
        }
    }
    return p;
}

void StateVector::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits_) {
        throw IndexError("qubit " + std::to_string(qubit) + " out of range for " + std::to_string(n_qubits_) +
                         "-qubit state");
    }
}

void StateVector::apply_1q_inplace(const Eigen::Matrix2cd &u, int target) {
    apply_controlled_inplace(u, {}, target);
}

void StateVector::apply_controlled_inplace(const Eigen::Matrix2cd &u, std::span<const Control> controls,
                                           int target) {
    check_qubit(target);
    std::size_t ctrl_mask = 0;
    std::size_t ctrl_value = 0;
    for (const auto &c : controls) {
        check_qubit(c.qubit);
        if (c.qubit == target) {
            throw IndexError("control and target coincide on qubit " + std::to_string(target));
        }
        const std::size_t bit = std::size_t{1} << c.qubit;
        ctrl_mask |= bit;
        if (!c.on_zero) {
            ctrl_value |= bit;
        }
    }
    const std::size_t tbit = std::size_t{1} << target;
    const cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if ((k & tbit) || (k & ctrl_mask) != ctrl_value) {
            continue;
        }
        const cplx a0 = amps_[k];
        const cplx a1 = amps_[k | tbit];
        amps_[k] = u00 * a0 + u01 * a1;
        amps_[k | tbit] = u10 * a0 + u11 * a1;
    }
}

void StateVector::apply_dense_inplace(const GateMatrix &u, std::span<const int> qubits) {
    const std::size_t k = qubits.size();
    if (k == 0 || static_cast<int>(k) > n_qubits_) {
        throw SizeError("dense gate must act on 1.." + std::to_string(n_qubits_) + " qubits, got " +
                        std::to_string(k));
    }
    const std::size_t dim = std::size_t{1} << k;
    if (static_cast<std::size_t>(u.rows()) != dim || static_cast<std::size_t>(u.cols()) != dim) {
        throw SizeError("dense gate is " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                        ", expected " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    std::size_t qmask = 0;
    for (int q : qubits) {
        check_qubit(q);
        const std::size_t bit = std::size_t{1} << q;
        if (qmask & bit) {
            throw IndexError("qubit " + std::to_string(q) + " listed twice");
        }
        qmask |= bit;
    }
    // Offsets of each local basis state within a block anchored at a base
    // index whose listed bits are all zero.
    std::vector<std::size_t> offsets(dim, 0);
    for (std::size_t local = 0; local < dim; ++local) {
        for (std::size_t b = 0; b < k; ++b) {
            if (local & (std::size_t{1} << b)) {
                offsets[local] |= std::size_t{1} << qubits[b];
            }
        }
    }
    std::vector<cplx> in(dim), out(dim);
    for (std::size_t base = 0; base < amps_.size(); ++base) {
        if (base & qmask) {
            continue;
        }
        for (std::size_t i = 0; i < dim; ++i) {
            in[i] = amps_[base | offsets[i]];
        }
        for (std::size_t r = 0; r < dim; ++r) {
            cplx acc = 0.0;
            for (std::size_t c = 0; c < dim; ++c) {
                acc += u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
            }
            out[r] = acc;
        }
        for (std::size_t i = 0; i < dim; ++i) {
            amps_[base | offsets[i]] = out[i];
        }
    }
}

void StateVector::scale(cplx factor) {
    for (auto &a : amps_) {
        a *= factor;
    }
}

StateVector new_zero_state(int n_qubits) { return StateVector(n_qubits); }

namespace {

Eigen::Matrix2cd as_2x2(const GateMatrix &u) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw SizeError("expected a 2x2 gate, got " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()));
    }
    require_unitary(u);
    return u;
}

}  // namespace

StateVector apply_1q(StateVector state, const GateMatrix &u, int target) {
    state.apply_1q_inplace(as_2x2(u), target);
    return state;
}

StateVector apply_controlled(StateVector state, const GateMatrix &u, int control, int target, bool control_on_zero) {
    if (control == target) {
        throw IndexError("control and target coincide on qubit " + std::to_string(target));
    }
    const Control c{control, control_on_zero};
    state.apply_controlled_inplace(as_2x2(u), std::span<const Control>(&c, 1), target);
    return state;
}

StateVector apply_dense(StateVector state, const GateMatrix &u, std::span<const int> qubits) {
    const std::size_t dim = std::size_t{1} << std::min<std::size_t>(qubits.size(), 30);
    if (static_cast<std::size_t>(u.rows()) != dim || u.rows() != u.cols()) {
        throw SizeError("dense gate dimension " + std::to_string(u.rows()) + " does not match " +
                        std::to_string(qubits.size()) + " qubits");
    }
    require_unitary(u);
    state.apply_dense_inplace(u, qubits);
    return state;
}

double expectation_x(const StateVector &state, int qubit) {
    if (qubit < 0 || qubit >= state.n_qubits()) {
        throw IndexError("qubit " + std::to_string(qubit) + " out of range");
    }
    const std::size_t bit = std::size_t{1} << qubit;
    const auto amps = state.amplitudes();
    double acc = 0.0;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if (!(k & bit)) {
            acc += 2.0 * std::real(std::conj(amps[k]) * amps[k | bit]);
        }
    }
    return acc;
}

cplx inner_product(const StateVector &a, const StateVector &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw SizeError("inner product of " + std::to_string(a.n_qubits()) + "- and " +
                        std::to_string(b.n_qubits()) + "-qubit states");
    }
    cplx acc = 0.0;
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t k = 0; k < x.size(); ++k) {
        acc += std::conj(x[k]) * y[k];
    }
    return acc;
}

}  // namespace otocsim
