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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace otocsim {

using cplx = std::complex<double>;

/// Dense complex matrix used for gates, Hamiltonians and propagators.
using GateMatrix = Eigen::MatrixXcd;

inline constexpr int kMaxQubits = 24;

/// Default tolerance for unitarity checks on externally supplied matrices.
inline constexpr double kUnitarityTol = 1e-10;

/// Max elementwise |U^dagger U - I|.
double unitarity_defect(const GateMatrix &u);

bool is_unitary(const GateMatrix &u, double tol = kUnitarityTol);

/// Throws UnitarityError when `u` is not square or not unitary within `tol`.
void require_unitary(const GateMatrix &u, double tol = kUnitarityTol);

/// A control line of a gate. The gate fires when the qubit reads 1, or 0 when
/// `on_zero` is set (anti-control).
struct Control {
    int qubit = 0;
    bool on_zero = false;

    bool operator==(const Control &) const = default;
};

/**
 * Amplitudes of an n-qubit pure state.
 *
 * Qubit ordering is little-endian: qubit 0 is the least-significant bit of
 * the basis index, so amplitude k belongs to |b_{n-1} ... b_1 b_0> with
 * k = sum_q b_q 2^q.
 */
class StateVector {
   public:
    /// |0...0> on `n_qubits` qubits. Throws SizeError outside [1, kMaxQubits].
    explicit StateVector(int n_qubits);

    /// Takes ownership of `amplitudes`; the length must be a power of two >= 2.
    /// Throws ArgumentError unless the squared norm is 1 within 1e-10.
    static StateVector from_amplitudes(std::vector<cplx> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t size() const { return amps_.size(); }
    std::span<const cplx> amplitudes() const { return amps_; }
    const cplx &operator[](std::size_t index) const { return amps_[index]; }

    double norm_squared() const;

    /// Probability that `qubit` reads 1.
    double probability_one(int qubit) const;

    // In-place kernels. These skip the unitarity check; the free functions
    // below are the validated entry points.
    void apply_1q_inplace(const Eigen::Matrix2cd &u, int target);
    void apply_controlled_inplace(const Eigen::Matrix2cd &u, std::span<const Control> controls, int target);
    void apply_dense_inplace(const GateMatrix &u, std::span<const int> qubits);
    void scale(cplx factor);

   private:
    StateVector() = default;
    void check_qubit(int qubit) const;

    int n_qubits_ = 0;
    std::vector<cplx> amps_;
};

/// |0...0> on `n_qubits` qubits.
StateVector new_zero_state(int n_qubits);

/// u (2x2) on `target`.
StateVector apply_1q(StateVector state, const GateMatrix &u, int target);

/// u (2x2) on `target` within the subspace where `control` is |1> (|0> when
/// `control_on_zero`).
StateVector apply_controlled(StateVector state, const GateMatrix &u, int control, int target,
                             bool control_on_zero = false);

/// A 2^k x 2^k matrix on the listed qubits; qubits[0] is the least
/// significant bit of the matrix's local index.
StateVector apply_dense(StateVector state, const GateMatrix &u, std::span<const int> qubits);

/// <psi| X_qubit |psi>.
double expectation_x(const StateVector &state, int qubit);

/// <a|b>.
cplx inner_product(const StateVector &a, const StateVector &b);

}  // namespace otocsim
