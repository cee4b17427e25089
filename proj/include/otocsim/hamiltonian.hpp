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

#include <Eigen/Dense>

#include "otocsim/circuit.hpp"

namespace otocsim {

/// How the pair interaction V_ij couples spins i and j.
enum class InteractionForm {
    PauliZZ,         // V_ij sigma_z^i sigma_z^j
    NumberOperator,  // V_ij n_i n_j with n = |1><1| (the Rydberg occupation)
};

std::string to_string(InteractionForm form);
InteractionForm interaction_form_from_string(const std::string &text);

/**
 * Parameters of the driven Rydberg-Ising chain
 *
 *   H = omega * sum_i sigma_x^i + sum_{i<j} V_ij * (pair term)_ij,
 *
 * in units where the drive energy hbar*Omega is `omega`. Spin i lives on
 * qubit i - 1 (spin 1 is qubit 0).
 *
 * The van der Waals form V_ij = C / R_ij is not modelled; couplings are
 * given directly.
 */
struct HamiltonianSpec {
    int n_spins = 2;
    double omega = 1.0;
    Eigen::MatrixXd couplings;  // symmetric, zero diagonal, entries >= 0
    InteractionForm form = InteractionForm::PauliZZ;

    /// Two spins with drive `omega` and coupling `v12`.
    static HamiltonianSpec two_spin(double omega = 1.0, double v12 = 1.0,
                                    InteractionForm form = InteractionForm::PauliZZ);

    double coupling(int i, int j) const { return couplings(i, j); }

    /// Throws ArgumentError when the invariants above do not hold.
    void validate() const;
};

/// The dense 2^n x 2^n Hamiltonian.
GateMatrix build_hamiltonian(const HamiltonianSpec &spec);

/// exp(-i h t) by Hermitian eigendecomposition. Throws SymmetryError when
/// max|h - h^dagger| exceeds 1e-12 (relative to max|h|).
GateMatrix exact_evolution(const GateMatrix &h, double t);

/// Which local term a Trotter factor exponentiates.
struct TrotterTerm {
    enum class Kind { Drive, Pair } kind;
    int first = 0;   // drive: the spin's qubit; pair: lower qubit
    int second = 0;  // pair only: higher qubit
    std::string label() const;
};

/// Fixed factor order: drives on qubits 0..n-1, then pairs (i<j) with
/// non-zero coupling in lexicographic order.
std::vector<TrotterTerm> trotter_term_order(const HamiltonianSpec &spec);

struct TrotterPlan {
    double total_time = 0.0;
    int steps = 1;

    void validate() const;
};

/**
 * One first-order Trotter step exp(-i H_1 dt) exp(-i H_2 dt) ... as gates.
 *
 * Drive factors are exp(-i omega dt sigma_x) = u3(2 omega dt, 3pi/2, pi/2).
 * A ZZ factor exp(-i V dt sigma_z sigma_z) is cx . u1(2 V dt) . cx. The
 * number-operator factor exp(-i V dt n n) is a controlled u1(-V dt). The
 * circuit's global phase is set so its matrix equals the product exactly.
 */
Circuit trotter_step_circuit(const HamiltonianSpec &spec, double dt);

/// `plan.steps` copies of trotter_step_circuit(spec, total_time / steps).
Circuit trotterized_evolution(const HamiltonianSpec &spec, const TrotterPlan &plan);

/// The same product of exponentials, computed densely from each term's
/// matrix. Used to cross-check the gate-level step.
GateMatrix trotter_step_matrix(const HamiltonianSpec &spec, double dt);

}  // namespace otocsim
