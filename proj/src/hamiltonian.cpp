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

#include "otocsim/hamiltonian.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "otocsim/errors.hpp"

namespace otocsim {

namespace {

// Diagonal entry of sigma_z on `qubit` for basis index k.
double z_sign(std::size_t k, int qubit) { return (k >> qubit) & 1U ? -1.0 : 1.0; }

double occupation(std::size_t k, int qubit) { return (k >> qubit) & 1U ? 1.0 : 0.0; }

GateMatrix term_matrix(const HamiltonianSpec &spec, const TrotterTerm &term) {
    const std::size_t dim = std::size_t{1} << spec.n_spins;
    GateMatrix m = GateMatrix::Zero(dim, dim);
    if (term.kind == TrotterTerm::Kind::Drive) {
        const std::size_t bit = std::size_t{1} << term.first;
        for (std::size_t k = 0; k < dim; ++k) {
            m(k ^ bit, k) = spec.omega;
        }
        return m;
    }
    const double v = spec.coupling(term.first, term.second);
    for (std::size_t k = 0; k < dim; ++k) {
        m(k, k) = spec.form == InteractionForm::PauliZZ
                      ? v * z_sign(k, term.first) * z_sign(k, term.second)
                      : v * occupation(k, term.first) * occupation(k, term.second);
    }
    return m;
}

}  // namespace

std::string to_string(InteractionForm form) {
    return form == InteractionForm::PauliZZ ? "zz" : "number";
}

InteractionForm interaction_form_from_string(const std::string &text) {
    if (text == "zz" || text == "pauli_zz" || text == "PAULI_ZZ") {
        return InteractionForm::PauliZZ;
    }
    if (text == "number" || text == "number_operator" || text == "NUMBER_OPERATOR") {
        return InteractionForm::NumberOperator;
    }
    throw ArgumentError("unknown interaction form '" + text + "' (expected zz or number)");
}

HamiltonianSpec HamiltonianSpec::two_spin(double omega, double v12, InteractionForm form) {
    HamiltonianSpec spec;
    spec.n_spins = 2;
    spec.omega = omega;
    spec.couplings = Eigen::MatrixXd::Zero(2, 2);
    spec.couplings(0, 1) = spec.couplings(1, 0) = v12;
    spec.form = form;
    return spec;
}

void HamiltonianSpec::validate() const {
    if (n_spins < 1) {
        throw ArgumentError("n_spins must be >= 1");
    }
    if (n_spins > kMaxQubits) {
        throw CapabilityError("n_spins " + std::to_string(n_spins) + " exceeds the simulator limit");
    }
    if (!std::isfinite(omega)) {
        throw ArgumentError("omega must be finite");
    }
    if (couplings.rows() != n_spins || couplings.cols() != n_spins) {
        throw ArgumentError("coupling matrix must be " + std::to_string(n_spins) + "x" + std::to_string(n_spins));
    }
    for (int i = 0; i < n_spins; ++i) {
        if (couplings(i, i) != 0.0) {
            throw ArgumentError("coupling matrix must have a zero diagonal");
        }
        for (int j = 0; j < n_spins; ++j) {
            const double v = couplings(i, j);
            if (!std::isfinite(v) || v < 0.0) {
                throw ArgumentError("couplings must be finite and non-negative");
            }
            if (v != couplings(j, i)) {
                throw ArgumentError("coupling matrix must be symmetric");
            }
        }
    }
}

GateMatrix build_hamiltonian(const HamiltonianSpec &spec) {
    spec.validate();
    const std::size_t dim = std::size_t{1} << spec.n_spins;
    GateMatrix h = GateMatrix::Zero(dim, dim);
    for (const auto &term : trotter_term_order(spec)) {
        h += term_matrix(spec, term);
    }
    return h;
}

GateMatrix exact_evolution(const GateMatrix &h, double t) {
    if (h.rows() != h.cols() || h.rows() == 0) {
        throw SizeError("Hamiltonian must be a non-empty square matrix");
    }
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw SymmetryError("Hamiltonian is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<GateMatrix> eig(h);
    if (eig.info() != Eigen::Success) {
        throw Error("eigendecomposition failed");
    }
    const Eigen::VectorXcd phases =
        (eig.eigenvalues().cast<cplx>() * cplx{0.0, -t}).array().exp().matrix();
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

std::string TrotterTerm::label() const {
    if (kind == Kind::Drive) {
        return "drive[" + std::to_string(first) + "]";
    }
    return "pair[" + std::to_string(first) + "," + std::to_string(second) + "]";
}

std::vector<TrotterTerm> trotter_term_order(const HamiltonianSpec &spec) {
    std::vector<TrotterTerm> terms;
    for (int q = 0; q < spec.n_spins; ++q) {
        terms.push_back({TrotterTerm::Kind::Drive, q, q});
    }
    for (int i = 0; i < spec.n_spins; ++i) {
        for (int j = i + 1; j < spec.n_spins; ++j) {
            if (spec.coupling(i, j) != 0.0) {
                terms.push_back({TrotterTerm::Kind::Pair, i, j});
            }
        }
    }
    return terms;
}

void TrotterPlan::validate() const {
    if (steps < 1) {
        throw ArgumentError("Trotter steps must be >= 1");
    }
    if (!std::isfinite(total_time)) {
        throw ArgumentError("Trotter total_time must be finite");
    }
}

Circuit trotter_step_circuit(const HamiltonianSpec &spec, double dt) {
    spec.validate();
    Circuit c(spec.n_spins);
    const auto terms = trotter_term_order(spec);
    // The product reads left to right; the rightmost factor acts first.
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto &term = *it;
        if (term.kind == TrotterTerm::Kind::Drive) {
            c.u3(2.0 * spec.omega * dt, 1.5 * std::numbers::pi, 0.5 * std::numbers::pi, term.first);
            continue;
        }
        const double angle = spec.coupling(term.first, term.second) * dt;
        if (spec.form == InteractionForm::PauliZZ) {
            c.cx(term.first, term.second);
            c.u1(2.0 * angle, term.second);
            c.cx(term.first, term.second);
            c.add_global_phase(-angle);
        } else {
            c.cu1(-angle, term.first, term.second);
        }
    }
    return c;
}

Circuit trotterized_evolution(const HamiltonianSpec &spec, const TrotterPlan &plan) {
    plan.validate();
    const double dt = plan.total_time / plan.steps;
    const Circuit step = trotter_step_circuit(spec, dt);
    Circuit out(spec.n_spins);
    for (int s = 0; s < plan.steps; ++s) {
        out.append(step);
    }
    return out;
}

GateMatrix trotter_step_matrix(const HamiltonianSpec &spec, double dt) {
    spec.validate();
    const std::size_t dim = std::size_t{1} << spec.n_spins;
    GateMatrix m = GateMatrix::Identity(dim, dim);
    for (const auto &term : trotter_term_order(spec)) {
        m = m * exact_evolution(term_matrix(spec, term), dt);
    }
    return m;
}

}  // namespace otocsim
