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

#include "otocsim/compiler.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "otocsim/errors.hpp"

namespace otocsim {

namespace {

constexpr double kZeroTol = 1e-14;

bool near_identity(const Eigen::Matrix2cd &m) {
    return (m - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < kZeroTol;
}

// Apply a 2x2 block to rows (r0, r1) of `a`.
void rotate_rows(GateMatrix &a, Eigen::Index r0, Eigen::Index r1, const Eigen::Matrix2cd &g) {
    for (Eigen::Index col = 0; col < a.cols(); ++col) {
        const cplx x0 = a(r0, col);
        const cplx x1 = a(r1, col);
        a(r0, col) = g(0, 0) * x0 + g(0, 1) * x1;
        a(r1, col) = g(1, 0) * x0 + g(1, 1) * x1;
    }
}

void append_phase(Circuit &circuit, double phase, const std::vector<Control> &controls) {
    if (std::abs(std::remainder(phase, 2.0 * std::numbers::pi)) < kZeroTol) {
        return;
    }
    if (controls.empty()) {
        circuit.add_global_phase(phase);
        return;
    }
    for (std::size_t k = 0; k < controls.size(); ++k) {
        if (!controls[k].on_zero) {
            std::vector<Control> rest = controls;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
            circuit.u1(phase, controls[k].qubit, std::move(rest));
            return;
        }
    }
    const int q = controls.front().qubit;
    std::vector<Control> rest(controls.begin() + 1, controls.end());
    if (rest.empty()) {
        // diag(e^{i phase}, 1) = e^{i phase} u1(-phase)
        circuit.u1(-phase, q);
        circuit.add_global_phase(phase);
        return;
    }
    circuit.x(q);
    circuit.u1(phase, q, rest);
    circuit.x(q);
}

void append_positive_controlled(Circuit &out, const Eigen::Matrix2cd &u, const std::vector<Control> &controls,
                                int target) {
    if (controls.size() <= 1) {
        append_controlled_gate(out, u, controls, target);
        return;
    }
    const Eigen::Matrix2cd s = sqrt_unitary(u);
    const Control last = controls.back();
    const std::vector<Control> rest(controls.begin(), controls.end() - 1);
    const Eigen::Matrix2cd px = x();
    append_controlled_gate(out, s, {last}, target);
    append_positive_controlled(out, px, rest, last.qubit);
    append_controlled_gate(out, s.adjoint(), {last}, target);
    append_positive_controlled(out, px, rest, last.qubit);
    append_positive_controlled(out, s, rest, target);
}

}  // namespace

GateMatrix TwoLevelFactor::embed() const {
    GateMatrix m = GateMatrix::Identity(dim, dim);
    const auto ii = static_cast<Eigen::Index>(i);
    const auto jj = static_cast<Eigen::Index>(j);
    m(ii, ii) = block(0, 0);
    m(ii, jj) = block(0, 1);
    m(jj, ii) = block(1, 0);
    m(jj, jj) = block(1, 1);
    return m;
}

std::vector<TwoLevelFactor> two_level_decompose(const GateMatrix &u) {
    require_unitary(u);
    const auto dim = static_cast<std::size_t>(u.rows());
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw SizeError("dimension " + std::to_string(dim) + " is not a power of two >= 2");
    }
    GateMatrix a = u;
    std::vector<TwoLevelFactor> factors;
    const auto d = static_cast<Eigen::Index>(dim);
    // Zero the sub-diagonal of columns 0..d-3 and make their diagonals 1;
    // what remains is a single two-level block on (d-2, d-1).
    for (Eigen::Index c = 0; c + 2 < d; ++c) {
        for (Eigen::Index r = c + 1; r < d; ++r) {
            const cplx av = a(c, c);
            const cplx bv = a(r, c);
            const bool last = r == d - 1;
            Eigen::Matrix2cd g;
            if (std::abs(bv) < kZeroTol) {
                if (!last || std::abs(av - 1.0) < kZeroTol) {
                    continue;
                }
                g << std::conj(av), 0.0, 0.0, av;
            } else {
                const double n = std::hypot(std::abs(av), std::abs(bv));
                g << std::conj(av) / n, std::conj(bv) / n, -bv / n, av / n;
            }
            rotate_rows(a, c, r, g);
            factors.push_back({dim, static_cast<std::size_t>(c), static_cast<std::size_t>(r), g.adjoint()});
        }
    }
    const Eigen::Matrix2cd rest = a.block(d - 2, d - 2, 2, 2);
    if (!near_identity(rest)) {
        factors.push_back({dim, dim - 2, dim - 1, rest});
    }
    return factors;
}

GateMatrix multiply_factors(const std::vector<TwoLevelFactor> &factors, std::size_t dim) {
    GateMatrix m = GateMatrix::Identity(dim, dim);
    for (const auto &f : factors) {
        if (f.dim != dim) {
            throw SizeError("factor dimension mismatch");
        }
        m = m * f.embed();
    }
    return m;
}

std::vector<std::size_t> gray_path(std::size_t i, std::size_t j, int n_bits) {
    if (n_bits < 1 || n_bits > 62) {
        throw ArgumentError("n_bits must be in [1, 62]");
    }
    const std::size_t limit = std::size_t{1} << n_bits;
    if (i >= limit || j >= limit) {
        throw ArgumentError("basis index does not fit in " + std::to_string(n_bits) + " bits");
    }
    if (i == j) {
        throw ArgumentError("gray_path endpoints must differ");
    }
    std::vector<std::size_t> path{i};
    std::size_t cur = i;
    while (cur != j) {
        const std::size_t diff = cur ^ j;
        cur ^= diff & (~diff + 1);  // lowest differing bit
        path.push_back(cur);
    }
    return path;
}

std::string to_bits(std::size_t value, int n_bits) {
    std::string s(static_cast<std::size_t>(n_bits), '0');
    for (int b = 0; b < n_bits; ++b) {
        if ((value >> b) & 1U) {
            s[static_cast<std::size_t>(n_bits - 1 - b)] = '1';
        }
    }
    return s;
}

void append_controlled_gate(Circuit &circuit, const Eigen::Matrix2cd &u, const std::vector<Control> &controls,
                            int target) {
    if (near_identity(u)) {
        return;
    }
    const bool diagonal = std::abs(u(0, 1)) < kZeroTol && std::abs(u(1, 0)) < kZeroTol;
    const bool antidiagonal = std::abs(u(0, 0)) < kZeroTol && std::abs(u(1, 1)) < kZeroTol;
    double phase = 0.0;
    if (antidiagonal && std::abs(u(0, 1) - u(1, 0)) < kZeroTol) {
        phase = std::arg(u(1, 0));
        circuit.x(target, controls);
    } else if (diagonal) {
        phase = std::arg(u(0, 0));
        const double lambda = std::arg(u(1, 1)) - phase;
        if (std::abs(std::remainder(lambda, 2.0 * std::numbers::pi)) >= kZeroTol) {
            circuit.u1(lambda, target, controls);
        }
    } else {
        const U3Form f = to_u3(u);
        phase = f.global_phase;
        circuit.u3(f.params.theta, f.params.phi, f.params.lambda, target, controls);
    }
    append_phase(circuit, phase, controls);
}

Circuit compile_two_level(const TwoLevelFactor &factor, int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits || factor.dim != (std::size_t{1} << n_qubits)) {
        throw SizeError("factor dimension " + std::to_string(factor.dim) + " does not match " +
                        std::to_string(n_qubits) + " qubits");
    }
    if (factor.i >= factor.dim || factor.j >= factor.dim || factor.i == factor.j) {
        throw ArgumentError("two-level factor needs distinct in-range indices");
    }
    Circuit circuit(n_qubits);
    if (near_identity(factor.block)) {
        return circuit;
    }
    const auto path = gray_path(factor.i, factor.j, n_qubits);

    auto flipped_bit = [](std::size_t a, std::size_t b) { return std::countr_zero(a ^ b); };
    auto controls_from = [n_qubits](std::size_t state, int target) {
        std::vector<Control> cs;
        for (int q = 0; q < n_qubits; ++q) {
            if (q != target) {
                cs.push_back({q, ((state >> q) & 1U) == 0});
            }
        }
        return cs;
    };

    Circuit routing(n_qubits);
    for (std::size_t k = 0; k + 2 < path.size(); ++k) {
        const int bit = flipped_bit(path[k], path[k + 1]);
        routing.x(bit, controls_from(path[k], bit));
    }

    const std::size_t near = path[path.size() - 2];
    const int target = flipped_bit(near, path.back());
    Eigen::Matrix2cd core = factor.block;
    if ((near >> target) & 1U) {
        const Eigen::Matrix2cd px = x();
        core = px * core * px;
    }

    circuit.append(routing);
    append_controlled_gate(circuit, core, controls_from(near, target), target);
    circuit.append(inverse(routing));
    return circuit;
}

CompiledUnitary compile_unitary(const GateMatrix &u, int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits || u.rows() != (Eigen::Index{1} << n_qubits)) {
        throw SizeError("unitary dimension " + std::to_string(u.rows()) + " does not match " +
                        std::to_string(n_qubits) + " qubits");
    }
    const auto factors = two_level_decompose(u);
    Circuit circuit(n_qubits);
    // factors multiply left to right, so the last one acts first
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        circuit.append(compile_two_level(*it, n_qubits));
    }
    const double alpha = -circuit.global_phase();
    circuit.set_global_phase(0.0);
    return {std::move(circuit), std::remainder(alpha, 2.0 * std::numbers::pi)};
}

Circuit lower_controls(const Circuit &circuit) {
    Circuit out(circuit.n_qubits());
    for (const auto &op : circuit.ops()) {
        if (!op.is_unitary_gate() || op.controls.size() <= 1) {
            out.add(op);
            continue;
        }
        std::vector<Control> positive;
        for (const auto &c : op.controls) {
            if (c.on_zero) {
                out.x(c.qubit);
            }
            positive.push_back({c.qubit, false});
        }
        append_positive_controlled(out, op.base_matrix(), positive, op.targets.front());
        for (const auto &c : op.controls) {
            if (c.on_zero) {
                out.x(c.qubit);
            }
        }
    }
    out.add_global_phase(circuit.global_phase());
    return out;
}

}  // namespace otocsim
