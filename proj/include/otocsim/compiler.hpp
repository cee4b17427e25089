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

#include <cstddef>
#include <vector>

#include "otocsim/circuit.hpp"

namespace otocsim {

/// A unitary that acts as `block` on span{|i>, |j>} and as the identity on
/// every other basis state of a `dim`-dimensional space.
struct TwoLevelFactor {
    std::size_t dim = 2;
    std::size_t i = 0;
    std::size_t j = 1;
    Eigen::Matrix2cd block = Eigen::Matrix2cd::Identity();

    /// The full dim x dim matrix.
    GateMatrix embed() const;
};

/**
 * Factor a unitary into two-level unitaries by column-wise Givens
 * elimination. The product factors[0] * factors[1] * ... equals `u`. Factors
 * that are the identity are omitted, so the count is at most dim(dim-1)/2.
 * Throws UnitarityError for non-unitary input and SizeError when the
 * dimension is not a power of two.
 */
std::vector<TwoLevelFactor> two_level_decompose(const GateMatrix &u);

/// Ordered product of the embedded factors.
GateMatrix multiply_factors(const std::vector<TwoLevelFactor> &factors, std::size_t dim);

/// Basis indices from `i` to `j`, flipping the lowest differing bit first.
/// Adjacent entries differ in exactly one bit. Throws ArgumentError if i == j
/// or either index needs more than `n_bits` bits.
std::vector<std::size_t> gray_path(std::size_t i, std::size_t j, int n_bits);

/// Render a path entry as an n_bits-wide binary string, most significant first.
std::string to_bits(std::size_t value, int n_bits);

/**
 * Gate-level circuit for one two-level factor.
 *
 * Routing X gates walk |i> along the Gray path to the neighbour of |j>, one
 * controlled single-qubit core gate applies the block, and the routing is
 * undone in mirrored order. Every gate is controlled on all qubits except its
 * target. For two qubits every op has at most one control; wider registers
 * produce multi-controlled ops (see lower_controls). The circuit's global
 * phase is set so that circuit_unitary() equals factor.embed().
 */
Circuit compile_two_level(const TwoLevelFactor &factor, int n_qubits);

/// Gates whose matrix equals e^{i global_phase} times the compiled unitary.
struct CompiledUnitary {
    Circuit circuit;
    double global_phase = 0.0;
};

/**
 * Compile `u` into X/U1/U3 gates with controls via two-level factors.
 *
 * The returned circuit carries no global phase of its own; the discrepancy
 * alpha is reported separately so callers that control the circuit can
 * compensate it with u1(-alpha) on the control.
 */
CompiledUnitary compile_unitary(const GateMatrix &u, int n_qubits);

/// Append `u` on `target` conditioned on `controls`, using the cheapest exact
/// form (x, u1 or u3) plus a phase gate on a control when `u` carries a
/// phase. With no controls the phase goes into the circuit's global phase.
void append_controlled_gate(Circuit &circuit, const Eigen::Matrix2cd &u, const std::vector<Control> &controls,
                            int target);

/// Rewrite every op with two or more controls into ops with at most one,
/// using the square-root recursion C^k(U) = C(S) C^{k-1}(X) C(S^dag)
/// C^{k-1}(X) C^{k-1}(S) with S^2 = U. Anti-controls are conjugated by X.
Circuit lower_controls(const Circuit &circuit);

}  // namespace otocsim
