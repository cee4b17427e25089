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
#include <string_view>

#include "otocsim/circuit.hpp"

namespace otocsim {

/**
 * Rewrite a circuit into the statements the QASM subset can express:
 * x, h, u1, u3, cx, measure and barrier.
 *
 *  - anti-controls are conjugated by x on the control,
 *  - controlled u1 becomes u1/cx/u1/cx/u1 (exact),
 *  - controlled u3 and controlled h become the u1/u3/cx pattern of cu3
 *    (exact, no residual phase).
 *
 * Ops with two or more controls raise EmissionError; run lower_controls
 * first. The global phase is kept on the returned circuit.
 */
Circuit lower_to_qasm_basis(const Circuit &circuit);

/**
 * OpenQASM 2.0 text for `circuit`.
 *
 * Layout: `OPENQASM 2.0;`, `include "qelib1.inc";`, `qreg q[n];`, a
 * `creg c[m];` only when the circuit measures, then one statement per line.
 * Angles use 17 significant digits so doubles survive a round trip. The
 * global phase is not written.
 */
std::string emit_qasm(const Circuit &circuit);

/**
 * Parse the subset written by emit_qasm. Parameters accept numeric literals,
 * `pi`, unary minus, + - * / and parentheses. Grammar errors raise
 * SyntaxError with the 1-based line and column; well-formed statements
 * outside the subset (other gates, `gate`, `if`, `opaque`, `reset`, a second
 * register) raise CapabilityError naming the location.
 */
Circuit parse_qasm(std::string_view text);

}  // namespace otocsim
