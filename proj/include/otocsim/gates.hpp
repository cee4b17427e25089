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

#include "otocsim/statevector.hpp"

namespace otocsim {

/// Euler-angle parameters of the U3 gate, in radians.
struct GateParams {
    double theta = 0.0;
    double phi = 0.0;
    double lambda = 0.0;

    /// Angles reduced into [0, 2pi) for comparisons.
    GateParams canonical() const;
};

/// Reduce an angle into [0, 2pi).
double wrap_angle(double radians);

/// diag(1, e^{i lambda}).
GateMatrix u1(double lambda);

/// [[cos(t/2), -e^{il} sin(t/2)], [e^{ip} sin(t/2), e^{i(p+l)} cos(t/2)]].
GateMatrix u3(double theta, double phi, double lambda);
GateMatrix u3(const GateParams &p);

GateMatrix x();
GateMatrix y();
GateMatrix z();
GateMatrix h();

/// CNOT with the control on the high local qubit (local index bit 1) and the
/// target on the low one; equals controlled(x()).
GateMatrix cnot();

/// Block-diagonal [I, u]: u acts on local qubit 0 when local qubit 1 is set.
/// Throws UnitarityError if u is not a 2x2 unitary.
GateMatrix controlled(const GateMatrix &u);

/// u = e^{i global_phase} * u3(params) with theta in [0, pi].
struct U3Form {
    double global_phase = 0.0;
    GateParams params;
};

/// Factor an arbitrary 2x2 unitary into a global phase and a U3 gate.
U3Form to_u3(const GateMatrix &u);

/// A square root S of a 2x2 unitary (S * S == u), itself unitary.
GateMatrix sqrt_unitary(const GateMatrix &u);

/// min over phi of max|a - e^{i phi} b|, with phi chosen from the largest
/// entry of b. Zero iff a and b agree up to global phase.
double projective_distance(const GateMatrix &a, const GateMatrix &b);

/// The phase alpha with a ~= e^{i alpha} b, read off the largest entry of b.
double relative_phase(const GateMatrix &a, const GateMatrix &b);

/// max |a - b|.
double max_abs_diff(const GateMatrix &a, const GateMatrix &b);

}  // namespace otocsim
