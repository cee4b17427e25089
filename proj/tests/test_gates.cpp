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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "otocsim/errors.hpp"
#include "otocsim/gates.hpp"
#include "test_util.hpp"

using namespace otocsim;
using std::numbers::pi;

namespace {

const cplx I(0.0, 1.0);

GateMatrix diag(std::initializer_list<cplx> entries) {
    GateMatrix m = GateMatrix::Zero(static_cast<Eigen::Index>(entries.size()), static_cast<Eigen::Index>(entries.size()));
    Eigen::Index k = 0;
    for (cplx e : entries) {
        m(k, k) = e;
        ++k;
    }
    return m;
}

}  // namespace

TEST(U1, Examples) {
    EXPECT_LT(max_abs_diff(u1(0.0), GateMatrix::Identity(2, 2)), 1e-15);
    EXPECT_LT(max_abs_diff(u1(pi), diag({1.0, -1.0})), 1e-15);
    EXPECT_LT(max_abs_diff(u1(pi / 2), diag({1.0, I})), 1e-15);
}

TEST(U3, Examples) {
    EXPECT_LT(max_abs_diff(u3(0, 0, 0), GateMatrix::Identity(2, 2)), 1e-15);
    EXPECT_LT(max_abs_diff(u3(pi, 0, pi), x()), 1e-15);
    EXPECT_LT(max_abs_diff(u3(pi / 2, 0, pi), h()), 1e-15);
}

TEST(U3, MatchesExplicitFormula) {
    const double th = 0.7, ph = -1.1, la = 2.3;
    GateMatrix m(2, 2);
    m(0, 0) = std::cos(th / 2);
    m(0, 1) = -std::exp(I * la) * std::sin(th / 2);
    m(1, 0) = std::exp(I * ph) * std::sin(th / 2);
    m(1, 1) = std::exp(I * (ph + la)) * std::cos(th / 2);
    EXPECT_LT(max_abs_diff(u3(th, ph, la), m), 1e-15);
}

TEST(FixedGates, Involutions) {
    EXPECT_LT(max_abs_diff(x() * x(), GateMatrix::Identity(2, 2)), 1e-15);
    EXPECT_LT(max_abs_diff(h() * h(), GateMatrix::Identity(2, 2)), 1e-15);
    EXPECT_LT(max_abs_diff(cnot() * cnot(), GateMatrix::Identity(4, 4)), 1e-15);
}

TEST(FixedGates, CnotControlIsHighBit) {
    // |10> (index 2) -> |11> (index 3)
    EXPECT_EQ(cnot()(3, 2), cplx(1.0));
    EXPECT_EQ(cnot()(1, 1), cplx(1.0));
}

TEST(Controlled, Examples) {
    EXPECT_LT(max_abs_diff(controlled(x()), cnot()), 1e-15);
    EXPECT_LT(max_abs_diff(controlled(GateMatrix::Identity(2, 2)), GateMatrix::Identity(4, 4)), 1e-15);
    const double a = 0.37;
    EXPECT_LT(max_abs_diff(controlled(u1(a)), diag({1.0, 1.0, 1.0, std::exp(I * a)})), 1e-15);
}

TEST(Controlled, Errors) {
    GateMatrix bad = GateMatrix::Ones(2, 2);
    EXPECT_THROW(controlled(bad), UnitarityError);
    EXPECT_THROW(controlled(GateMatrix::Identity(4, 4)), SizeError);
}

TEST(GateProperties, ConstructorsAreUnitary) {
    for (const GateMatrix &g : {x(), y(), z(), h(), cnot(), u1(0.3), u3(1.0, 2.0, 3.0), controlled(u3(0.4, 0.5, 0.6))}) {
        EXPECT_LT(unitarity_defect(g), 1e-12);
    }
}

TEST(GateProperties, ZeroThetaU3IsU1UpToPhase) {
    for (double ph : {0.0, 0.4, -2.0}) {
        for (double la : {0.0, 1.3, 3.0}) {
            EXPECT_LT(projective_distance(u3(0.0, ph, la), u1(ph + la)), 1e-12);
        }
    }
}

TEST(GateProperties, ToU3RoundTrip) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const GateMatrix u = testutil::random_unitary(2, seed);
        const U3Form f = to_u3(u);
        const GateMatrix rebuilt = std::exp(I * f.global_phase) * u3(f.params);
        EXPECT_LT(max_abs_diff(rebuilt, u), 1e-12) << seed;
    }
    for (const GateMatrix &u : {x(), z(), h(), u1(0.2), GateMatrix(GateMatrix::Identity(2, 2)), y()}) {
        const U3Form f = to_u3(u);
        EXPECT_LT(max_abs_diff(std::exp(I * f.global_phase) * u3(f.params), u), 1e-12);
    }
}

TEST(GateProperties, SqrtUnitary) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const GateMatrix u = testutil::random_unitary(2, seed);
        const GateMatrix s = sqrt_unitary(u);
        EXPECT_LT(unitarity_defect(s), 1e-12);
        EXPECT_LT(max_abs_diff(s * s, u), 1e-12);
    }
    for (const GateMatrix &u : {x(), z(), GateMatrix(-GateMatrix::Identity(2, 2)), GateMatrix(GateMatrix::Identity(2, 2))}) {
        const GateMatrix s = sqrt_unitary(u);
        EXPECT_LT(max_abs_diff(s * s, u), 1e-12);
    }
}

TEST(GateProperties, ProjectiveDistanceIgnoresGlobalPhase) {
    const GateMatrix u = testutil::random_unitary(4, 11);
    EXPECT_LT(projective_distance(std::exp(I * 1.234) * u, u), 1e-12);
    EXPECT_NEAR(relative_phase(std::exp(I * 1.234) * u, u), 1.234, 1e-12);
    EXPECT_GT(projective_distance(u, testutil::random_unitary(4, 12)), 1e-3);
}

TEST(WrapAngle, Range) {
    EXPECT_DOUBLE_EQ(wrap_angle(0.0), 0.0);
    EXPECT_NEAR(wrap_angle(-pi / 2), 3 * pi / 2, 1e-15);
    EXPECT_NEAR(wrap_angle(5 * pi), pi, 1e-14);
}
