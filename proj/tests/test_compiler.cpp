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

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "otocsim/compiler.hpp"
#include "otocsim/errors.hpp"
#include "otocsim/hamiltonian.hpp"
#include "otocsim/protocol.hpp"
#include "test_util.hpp"

using namespace otocsim;

namespace {

const cplx I(0.0, 1.0);

void expect_reconstructs(const GateMatrix &u, int n, double tol) {
    const CompiledUnitary cu = compile_unitary(u, n);
    EXPECT_DOUBLE_EQ(cu.circuit.global_phase(), 0.0);
    EXPECT_LT(max_abs_diff(circuit_unitary(cu.circuit), std::exp(I * cu.global_phase) * u), tol);
}

}  // namespace

TEST(TwoLevelDecompose, Identity) {
    EXPECT_TRUE(two_level_decompose(GateMatrix::Identity(4, 4)).empty());
}

TEST(TwoLevelDecompose, ButterflyOperator) {
    GateMatrix v = GateMatrix::Zero(4, 4);
    v.diagonal() << -I, 1.0, 1.0, I;
    const auto factors = two_level_decompose(v);
    EXPECT_LT(max_abs_diff(multiply_factors(factors, 4), v), 1e-10);
}

TEST(TwoLevelDecompose, RandomUnitaries) {
    for (int dim : {2, 4, 8}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const GateMatrix u = testutil::random_unitary(dim, seed);
            const auto factors = two_level_decompose(u);
            EXPECT_LE(factors.size(), static_cast<std::size_t>(dim * (dim - 1) / 2));
            EXPECT_LT(max_abs_diff(multiply_factors(factors, static_cast<std::size_t>(dim)), u), 1e-9);
            for (const auto &f : factors) {
                EXPECT_LT(f.i, f.j);
                EXPECT_LT(unitarity_defect(f.block), 1e-12);
            }
        }
    }
}

TEST(TwoLevelDecompose, Errors) {
    EXPECT_THROW(two_level_decompose(GateMatrix::Identity(3, 3)), SizeError);
    EXPECT_THROW(two_level_decompose(GateMatrix::Ones(4, 4)), UnitarityError);
}

TEST(GrayPath, Examples) {
    EXPECT_EQ(gray_path(0b01, 0b11, 2), (std::vector<std::size_t>{0b01, 0b11}));
    EXPECT_EQ(gray_path(0b00, 0b11, 2), (std::vector<std::size_t>{0b00, 0b01, 0b11}));
    EXPECT_EQ(gray_path(0b001, 0b100, 3), (std::vector<std::size_t>{0b001, 0b000, 0b100}));
    EXPECT_THROW(gray_path(1, 1, 2), ArgumentError);
    EXPECT_THROW(gray_path(0, 4, 2), ArgumentError);
}

TEST(GrayPath, ValidityProperty) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const std::size_t dim = std::size_t{1} << n;
        const std::size_t i = rng() % dim;
        std::size_t j = rng() % dim;
        if (i == j) {
            j = (i + 1) % dim;
        }
        if (i == j) {
            continue;
        }
        const auto path = gray_path(i, j, n);
        ASSERT_GE(path.size(), 2U);
        EXPECT_EQ(path.front(), i);
        EXPECT_EQ(path.back(), j);
        EXPECT_EQ(path.size(), static_cast<std::size_t>(std::popcount(i ^ j)) + 1);
        for (std::size_t k = 1; k < path.size(); ++k) {
            EXPECT_EQ(std::popcount(path[k] ^ path[k - 1]), 1);
        }
    }
}

TEST(CompileTwoLevel, IdentityBlockIsEmpty) {
    TwoLevelFactor f{4, 1, 2, Eigen::Matrix2cd::Identity()};
    EXPECT_TRUE(compile_two_level(f, 2).empty());
}

TEST(CompileTwoLevel, AdjacentXIsOneCnot) {
    TwoLevelFactor f{4, 2, 3, Eigen::Matrix2cd(x())};
    const Circuit c = compile_two_level(f, 2);
    ASSERT_EQ(c.size(), 1U);
    const Op &op = c.ops()[0];
    EXPECT_EQ(op.kind, GateKind::X);
    ASSERT_EQ(op.controls.size(), 1U);
    EXPECT_EQ(op.controls[0].qubit, 1);
    EXPECT_FALSE(op.controls[0].on_zero);
    EXPECT_EQ(op.targets[0], 0);
    EXPECT_LT(max_abs_diff(circuit_unitary(c), cnot()), 1e-15);
}

TEST(CompileTwoLevel, RoutedFactorReconstructs) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        TwoLevelFactor f{4, 0, 3, Eigen::Matrix2cd(testutil::random_unitary(2, seed))};
        const Circuit c = compile_two_level(f, 2);
        EXPECT_LT(max_abs_diff(circuit_unitary(c), f.embed()), 1e-12);
    }
}

TEST(CompileTwoLevel, RoutingIsMirrored) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        std::mt19937_64 rng(seed);
        const int n = 3;
        const std::size_t i = rng() % 8;
        std::size_t j = rng() % 8;
        if (i == j) {
            j = (i + 3) % 8;
        }
        TwoLevelFactor f{8, std::min(i, j), std::max(i, j), Eigen::Matrix2cd(testutil::random_unitary(2, seed))};
        const Circuit c = compile_two_level(f, n);
        EXPECT_LT(max_abs_diff(circuit_unitary(c), f.embed()), 1e-12);
        // routing X gates come in mirrored pairs around the core
        const auto &ops = c.ops();
        std::size_t routing = 0;
        while (routing < ops.size() && ops[routing].kind == GateKind::X &&
               ops[routing] == ops[ops.size() - 1 - routing] && routing < ops.size() - 1 - routing) {
            ++routing;
        }
        const std::size_t hops = static_cast<std::size_t>(std::popcount(f.i ^ f.j)) - 1;
        EXPECT_GE(routing, hops) << seed;
    }
}

TEST(CompileUnitary, Cnot) {
    const CompiledUnitary cu = compile_unitary(cnot(), 2);
    EXPECT_LT(max_abs_diff(circuit_unitary(cu.circuit), std::exp(I * cu.global_phase) * cnot()), 1e-12);
    EXPECT_LT(projective_distance(circuit_unitary(cu.circuit), cnot()), 1e-12);
}

TEST(CompileUnitary, ButterflyOperator) {
    GateMatrix expect = GateMatrix::Zero(4, 4);
    expect.diagonal() << -I, 1.0, 1.0, I;
    const GateMatrix v = butterfly_operator(std::numbers::pi / 4, 2);
    EXPECT_LT(max_abs_diff(v, expect), 1e-15);
    const CompiledUnitary cu = compile_unitary(v, 2);
    EXPECT_LT(projective_distance(circuit_unitary(cu.circuit), expect), 1e-10);
}

TEST(CompileUnitary, ExactEvolution) {
    const GateMatrix u = exact_evolution(build_hamiltonian(HamiltonianSpec::two_spin()), 1.0);
    expect_reconstructs(u, 2, 1e-8);
}

TEST(CompileUnitary, RandomUnitaries) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        expect_reconstructs(testutil::random_unitary(4, 1000 + seed), 2, 1e-8);
    }
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        expect_reconstructs(testutil::random_unitary(8, 2000 + seed), 3, 1e-8);
    }
}

TEST(CompileUnitary, Errors) {
    EXPECT_THROW(compile_unitary(GateMatrix::Identity(4, 4), 3), SizeError);
}

TEST(LowerControls, MultiControlledGates) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        std::mt19937_64 rng(seed);
        const int n = 4;
        const GateMatrix u = testutil::random_unitary(2, seed);
        Circuit c(n);
        std::vector<Control> controls;
        const int target = static_cast<int>(seed % 4);
        for (int q = 0; q < n; ++q) {
            if (q != target && rng() % 3 != 0) {
                controls.push_back({q, rng() % 2 == 0});
            }
        }
        append_controlled_gate(c, Eigen::Matrix2cd(u), controls, target);
        const Circuit lowered = lower_controls(c);
        for (const auto &op : lowered.ops()) {
            EXPECT_LE(op.controls.size(), 1U);
        }
        EXPECT_LT(max_abs_diff(circuit_unitary(lowered), circuit_unitary(c)), 1e-10) << seed;

        // oracle: identity except the 2x2 block where all controls match
        GateMatrix expect = GateMatrix::Identity(16, 16);
        for (std::size_t k = 0; k < 16; ++k) {
            bool active = ((k >> target) & 1) == 0;
            for (const auto &ctl : controls) {
                active = active && (((k >> ctl.qubit) & 1) == (ctl.on_zero ? 0U : 1U));
            }
            if (active) {
                const auto a = static_cast<Eigen::Index>(k);
                const auto b = static_cast<Eigen::Index>(k | (std::size_t{1} << target));
                expect(a, a) = u(0, 0);
                expect(a, b) = u(0, 1);
                expect(b, a) = u(1, 0);
                expect(b, b) = u(1, 1);
            }
        }
        EXPECT_LT(max_abs_diff(circuit_unitary(c), expect), 1e-10) << seed;
    }
}
