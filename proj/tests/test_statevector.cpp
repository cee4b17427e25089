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
#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "otocsim/errors.hpp"
#include "otocsim/gates.hpp"
#include "otocsim/hamiltonian.hpp"
#include "test_util.hpp"

using namespace otocsim;
using testutil::to_vector;

namespace {

const double kRt2 = 1.0 / std::sqrt(2.0);

StateVector basis(int n, std::size_t index) {
    std::vector<cplx> a(std::size_t{1} << n, 0.0);
    a[index] = 1.0;
    return StateVector::from_amplitudes(std::move(a));
}

}  // namespace

TEST(NewZeroState, Examples) {
    auto s1 = new_zero_state(1);
    EXPECT_EQ(s1.size(), 2U);
    EXPECT_EQ(s1[0], cplx(1.0));
    EXPECT_EQ(s1[1], cplx(0.0));

    auto s2 = new_zero_state(2);
    ASSERT_EQ(s2.size(), 4U);
    EXPECT_EQ(s2[0], cplx(1.0));
    for (std::size_t k = 1; k < 4; ++k) {
        EXPECT_EQ(s2[k], cplx(0.0));
    }

    auto s3 = new_zero_state(3);
    EXPECT_EQ(s3[0], cplx(1.0));
    EXPECT_DOUBLE_EQ(s3.norm_squared(), 1.0);
}

TEST(NewZeroState, RejectsBadSizes) {
    EXPECT_THROW(new_zero_state(0), SizeError);
    EXPECT_THROW(new_zero_state(-3), SizeError);
    EXPECT_THROW(new_zero_state(kMaxQubits + 1), SizeError);
}

TEST(FromAmplitudes, RejectsBadInput) {
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), SizeError);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}), Error);
}

TEST(Apply1q, Examples) {
    auto plus = apply_1q(new_zero_state(1), h(), 0);
    EXPECT_NEAR(std::abs(plus[0] - kRt2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(plus[1] - kRt2), 0.0, 1e-15);

    auto flipped = apply_1q(new_zero_state(2), x(), 0);
    EXPECT_EQ(flipped[1], cplx(1.0));
    EXPECT_EQ(flipped[0], cplx(0.0));

    auto psi = testutil::random_state(3, 7);
    auto same = apply_1q(psi, GateMatrix::Identity(2, 2), 1);
    EXPECT_LT(testutil::max_diff(to_vector(psi), to_vector(same)), 1e-15);
}

TEST(Apply1q, Errors) {
    GateMatrix bad = GateMatrix::Identity(2, 2);
    bad(0, 0) = 2.0;
    EXPECT_THROW(apply_1q(new_zero_state(2), bad, 0), UnitarityError);
    EXPECT_THROW(apply_1q(new_zero_state(2), GateMatrix::Identity(4, 4), 0), SizeError);
    EXPECT_THROW(apply_1q(new_zero_state(2), x(), 2), IndexError);
    EXPECT_THROW(apply_1q(new_zero_state(2), x(), -1), IndexError);
}

TEST(ApplyControlled, Examples) {
    // control qubit 1 is |0> everywhere
    auto inactive = apply_1q(new_zero_state(2), h(), 0);
    auto out = apply_controlled(inactive, x(), 1, 0);
    EXPECT_LT(testutil::max_diff(to_vector(inactive), to_vector(out)), 1e-15);

    // (|10> + |00>)/sqrt2 with control = qubit 1 (the high bit)
    auto psi = StateVector::from_amplitudes({kRt2, 0.0, kRt2, 0.0});
    auto bell = apply_controlled(psi, x(), 1, 0);
    EXPECT_NEAR(std::abs(bell[0] - kRt2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(bell[3] - kRt2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(bell[2]), 0.0, 1e-15);

    auto phased = apply_controlled(basis(2, 3), u1(std::numbers::pi / 2), 1, 0);
    EXPECT_NEAR(std::abs(phased[3] - cplx(0.0, 1.0)), 0.0, 1e-15);
}

TEST(ApplyControlled, Errors) {
    EXPECT_THROW(apply_controlled(new_zero_state(2), x(), 0, 0), IndexError);
    EXPECT_THROW(apply_controlled(new_zero_state(2), x(), 2, 0), IndexError);
}

TEST(ApplyControlled, AntiControlEqualsXConjugation) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 3;
        auto psi = testutil::random_state(n, seed);
        const GateMatrix u = testutil::random_unitary(2, seed + 100);
        const int c = static_cast<int>(seed % 3);
        const int t = (c + 1 + static_cast<int>(seed / 3 % 2)) % 3;
        auto direct = apply_controlled(psi, u, c, t, true);
        auto via_x = apply_1q(apply_controlled(apply_1q(psi, x(), c), u, c, t, false), x(), c);
        EXPECT_LT(testutil::max_diff(to_vector(direct), to_vector(via_x)), 1e-10);
    }
}

TEST(ApplyControlled, MatchesKroneckerOracle) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 4;
        const int c = static_cast<int>(seed % 4);
        const int t = static_cast<int>((seed + 1 + seed / 4 % 3) % 4);
        const bool anti = seed % 2 == 1;
        auto psi = testutil::random_state(n, seed);
        const GateMatrix u = testutil::random_unitary(2, seed);
        const Eigen::VectorXcd expect = testutil::embed_controlled(u, c, t, n, anti) * to_vector(psi);
        EXPECT_LT(testutil::max_diff(to_vector(apply_controlled(psi, u, c, t, anti)), expect), 1e-12);
    }
}

TEST(ApplyDense, Examples) {
    const std::vector<int> q01{0, 1};
    auto id = apply_dense(basis(2, 1), GateMatrix::Identity(4, 4), q01);
    EXPECT_EQ(id[1], cplx(1.0));

    GateMatrix swap = GateMatrix::Zero(4, 4);
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
    auto swapped = apply_dense(basis(2, 1), swap, q01);
    EXPECT_EQ(swapped[2], cplx(1.0));
    EXPECT_EQ(swapped[1], cplx(0.0));
}

TEST(ApplyDense, ExactEvolutionMatchesStepFreeReference) {
    const auto spec = HamiltonianSpec::two_spin();
    const GateMatrix hm = build_hamiltonian(spec);
    const GateMatrix u = exact_evolution(hm, 1.0);
    const std::vector<int> q01{0, 1};
    auto out = apply_dense(new_zero_state(2), u, q01);

    // Taylor series of exp(-iHt)|00> summed to convergence.
    Eigen::VectorXcd term = Eigen::VectorXcd::Zero(4);
    term(0) = 1.0;
    Eigen::VectorXcd acc = term;
    for (int k = 1; k < 60; ++k) {
        term = (cplx(0.0, -1.0) / static_cast<double>(k)) * (hm * term);
        acc += term;
    }
    EXPECT_LT(testutil::max_diff(to_vector(out), acc), 1e-12);
}

TEST(ApplyDense, MatchesBruteForceMatrix) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 2 + static_cast<int>(seed % 3);
        std::mt19937_64 rng(seed);
        std::vector<int> qs(static_cast<std::size_t>(n));
        std::iota(qs.begin(), qs.end(), 0);
        std::shuffle(qs.begin(), qs.end(), rng);
        const std::vector<int> pair{qs[0], qs[1]};
        const GateMatrix u = testutil::random_unitary(4, seed);
        auto psi = testutil::random_state(n, seed + 1);

        // Full 2^n matrix: <out|F|in> = u[(out bits on pair), (in bits on pair)] when other bits agree.
        const std::size_t dim = std::size_t{1} << n;
        GateMatrix full = GateMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
        const std::size_t mask = (std::size_t{1} << pair[0]) | (std::size_t{1} << pair[1]);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                if ((r & ~mask) != (c & ~mask)) {
                    continue;
                }
                const std::size_t lr = ((r >> pair[0]) & 1) | (((r >> pair[1]) & 1) << 1);
                const std::size_t lc = ((c >> pair[0]) & 1) | (((c >> pair[1]) & 1) << 1);
                full(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    u(static_cast<Eigen::Index>(lr), static_cast<Eigen::Index>(lc));
            }
        }
        const Eigen::VectorXcd expect = full * to_vector(psi);
        EXPECT_LT(testutil::max_diff(to_vector(apply_dense(psi, u, pair)), expect), 1e-10) << "seed " << seed;
    }
}

TEST(ApplyDense, Errors) {
    const std::vector<int> dup{0, 0};
    const std::vector<int> q01{0, 1};
    EXPECT_THROW(apply_dense(new_zero_state(2), GateMatrix::Identity(4, 4), dup), IndexError);
    EXPECT_THROW(apply_dense(new_zero_state(2), GateMatrix::Identity(2, 2), q01), SizeError);
}

TEST(ExpectationX, Examples) {
    EXPECT_NEAR(expectation_x(apply_1q(new_zero_state(1), h(), 0), 0), 1.0, 1e-15);
    EXPECT_NEAR(expectation_x(new_zero_state(1), 0), 0.0, 1e-15);
    EXPECT_NEAR(expectation_x(apply_1q(apply_1q(new_zero_state(1), x(), 0), h(), 0), 0), -1.0, 1e-15);
    EXPECT_THROW(expectation_x(new_zero_state(1), 1), IndexError);
}

TEST(ExpectationX, MatchesKroneckerOracle) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto psi = testutil::random_state(3, seed);
        for (int q = 0; q < 3; ++q) {
            const Eigen::VectorXcd v = to_vector(psi);
            const double expect = v.dot(testutil::embed_1q(testutil::pauli_x(), q, 3) * v).real();
            EXPECT_NEAR(expectation_x(psi, q), expect, 1e-12);
        }
    }
}

TEST(InnerProduct, Examples) {
    EXPECT_EQ(inner_product(new_zero_state(2), new_zero_state(2)), cplx(1.0));
    EXPECT_EQ(inner_product(new_zero_state(2), basis(2, 1)), cplx(0.0));
    auto psi = testutil::random_state(4, 3);
    EXPECT_NEAR(std::abs(inner_product(psi, psi) - 1.0), 0.0, 1e-12);
    EXPECT_THROW(inner_product(new_zero_state(2), new_zero_state(3)), SizeError);
}

TEST(StateVectorProperties, NormPreservedUnderRandomSequences) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        std::mt19937_64 rng(seed);
        const int n = 1 + static_cast<int>(seed % 5);
        StateVector psi = new_zero_state(n);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int k = 0; k < 100; ++k) {
            const int t = pick(rng);
            const int c = pick(rng);
            const GateMatrix u = testutil::random_unitary(2, seed * 1000 + static_cast<std::uint64_t>(k));
            if (n > 1 && c != t && k % 2 == 0) {
                psi = apply_controlled(psi, u, c, t, k % 4 == 0);
            } else {
                psi = apply_1q(psi, u, t);
            }
        }
        EXPECT_LT(std::abs(psi.norm_squared() - 1.0), 1e-9);
    }
}

TEST(StateVectorProperties, GateThenAdjointRestores) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto psi = testutil::random_state(4, seed);
        const GateMatrix u = testutil::random_unitary(2, seed + 50);
        const int t = static_cast<int>(seed % 4);
        auto back = apply_1q(apply_1q(psi, u, t), u.adjoint(), t);
        EXPECT_LT(testutil::max_diff(to_vector(psi), to_vector(back)), 1e-10);
    }
}

TEST(StateVectorProperties, Apply1qMatchesKroneckerOracle) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 4;
        auto psi = testutil::random_state(n, seed);
        const GateMatrix u = testutil::random_unitary(2, seed + 9);
        const int t = static_cast<int>(seed % 4);
        const Eigen::VectorXcd expect = testutil::embed_1q(u, t, n) * to_vector(psi);
        EXPECT_LT(testutil::max_diff(to_vector(apply_1q(psi, u, t)), expect), 1e-12);
    }
}
