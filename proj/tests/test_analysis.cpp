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

#include "otocsim/analysis.hpp"
#include "otocsim/errors.hpp"
#include "test_util.hpp"

using namespace otocsim;

namespace {

ProtocolConfig config(InitialState initial) {
    ProtocolConfig cfg;
    cfg.initial = initial;
    return cfg;
}

cplx oracle(const ProtocolConfig &cfg, double t) {
    return otoc_exact(cfg.hamiltonian, cfg.v_operator(), cfg.w_operator(), prepare_initial(cfg.initial), t);
}

}  // namespace

TEST(OtocExact, Examples) {
    const auto cfg = config(InitialState::Product00);
    const cplx f0 = oracle(cfg, 0.0);
    EXPECT_NEAR(f0.real(), 1.0, 1e-12);
    EXPECT_NEAR(f0.imag(), 0.0, 1e-12);

    const GateMatrix id = GateMatrix::Identity(4, 4);
    for (double t : {0.5, 3.0}) {
        const cplx f = otoc_exact(cfg.hamiltonian, id, id, prepare_initial(InitialState::Product00), t);
        EXPECT_NEAR(std::abs(f - 1.0), 0.0, 1e-12);
    }

    const cplx a = oracle(cfg, 1.0);
    const cplx b = otoc_overlap(cfg.hamiltonian, cfg.v_operator(), cfg.w_operator(),
                                prepare_initial(InitialState::Product00), 1.0);
    EXPECT_LT(std::abs(a - b), 1e-12);
}

TEST(OtocExact, Errors) {
    const auto cfg = config(InitialState::Product00);
    EXPECT_THROW(otoc_exact(cfg.hamiltonian, GateMatrix::Identity(2, 2), cfg.w_operator(),
                            prepare_initial(InitialState::Product00), 1.0),
                 SizeError);
    EXPECT_THROW(otoc_exact(cfg.hamiltonian, GateMatrix::Ones(4, 4), cfg.w_operator(),
                            prepare_initial(InitialState::Product00), 1.0),
                 UnitarityError);
}

TEST(CommutatorMagnitude, Examples) {
    EXPECT_DOUBLE_EQ(commutator_magnitude(1.0), 0.0);
    EXPECT_DOUBLE_EQ(commutator_magnitude(-1.0), 4.0);
    EXPECT_DOUBLE_EQ(commutator_magnitude(0.5), 1.0);
    EXPECT_THROW(commutator_magnitude(1.1), ArgumentError);
    EXPECT_THROW(commutator_magnitude(std::nan("")), ArgumentError);
}

TEST(ScramblingTime, Examples) {
    EXPECT_EQ(scrambling_time(2, 1.0), 1.0);
    EXPECT_EQ(scrambling_time(1, 1.0), 0.0);
    EXPECT_EQ(scrambling_time(8, 0.5), 1.5);
    EXPECT_THROW(scrambling_time(0, 1.0), ArgumentError);
    EXPECT_THROW(scrambling_time(2, 0.0), ArgumentError);
}

TEST(Sweep, OracleAnchorAndGrid) {
    const auto s = sweep(config(InitialState::Product00), 8.0, 81, Provenance::Oracle);
    ASSERT_EQ(s.points.size(), 81U);
    EXPECT_EQ(s.points.front().t, 0.0);
    EXPECT_EQ(s.points.back().t, 8.0);
    EXPECT_NEAR(s.points.front().re_f, 1.0, 1e-12);
    EXPECT_NEAR(s.nearest(1.04).t, 1.0, 1e-15);
}

TEST(Sweep, Properties) {
    for (auto init : {InitialState::Product00, InitialState::BellBlockade}) {
        const auto cfg = config(init);
        const auto s = sweep(cfg, 8.0, 81, Provenance::Oracle);
        const auto p = sweep(cfg, 8.0, 81, Provenance::ProtocolExact);
        EXPECT_NEAR(s.points[0].f_exact.real(), 1.0, 1e-12);
        EXPECT_NEAR(s.points[0].f_exact.imag(), 0.0, 1e-12);
        for (std::size_t k = 0; k < s.points.size(); ++k) {
            const auto &pt = s.points[k];
            EXPECT_LE(std::abs(pt.f_exact), 1.0 + 1e-12);
            const cplx overlap = otoc_overlap(cfg.hamiltonian, cfg.v_operator(), cfg.w_operator(),
                                              prepare_initial(init), pt.t);
            EXPECT_LT(std::abs(overlap - pt.f_exact), 1e-12);
            const double direct =
                commutator_expectation(cfg.hamiltonian, cfg.v_operator(), cfg.w_operator(), prepare_initial(init), pt.t);
            EXPECT_NEAR(pt.commutator_sq, direct, 1e-10);
            EXPECT_LT(std::abs(p.points[k].re_f - pt.re_f), 1e-9);
        }
    }
}

TEST(Sweep, TrotterNeedsSteps) {
    EXPECT_THROW(sweep(config(InitialState::Product00), 8.0, 11, Provenance::ProtocolTrotter), ArgumentError);
    auto cfg = config(InitialState::Product00);
    cfg.evolution = Evolution::trotter(100);
    const auto s = sweep(cfg, 2.0, 5, Provenance::ProtocolTrotter);
    for (const auto &pt : s.points) {
        EXPECT_LT(std::abs(pt.re_f - pt.f_exact.real()), 0.05);
    }
}

TEST(Sweep, Errors) {
    EXPECT_THROW(sweep(config(InitialState::Product00), 8.0, 1, Provenance::Oracle), ArgumentError);
    EXPECT_THROW(sweep(config(InitialState::Product00), -1.0, 10, Provenance::Oracle), ArgumentError);
}

TEST(Sweep, NoisyIsSeedDeterministic) {
    SweepOptions opts;
    opts.shots = 500;
    opts.noise = table1_noise_model(21);
    const auto a = sweep(config(InitialState::BellBlockade), 4.0, 5, Provenance::ProtocolNoisy, opts);
    opts.threads = 1;
    const auto b = sweep(config(InitialState::BellBlockade), 4.0, 5, Provenance::ProtocolNoisy, opts);
    for (std::size_t k = 0; k < a.points.size(); ++k) {
        EXPECT_EQ(a.points[k].re_f, b.points[k].re_f);
    }
}

TEST(DominantPeriod, RecoversSinusoid) {
    OtocSweep s;
    const int n = 81;
    const double period = 2.0;
    for (int k = 0; k < n; ++k) {
        const double t = 8.0 * k / 80.0;
        s.points.push_back({t, std::cos(2 * std::numbers::pi * t / period), {}, 0.0});
    }
    // DFT bins are spaced 1/(n dt); 81 * 0.1 / 4 = 2.025 is the nearest bin
    EXPECT_NEAR(dominant_period(s), 2.025, 1e-12);
    OtocSweep flat;
    for (int k = 0; k < 5; ++k) {
        flat.points.push_back({double(k), 0.5, {}, 0.0});
    }
    EXPECT_EQ(dominant_period(flat), 0.0);
}
