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

#include <cstdint>
#include <string>
#include <vector>

#include "otocsim/noise.hpp"
#include "otocsim/protocol.hpp"

namespace otocsim {

/// W_t = U(-t) W U(t) with U from exact_evolution.
GateMatrix heisenberg_operator(const HamiltonianSpec &spec, const GateMatrix &w, double t);

/// F(t) = <psi| W_t^dag V^dag W_t V |psi> from the dense operator product.
cplx otoc_exact(const HamiltonianSpec &spec, const GateMatrix &v, const GateMatrix &w, const StateVector &psi,
                double t);

/// The same F(t) as the overlap <V W_t psi | W_t V psi> of two evolved
/// states; an independent route to otoc_exact.
cplx otoc_overlap(const HamiltonianSpec &spec, const GateMatrix &v, const GateMatrix &w, const StateVector &psi,
                  double t);

/// <psi| [W_t, V]^dag [W_t, V] |psi> computed directly from the commutator.
double commutator_expectation(const HamiltonianSpec &spec, const GateMatrix &v, const GateMatrix &w,
                              const StateVector &psi, double t);

/// 2 (1 - re_f). Throws ArgumentError when re_f is outside [-1, 1] by more
/// than rounding.
double commutator_magnitude(double re_f);

/// delta_t * log2(n_spins): time for a perturbation to reach all spins
/// when pairs interact every delta_t.
double scrambling_time(int n_spins, double delta_t);

/// Which simulation produced re_f in a sweep.
enum class Provenance { Oracle, ProtocolExact, ProtocolTrotter, ProtocolNoisy };

std::string to_string(Provenance p);

struct OtocPoint {
    double t = 0.0;           // in units of 1/V12
    double re_f = 0.0;        // from the sweep's provenance
    cplx f_exact;             // dense oracle; the imaginary part is oracle-only
    double commutator_sq = 0.0;
};

struct OtocSweep {
    ProtocolConfig config;
    Provenance provenance = Provenance::Oracle;
    double t_max = 0.0;
    std::vector<OtocPoint> points;

    /// The point whose t is closest to `t`.
    const OtocPoint &nearest(double t) const;
    double mean_abs_re_f() const;
    double max_abs_re_f() const;
};

/// Inputs the noisy provenance needs; ignored otherwise.
struct SweepOptions {
    NoiseModel noise = table1_noise_model();
    std::uint64_t shots = 8192;
    unsigned threads = 0;  // 0: hardware concurrency
};

/**
 * Evaluate F on a uniform grid of `n_points` over [0, t_max].
 *
 * ProtocolExact forces the oracle evolution, ProtocolTrotter requires
 * cfg.evolution to be Trotter, ProtocolNoisy uses cfg.evolution as given and
 * seeds point k with derive_seed(options.noise.seed, k). Points are evaluated
 * in parallel; output order is by t.
 */
OtocSweep sweep(const ProtocolConfig &cfg, double t_max, int n_points, Provenance provenance,
                const SweepOptions &options = {});

/// Period of the strongest non-zero frequency in the sweep's re_f, from a
/// direct DFT of the mean-removed samples. Returns 0 for a flat curve.
double dominant_period(const OtocSweep &sweep);

}  // namespace otocsim
