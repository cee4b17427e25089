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

#include "otocsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "otocsim/errors.hpp"
#include "parallel.hpp"

namespace otocsim {

namespace {

Eigen::VectorXcd as_vector(const StateVector &psi) {
    const auto a = psi.amplitudes();
    return Eigen::Map<const Eigen::VectorXcd>(a.data(), static_cast<Eigen::Index>(a.size()));
}

void check_dims(const HamiltonianSpec &spec, const GateMatrix &v, const GateMatrix &w, const StateVector &psi) {
    const auto dim = Eigen::Index{1} << spec.n_spins;
    if (v.rows() != dim || v.cols() != dim || w.rows() != dim || w.cols() != dim ||
        static_cast<Eigen::Index>(psi.size()) != dim) {
        throw SizeError("operators and state must match the " + std::to_string(spec.n_spins) + "-spin space");
    }
    require_unitary(v);
    require_unitary(w);
}

}  // namespace

GateMatrix heisenberg_operator(const HamiltonianSpec &spec, const GateMatrix &w, double t) {
    const GateMatrix u = exact_evolution(build_hamiltonian(spec), t);
    return u.adjoint() * w * u;
}

cplx otoc_exact(const HamiltonianSpec &spec, const GateMatrix &v, const GateMatrix &w, const StateVector &psi,
                double t) {
    check_dims(spec, v, w, psi);
    const GateMatrix wt = heisenberg_operator(spec, w, t);
    const GateMatrix product = wt.adjoint() * v.adjoint() * wt * v;
    const Eigen::VectorXcd p = as_vector(psi);
    return p.dot(product * p);
}

cplx otoc_overlap(const HamiltonianSpec &spec, const GateMatrix &v, const GateMatrix &w, const StateVector &psi,
                  double t) {
    check_dims(spec, v, w, psi);
    const GateMatrix h = build_hamiltonian(spec);
    const GateMatrix forward = exact_evolution(h, t);
    const GateMatrix backward = exact_evolution(h, -t);
    const Eigen::VectorXcd p = as_vector(psi);
    // W_t x = U(-t) W U(t) x, applied as three successive state updates.
    auto apply_wt = [&](const Eigen::VectorXcd &x) -> Eigen::VectorXcd { return backward * (w * (forward * x)); };
    const Eigen::VectorXcd left = v * apply_wt(p);
    const Eigen::VectorXcd right = apply_wt(v * p);
    return left.dot(right);
}

double commutator_expectation(const HamiltonianSpec &spec, const GateMatrix &v, const GateMatrix &w,
                              const StateVector &psi, double t) {
    check_dims(spec, v, w, psi);
    const GateMatrix wt = heisenberg_operator(spec, w, t);
    const GateMatrix comm = wt * v - v * wt;
    const Eigen::VectorXcd cp = comm * as_vector(psi);
    return cp.squaredNorm();
}

double commutator_magnitude(double re_f) {
    constexpr double slack = 1e-9;
    if (!(re_f >= -1.0 - slack && re_f <= 1.0 + slack)) {
        throw ArgumentError("Re[F] = " + std::to_string(re_f) + " outside [-1, 1]");
    }
    return std::clamp(2.0 * (1.0 - re_f), 0.0, 4.0);
}

double scrambling_time(int n_spins, double delta_t) {
    if (n_spins < 1) {
        throw ArgumentError("n_spins must be >= 1");
    }
    if (!(delta_t > 0.0)) {
        throw ArgumentError("delta_t must be > 0");
    }
    return delta_t * std::log2(static_cast<double>(n_spins));
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Oracle:
            return "oracle";
        case Provenance::ProtocolExact:
            return "protocol-exact";
        case Provenance::ProtocolTrotter:
            return "trotter";
        case Provenance::ProtocolNoisy:
            return "noisy";
    }
    return "unknown";
}

const OtocPoint &OtocSweep::nearest(double t) const {
    if (points.empty()) {
        throw ArgumentError("empty sweep");
    }
    const auto it = std::min_element(points.begin(), points.end(), [t](const OtocPoint &a, const OtocPoint &b) {
        return std::abs(a.t - t) < std::abs(b.t - t);
    });
    return *it;
}

double OtocSweep::mean_abs_re_f() const {
    if (points.empty()) {
        throw ArgumentError("empty sweep");
    }
    double acc = 0.0;
    for (const auto &p : points) {
        acc += std::abs(p.re_f);
    }
    return acc / static_cast<double>(points.size());
}

double OtocSweep::max_abs_re_f() const {
    double m = 0.0;
    for (const auto &p : points) {
        m = std::max(m, std::abs(p.re_f));
    }
    return m;
}

OtocSweep sweep(const ProtocolConfig &cfg, double t_max, int n_points, Provenance provenance,
                const SweepOptions &options) {
    if (n_points < 2) {
        throw ArgumentError("a sweep needs at least 2 points");
    }
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        throw ArgumentError("t_max must be finite and > 0");
    }
    ProtocolConfig base = cfg;
    if (provenance == Provenance::ProtocolExact) {
        base.evolution = Evolution::exact();
    } else if (provenance == Provenance::ProtocolTrotter && base.evolution.kind != Evolution::Kind::Trotter) {
        throw ArgumentError("a Trotter sweep needs a Trotter evolution in the config");
    }
    base.validate();
    if (provenance == Provenance::ProtocolNoisy) {
        options.noise.validate();
    }

    const GateMatrix v = base.v_operator();
    const GateMatrix w = base.w_operator();
    const StateVector psi = prepare_initial(base.initial, base.n_system());

    OtocSweep out;
    out.config = base;
    out.provenance = provenance;
    out.t_max = t_max;
    out.points.resize(static_cast<std::size_t>(n_points));

    const unsigned outer_threads = options.threads;
    detail::parallel_chunks(out.points.size(), outer_threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            OtocPoint &pt = out.points[k];
            pt.t = t_max * static_cast<double>(k) / static_cast<double>(n_points - 1);
            pt.f_exact = otoc_exact(base.hamiltonian, v, w, psi, pt.t);
            ProtocolConfig at = base;
            at.time = pt.t;
            switch (provenance) {
                case Provenance::Oracle:
                    pt.re_f = pt.f_exact.real();
                    break;
                case Provenance::ProtocolExact:
                case Provenance::ProtocolTrotter:
                    pt.re_f = run_protocol(at);
                    break;
                case Provenance::ProtocolNoisy: {
                    NoiseModel noise = options.noise;
                    noise.seed = derive_seed(options.noise.seed, k);
                    pt.re_f = run_protocol_noisy(at, noise, options.shots, 1);
                    break;
                }
            }
            pt.commutator_sq = commutator_magnitude(pt.re_f);
        }
    });
    return out;
}

double dominant_period(const OtocSweep &sweep) {
    const std::size_t n = sweep.points.size();
    if (n < 3) {
        return 0.0;
    }
    double mean = 0.0;
    for (const auto &p : sweep.points) {
        mean += p.re_f;
    }
    mean /= static_cast<double>(n);
    const double dt = sweep.points[1].t - sweep.points[0].t;
    double best_power = 0.0;
    std::size_t best_k = 0;
    for (std::size_t k = 1; k <= n / 2; ++k) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(k * j) / static_cast<double>(n);
            acc += (sweep.points[j].re_f - mean) * std::polar(1.0, angle);
        }
        if (std::norm(acc) > best_power) {
            best_power = std::norm(acc);
            best_k = k;
        }
    }
    if (best_k == 0 || best_power < 1e-20) {
        return 0.0;
    }
    return static_cast<double>(n) * dt / static_cast<double>(best_k);
}

}  // namespace otocsim
