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

#include "otocsim/noise.hpp"

#include <algorithm>
#include <random>

#include "otocsim/errors.hpp"
#include "parallel.hpp"

namespace otocsim {

namespace {

void check_probability(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ArgumentError(std::string(what) + " probability " + std::to_string(p) + " outside [0, 1]");
    }
}

struct CompiledOp {
    Eigen::Matrix2cd matrix;
    std::vector<Control> controls;
    int target = 0;
};

const std::array<Eigen::Matrix2cd, 4> &paulis() {
    static const std::array<Eigen::Matrix2cd, 4> p{Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd(x()),
                                                   Eigen::Matrix2cd(y()), Eigen::Matrix2cd(z())};
    return p;
}

void apply_pauli(StateVector &s, int which, int qubit) {
    if (which != 0) {
        s.apply_1q_inplace(paulis()[static_cast<std::size_t>(which)], qubit);
    }
}

}  // namespace

const std::array<DeviceQubitRecord, 5> &ibmqx4_calibration() {
    static const std::array<DeviceQubitRecord, 5> table{{
        {0, 5.24, 48.80, 14.70, 0.86, 7.00},
        {1, 5.31, 49.60, 55.00, 1.29, 5.80},
        {2, 5.35, 48.00, 32.60, 1.20, 8.60},
        {3, 5.41, 35.60, 23.60, 3.78, 3.70},
        {4, 5.19, 55.20, 31.90, 1.03, 5.80},
    }};
    return table;
}

NoiseModel NoiseModel::ideal(int n_qubits, std::uint64_t seed) { return uniform(n_qubits, 0.0, 0.0, 0.0, seed); }

NoiseModel NoiseModel::uniform(int n_qubits, double gate_1q, double gate_2q, double readout, std::uint64_t seed) {
    if (n_qubits < 1) {
        throw ArgumentError("noise model needs at least one qubit");
    }
    NoiseModel m;
    const auto n = static_cast<std::size_t>(n_qubits);
    m.readout_error.assign(n, readout);
    m.gate_error_1q.assign(n, gate_1q);
    m.gate_error_2q.assign(n, gate_2q);
    m.seed = seed;
    m.validate();
    return m;
}

void NoiseModel::validate() const {
    if (readout_error.size() != gate_error_1q.size() || readout_error.size() != gate_error_2q.size()) {
        throw ArgumentError("noise model vectors must have equal length");
    }
    for (double p : readout_error) {
        check_probability(p, "readout error");
    }
    for (double p : gate_error_1q) {
        check_probability(p, "single-qubit gate error");
    }
    for (double p : gate_error_2q) {
        check_probability(p, "two-qubit gate error");
    }
}

NoiseModel table1_noise_model(std::uint64_t seed) {
    NoiseModel m;
    m.gate_scale_1q = 1e-3;
    m.gate_scale_2q = 1e-2;
    m.readout_scale = 1e-2;
    for (const auto &row : ibmqx4_calibration()) {
        m.raw_gate_error.push_back(row.gate_error_raw);
        m.raw_readout_error.push_back(row.readout_error_raw);
        m.gate_error_1q.push_back(row.gate_error_raw * m.gate_scale_1q);
        m.gate_error_2q.push_back(row.gate_error_raw * m.gate_scale_2q);
        m.readout_error.push_back(row.readout_error_raw * m.readout_scale);
    }
    m.seed = seed;
    m.validate();
    return m;
}

std::uint64_t ShotCounts::count(const std::string &bits) const {
    const auto it = counts.find(bits);
    return it == counts.end() ? 0 : it->second;
}

double ShotCounts::expectation() const {
    if (total == 0) {
        throw ArgumentError("no shots recorded");
    }
    const double n0 = static_cast<double>(count("0"));
    const double n1 = static_cast<double>(count("1"));
    return (n0 - n1) / static_cast<double>(total);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix64 finalizer over a golden-ratio stride
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

ShotCounts sample_shots(const StateVector &state, int qubit, MeasurementBasis basis, std::uint64_t shots,
                        std::uint64_t seed) {
    if (shots < 1) {
        throw ArgumentError("shots must be >= 1");
    }
    StateVector s = state;
    if (basis == MeasurementBasis::X) {
        s.apply_1q_inplace(h(), qubit);
    }
    const double p1 = std::clamp(s.probability_one(qubit), 0.0, 1.0);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution outcome(p1);
    ShotCounts out;
    std::uint64_t ones = 0;
    for (std::uint64_t k = 0; k < shots; ++k) {
        ones += outcome(rng) ? 1 : 0;
    }
    if (shots - ones > 0) {
        out.counts["0"] = shots - ones;
    }
    if (ones > 0) {
        out.counts["1"] = ones;
    }
    out.total = shots;
    return out;
}

ShotCounts apply_readout_error(const ShotCounts &counts, double flip_prob, std::uint64_t seed) {
    check_probability(flip_prob, "readout flip");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution flip(flip_prob);
    ShotCounts out;
    out.total = counts.total;
    for (const auto &[bits, n] : counts.counts) {
        for (std::uint64_t k = 0; k < n; ++k) {
            std::string record = bits;
            for (auto &b : record) {
                if (flip(rng)) {
                    b = b == '0' ? '1' : '0';
                }
            }
            ++out.counts[record];
        }
    }
    return out;
}

ShotCounts run_protocol_noisy_counts(const ProtocolConfig &cfg, const NoiseModel &noise, std::uint64_t shots,
                                     unsigned threads) {
    if (shots < 1) {
        throw ArgumentError("shots must be >= 1");
    }
    noise.validate();
    const int control = cfg.control_qubit();
    const int width = cfg.n_system() + 1;
    if (noise.n_qubits() < width) {
        throw SizeError("noise model covers " + std::to_string(noise.n_qubits()) + " qubits, circuit needs " +
                        std::to_string(width));
    }

    const Circuit circuit = experiment_circuit(cfg);
    std::vector<CompiledOp> ops;
    for (const auto &op : circuit.ops()) {
        if (!op.is_unitary_gate()) {
            continue;
        }
        if (op.controls.size() > 1) {
            throw CapabilityError("noisy simulation expects ops with at most one control");
        }
        ops.push_back({op.base_matrix(), op.controls, op.targets.front()});
    }
    const double readout = noise.readout_error[static_cast<std::size_t>(control)];

    std::vector<std::uint8_t> outcomes(shots, 0);
    detail::parallel_chunks(shots, threads, [&](std::size_t begin, std::size_t end) {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_int_distribution<int> pauli1(0, 3);
        std::uniform_int_distribution<int> pauli2(0, 15);
        for (std::size_t shot = begin; shot < end; ++shot) {
            std::mt19937_64 rng(derive_seed(noise.seed, shot));
            StateVector s(width);
            for (const auto &op : ops) {
                s.apply_controlled_inplace(op.matrix, op.controls, op.target);
                const auto t = static_cast<std::size_t>(op.target);
                if (op.controls.empty()) {
                    if (unit(rng) < noise.gate_error_1q[t]) {
                        apply_pauli(s, pauli1(rng), op.target);
                    }
                } else {
                    const int c = op.controls.front().qubit;
                    const double p = 0.5 * (noise.gate_error_2q[t] + noise.gate_error_2q[static_cast<std::size_t>(c)]);
                    if (unit(rng) < p) {
                        const int pair = pauli2(rng);
                        apply_pauli(s, pair & 3, op.target);
                        apply_pauli(s, pair >> 2, c);
                    }
                }
            }
            bool one = unit(rng) < s.probability_one(control);
            if (unit(rng) < readout) {
                one = !one;
            }
            outcomes[shot] = one ? 1 : 0;
        }
    });

    std::uint64_t ones = 0;
    for (auto o : outcomes) {
        ones += o;
    }
    ShotCounts counts;
    counts.total = shots;
    if (shots - ones > 0) {
        counts.counts["0"] = shots - ones;
    }
    if (ones > 0) {
        counts.counts["1"] = ones;
    }
    return counts;
}

double run_protocol_noisy(const ProtocolConfig &cfg, const NoiseModel &noise, std::uint64_t shots, unsigned threads) {
    return run_protocol_noisy_counts(cfg, noise, shots, threads).expectation();
}

}  // namespace otocsim
