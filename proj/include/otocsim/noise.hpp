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

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "otocsim/protocol.hpp"

namespace otocsim {

/// One row of the ibmqx4 calibration table, raw values.
struct DeviceQubitRecord {
    int qubit = 0;
    double frequency_ghz = 0.0;
    double t1_us = 0.0;
    double t2_us = 0.0;
    double gate_error_raw = 0.0;     // GE column
    double readout_error_raw = 0.0;  // RE column
};

/// The five ibmqx4 rows. T1/T2 are kept for reference only.
const std::array<DeviceQubitRecord, 5> &ibmqx4_calibration();

/**
 * Error rates for trajectory simulation, indexed by circuit qubit.
 *
 * After every single-qubit gate on q a uniformly random Pauli from
 * {I, X, Y, Z} hits q with probability gate_error_1q[q]; after every
 * single-control gate a uniformly random two-qubit Pauli hits the pair with
 * the mean of the two qubits' gate_error_2q. Probability 1 is the fully
 * depolarizing channel. Measured bits flip with readout_error[q].
 */
struct NoiseModel {
    std::vector<double> readout_error;
    std::vector<double> gate_error_1q;
    std::vector<double> gate_error_2q;
    std::uint64_t seed = 0;

    // Scale factors that turned raw table entries into probabilities, and
    // the raw entries themselves; empty when not sourced from the table.
    double gate_scale_1q = 1.0;
    double gate_scale_2q = 1.0;
    double readout_scale = 1.0;
    std::vector<double> raw_gate_error;
    std::vector<double> raw_readout_error;

    /// All rates zero on `n_qubits` qubits.
    static NoiseModel ideal(int n_qubits, std::uint64_t seed = 0);

    /// Same rate everywhere.
    static NoiseModel uniform(int n_qubits, double gate_1q, double gate_2q, double readout, std::uint64_t seed = 0);

    int n_qubits() const { return static_cast<int>(readout_error.size()); }

    /// Throws ArgumentError unless every probability is in [0, 1] and the
    /// three vectors have equal length.
    void validate() const;
};

/**
 * Rates from the ibmqx4 table, whose columns carry no units:
 * single-qubit depolarizing = GE x 1e-3, two-qubit depolarizing = GE x 1e-2,
 * readout flip = RE x 1e-2.
 */
NoiseModel table1_noise_model(std::uint64_t seed = 0);

/// Outcome bitstrings (qubit order as measured) and their counts.
struct ShotCounts {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t total = 0;

    std::uint64_t count(const std::string &bits) const;
    /// For single-bit records: (n0 - n1) / total.
    double expectation() const;
};

enum class MeasurementBasis { X, Z };

/// Sample `shots` single-qubit outcomes of `qubit` in `basis`. The X basis
/// rotates by H first. Deterministic for a given seed.
ShotCounts sample_shots(const StateVector &state, int qubit, MeasurementBasis basis, std::uint64_t shots,
                        std::uint64_t seed);

/// Flip every recorded bit independently with `flip_prob`.
ShotCounts apply_readout_error(const ShotCounts &counts, double flip_prob, std::uint64_t seed);

/// Derive an independent stream seed from a master seed and an index.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/**
 * Estimate <X> of the control after the experiment circuit under `noise`.
 *
 * Each shot is one stochastic-Pauli trajectory seeded by
 * derive_seed(noise.seed, shot), so the result does not depend on
 * `threads` (0 picks the hardware concurrency).
 */
double run_protocol_noisy(const ProtocolConfig &cfg, const NoiseModel &noise, std::uint64_t shots,
                          unsigned threads = 0);

/// Raw counts of the control-qubit outcome for run_protocol_noisy.
ShotCounts run_protocol_noisy_counts(const ProtocolConfig &cfg, const NoiseModel &noise, std::uint64_t shots,
                                     unsigned threads = 0);

}  // namespace otocsim
