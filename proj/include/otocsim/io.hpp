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
#include <filesystem>
#include <string>

#include "otocsim/analysis.hpp"

namespace otocsim {

inline constexpr const char *kVersion = "0.1.0";

/// Everything one sweep invocation needs.
struct RunSettings {
    ProtocolConfig protocol;
    Provenance mode = Provenance::Oracle;
    double t_max = 8.0;
    int points = 81;
    std::uint64_t shots = 8192;
    NoiseModel noise = table1_noise_model();
    unsigned threads = 0;

    void validate() const;
};

Provenance provenance_from_string(const std::string &text);

/**
 * Overlay an INI-style config file onto `base`.
 *
 *   ; comments occupy whole lines
 *   [hamiltonian]
 *   n_spins = 2
 *   omega = 1.0
 *   ; V between neighbouring spins (V12 for two spins)
 *   coupling = 1.0
 *   ; zz | number
 *   interaction = zz
 *
 *   [protocol]
 *   ; product | bell
 *   initial = product
 *   ; oracle | protocol-exact | trotter | noisy
 *   mode = oracle
 *   steps = 50
 *   butterfly_phase = 0.7853981633974483
 *   t_max = 8
 *   points = 81
 *
 *   [noise]
 *   ; table | uniform
 *   model = table
 *   gate_error_1q = 0.001
 *   gate_error_2q = 0.01
 *   readout_error = 0.01
 *   shots = 8192
 *   seed = 0
 *
 * The gate_error and readout_error keys apply to the uniform model only.
 * Keys that are absent keep their value from `base`. Unknown sections or
 * keys raise ArgumentError.
 */
RunSettings load_config(const std::filesystem::path &path, const RunSettings &base = {});

/// Same grammar, from text.
RunSettings parse_config(const std::string &text, const RunSettings &base = {});

/// CSV with header `t,re_f,re_f_oracle,im_f_oracle,commutator_sq`, one row
/// per point, LF endings, 17 significant digits.
std::string sweep_csv(const OtocSweep &sweep);

/// JSON document with the points, the dominant period and the manifest.
std::string sweep_json(const OtocSweep &sweep, const RunSettings &settings);

/// Resolved settings, grid and tool version as JSON.
std::string manifest_json(const RunSettings &settings);

/// Write via a sibling temporary file and rename into place.
void write_file_atomic(const std::filesystem::path &path, const std::string &content);

}  // namespace otocsim
