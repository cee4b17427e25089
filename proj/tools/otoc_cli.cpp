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

// Command-line driver: runs an OTOC sweep and writes CSV/JSON plus a manifest.

#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "otocsim/io.hpp"
#include "otocsim/qasm.hpp"

namespace {

double parse_time_spec(const std::string &text) {
    if (text.rfind("t=", 0) != 0) {
        throw CLI::ValidationError("--emit-qasm", "expected t=R, got '" + text + "'");
    }
    double t = 0.0;
    const char *first = text.data() + 2;
    const char *last = text.data() + text.size();
    const auto res = std::from_chars(first, last, t);
    if (res.ec != std::errc() || res.ptr != last) {
        throw CLI::ValidationError("--emit-qasm", "bad time in '" + text + "'");
    }
    return t;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Simulate out-of-time-ordered correlators of a driven two-spin Rydberg chain."};
    app.set_version_flag("--version", std::string(otocsim::kVersion));

    std::string initial, mode, interaction, config_path, out_path, json_path;
    int steps = 0, points = 0;
    double t_max = 0.0;
    std::uint64_t shots = 0, seed = 0;
    unsigned threads = 0;
    std::vector<std::string> emit;

    app.add_option("--initial", initial, "initial system state")->check(CLI::IsMember({"product", "bell"}));
    app.add_option("--mode", mode, "what produces re_f")
        ->check(CLI::IsMember({"oracle", "protocol-exact", "trotter", "noisy"}));
    app.add_option("--steps", steps, "Trotter steps per evolution")->check(CLI::PositiveNumber);
    app.add_option("--t-max", t_max, "end of the V12 t grid")->check(CLI::PositiveNumber);
    app.add_option("--points", points, "grid points including t = 0")->check(CLI::Range(2, 1 << 20));
    app.add_option("--shots", shots, "shots per point (noisy mode)")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "master seed (noisy mode)");
    app.add_option("--threads", threads, "worker threads, 0 = all cores");
    app.add_option("--config", config_path, "INI config applied before flags")->check(CLI::ExistingFile);
    app.add_option("--out", out_path, "CSV output; a manifest goes to <out>.manifest.json");
    app.add_option("--json", json_path, "JSON output");
    app.add_option("--emit-qasm", emit, "write the experiment circuit at time t as QASM")
        ->expected(2)
        ->type_name("t=R FILE");
    app.add_option("--interaction", interaction, "pair term")->check(CLI::IsMember({"zz", "number"}));

    try {
        app.parse(argc, argv);
        if (!emit.empty()) {
            parse_time_spec(emit[0]);
        }
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        otocsim::RunSettings settings;
        if (!config_path.empty()) {
            settings = otocsim::load_config(config_path, settings);
        }
        if (app.count("--initial")) {
            settings.protocol.initial = otocsim::initial_state_from_string(initial);
        }
        if (app.count("--mode")) {
            settings.mode = otocsim::provenance_from_string(mode);
        }
        if (app.count("--steps")) {
            settings.protocol.evolution = otocsim::Evolution::trotter(steps);
        }
        if (app.count("--t-max")) {
            settings.t_max = t_max;
        }
        if (app.count("--points")) {
            settings.points = points;
        }
        if (app.count("--shots")) {
            settings.shots = shots;
        }
        if (app.count("--seed")) {
            settings.noise.seed = seed;
        }
        if (app.count("--interaction")) {
            settings.protocol.hamiltonian.form = otocsim::interaction_form_from_string(interaction);
        }
        settings.threads = threads;
        settings.validate();

        if (!emit.empty()) {
            otocsim::ProtocolConfig at = settings.protocol;
            at.time = parse_time_spec(emit[0]);
            otocsim::write_file_atomic(emit[1], otocsim::emit_qasm(otocsim::experiment_circuit(at)));
        }

        otocsim::SweepOptions options;
        options.noise = settings.noise;
        options.shots = settings.shots;
        options.threads = settings.threads;
        const auto result = otocsim::sweep(settings.protocol, settings.t_max, settings.points, settings.mode, options);

        const std::string csv = otocsim::sweep_csv(result);
        if (!out_path.empty()) {
            otocsim::write_file_atomic(out_path, csv);
            otocsim::write_file_atomic(out_path + ".manifest.json", otocsim::manifest_json(settings));
        }
        if (!json_path.empty()) {
            otocsim::write_file_atomic(json_path, otocsim::sweep_json(result, settings));
        }
        if (out_path.empty() && json_path.empty()) {
            std::cout << csv;
        }
    } catch (const std::exception &e) {
        std::cerr << "otoc_cli: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
