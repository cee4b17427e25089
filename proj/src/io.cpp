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

#include "otocsim/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include "json.hpp"

#include "otocsim/errors.hpp"

namespace otocsim {

namespace {

namespace pt = boost::property_tree;
using nlohmann::ordered_json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <typename T>
T get(const pt::ptree &section, const std::string &section_name, const std::string &key, T fallback) {
    const auto node = section.get_child_optional(key);
    if (!node) {
        return fallback;
    }
    const auto value = node->get_value_optional<T>();
    if (!value) {
        throw ArgumentError("config [" + section_name + "] " + key + ": cannot parse '" + node->data() + "'");
    }
    return *value;
}

void check_keys(const pt::ptree &section, const std::string &name, const std::set<std::string> &allowed) {
    for (const auto &[key, _] : section) {
        if (!allowed.count(key)) {
            throw ArgumentError("config [" + name + "]: unknown key '" + key + "'");
        }
    }
}

HamiltonianSpec chain(int n_spins, double omega, double coupling, InteractionForm form) {
    HamiltonianSpec spec;
    spec.n_spins = n_spins;
    spec.omega = omega;
    spec.form = form;
    spec.couplings = Eigen::MatrixXd::Zero(n_spins, n_spins);
    for (int i = 0; i + 1 < n_spins; ++i) {
        spec.couplings(i, i + 1) = coupling;
        spec.couplings(i + 1, i) = coupling;
    }
    return spec;
}

ordered_json matrix_json(const Eigen::MatrixXd &m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(row);
    }
    return rows;
}

ordered_json manifest(const RunSettings &s) {
    const auto &cfg = s.protocol;
    ordered_json m;
    m["tool"] = "otocsim";
    m["version"] = kVersion;
    m["hamiltonian"] = {
        {"n_spins", cfg.hamiltonian.n_spins},
        {"omega", cfg.hamiltonian.omega},
        {"couplings", matrix_json(cfg.hamiltonian.couplings)},
        {"interaction", to_string(cfg.hamiltonian.form)},
    };
    m["protocol"] = {
        {"initial", to_string(cfg.initial)},
        {"evolution", cfg.evolution.kind == Evolution::Kind::Trotter ? "trotter" : "exact"},
        {"steps", cfg.evolution.kind == Evolution::Kind::Trotter ? cfg.evolution.steps : 0},
        {"butterfly_phase", cfg.butterfly_phase},
        {"custom_operators", cfg.v.has_value() || cfg.w.has_value()},
    };
    m["grid"] = {{"t_min", 0.0}, {"t_max", s.t_max}, {"points", s.points}};
    m["mode"] = to_string(s.mode);
    if (s.mode == Provenance::ProtocolNoisy) {
        m["noise"] = {
            {"seed", s.noise.seed},
            {"shots", s.shots},
            {"gate_error_1q", s.noise.gate_error_1q},
            {"gate_error_2q", s.noise.gate_error_2q},
            {"readout_error", s.noise.readout_error},
            {"gate_scale_1q", s.noise.gate_scale_1q},
            {"gate_scale_2q", s.noise.gate_scale_2q},
            {"readout_scale", s.noise.readout_scale},
            {"raw_gate_error", s.noise.raw_gate_error},
            {"raw_readout_error", s.noise.raw_readout_error},
        };
    }
    return m;
}

}  // namespace

void RunSettings::validate() const {
    protocol.validate();
    if (points < 2) {
        throw ArgumentError("points must be >= 2");
    }
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        throw ArgumentError("t_max must be finite and > 0");
    }
    if (mode == Provenance::ProtocolTrotter && protocol.evolution.kind != Evolution::Kind::Trotter) {
        throw ArgumentError("trotter mode needs a step count");
    }
    if (mode == Provenance::ProtocolNoisy) {
        if (shots < 1) {
            throw ArgumentError("shots must be >= 1");
        }
        noise.validate();
        if (noise.n_qubits() < protocol.n_system() + 1) {
            throw SizeError("noise model covers " + std::to_string(noise.n_qubits()) + " qubits, need " +
                            std::to_string(protocol.n_system() + 1));
        }
    }
}

Provenance provenance_from_string(const std::string &text) {
    for (auto p : {Provenance::Oracle, Provenance::ProtocolExact, Provenance::ProtocolTrotter,
                   Provenance::ProtocolNoisy}) {
        if (to_string(p) == text) {
            return p;
        }
    }
    throw ArgumentError("unknown mode '" + text + "'");
}

RunSettings parse_config(const std::string &text, const RunSettings &base) {
    pt::ptree tree;
    std::istringstream in(text);
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error &e) {
        throw ArgumentError("config line " + std::to_string(e.line()) + ": " + e.message());
    }

    RunSettings out = base;
    for (const auto &[name, section] : tree) {
        if (section.empty() && !section.data().empty()) {
            throw ArgumentError("config key '" + name + "' must sit inside a section");
        }
        if (name == "hamiltonian") {
            check_keys(section, name, {"n_spins", "omega", "coupling", "interaction"});
            const auto &h = out.protocol.hamiltonian;
            const double old_coupling = h.n_spins >= 2 ? h.couplings(0, 1) : 0.0;
            const int n = get(section, name, "n_spins", h.n_spins);
            const double omega = get(section, name, "omega", h.omega);
            const double coupling = get(section, name, "coupling", old_coupling);
            const InteractionForm form =
                section.count("interaction") ? interaction_form_from_string(section.get<std::string>("interaction"))
                                             : h.form;
            if (n < 1) {
                throw ArgumentError("config [hamiltonian] n_spins must be >= 1");
            }
            if (section.count("n_spins") || section.count("coupling")) {
                out.protocol.hamiltonian = chain(n, omega, coupling, form);
            } else {
                out.protocol.hamiltonian.omega = omega;
                out.protocol.hamiltonian.form = form;
            }
        } else if (name == "protocol") {
            check_keys(section, name, {"initial", "mode", "steps", "butterfly_phase", "t_max", "points"});
            if (section.count("initial")) {
                out.protocol.initial = initial_state_from_string(section.get<std::string>("initial"));
            }
            if (section.count("mode")) {
                out.mode = provenance_from_string(section.get<std::string>("mode"));
            }
            if (section.count("steps")) {
                const int steps = get(section, name, "steps", 0);
                if (steps < 1) {
                    throw ArgumentError("config [protocol] steps must be >= 1");
                }
                out.protocol.evolution = Evolution::trotter(steps);
            }
            out.protocol.butterfly_phase = get(section, name, "butterfly_phase", out.protocol.butterfly_phase);
            out.t_max = get(section, name, "t_max", out.t_max);
            out.points = get(section, name, "points", out.points);
        } else if (name == "noise") {
            check_keys(section, name, {"model", "gate_error_1q", "gate_error_2q", "readout_error", "shots", "seed"});
            const auto seed = get<std::uint64_t>(section, name, "seed", out.noise.seed);
            const std::string model = get<std::string>(section, name, "model", "");
            const bool rates = section.count("gate_error_1q") || section.count("gate_error_2q") ||
                               section.count("readout_error");
            if (model == "uniform" || (model.empty() && rates)) {
                const int n = std::max(out.noise.n_qubits(), out.protocol.n_system() + 1);
                out.noise = NoiseModel::uniform(n, get(section, name, "gate_error_1q", 0.0),
                                                get(section, name, "gate_error_2q", 0.0),
                                                get(section, name, "readout_error", 0.0), seed);
            } else if (model == "table") {
                if (rates) {
                    throw ArgumentError("config [noise]: explicit rates need model = uniform");
                }
                out.noise = table1_noise_model(seed);
            } else if (!model.empty()) {
                throw ArgumentError("config [noise]: unknown model '" + model + "'");
            }
            out.noise.seed = seed;
            out.shots = get(section, name, "shots", out.shots);
        } else {
            throw ArgumentError("config: unknown section [" + name + "]");
        }
    }
    return out;
}

RunSettings load_config(const std::filesystem::path &path, const RunSettings &base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ArgumentError("cannot open config '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), base);
}

std::string sweep_csv(const OtocSweep &sweep) {
    std::string out = "t,re_f,re_f_oracle,im_f_oracle,commutator_sq\n";
    for (const auto &p : sweep.points) {
        out += fmt17(p.t) + ',' + fmt17(p.re_f) + ',' + fmt17(p.f_exact.real()) + ',' + fmt17(p.f_exact.imag()) +
               ',' + fmt17(p.commutator_sq) + '\n';
    }
    return out;
}

std::string manifest_json(const RunSettings &settings) { return manifest(settings).dump(2) + "\n"; }

std::string sweep_json(const OtocSweep &sweep, const RunSettings &settings) {
    ordered_json doc;
    doc["manifest"] = manifest(settings);
    doc["provenance"] = to_string(sweep.provenance);
    doc["im_f_source"] = "oracle";
    doc["dominant_period"] = dominant_period(sweep);
    doc["mean_abs_re_f"] = sweep.mean_abs_re_f();
    doc["max_abs_re_f"] = sweep.max_abs_re_f();
    ordered_json pts = ordered_json::array();
    for (const auto &p : sweep.points) {
        pts.push_back({{"t", p.t},
                       {"re_f", p.re_f},
                       {"re_f_oracle", p.f_exact.real()},
                       {"im_f_oracle", p.f_exact.imag()},
                       {"commutator_sq", p.commutator_sq}});
    }
    doc["points"] = std::move(pts);
    return doc.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path &path, const std::string &content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot write '" + tmp.string() + "'");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            throw Error("short write to '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error("cannot rename into '" + path.string() + "': " + ec.message());
    }
}

}  // namespace otocsim
