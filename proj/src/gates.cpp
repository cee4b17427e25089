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

#include "otocsim/gates.hpp"

#include <cmath>
#include <numbers>

#include "otocsim/errors.hpp"

namespace otocsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

}  // namespace

double wrap_angle(double radians) {
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod can return exactly 2pi after the correction above for tiny negatives.
    return r >= kTwoPi ? 0.0 : r;
}

GateParams GateParams::canonical() const { return {wrap_angle(theta), wrap_angle(phi), wrap_angle(lambda)}; }

GateMatrix u1(double lambda) {
    GateMatrix m = GateMatrix::Identity(2, 2);
    m(1, 1) = std::exp(kI * lambda);
    return m;
}

GateMatrix u3(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    GateMatrix m(2, 2);
    m(0, 0) = c;
    m(0, 1) = -std::exp(kI * lambda) * s;
    m(1, 0) = std::exp(kI * phi) * s;
    m(1, 1) = std::exp(kI * (phi + lambda)) * c;
    return m;
}

GateMatrix u3(const GateParams &p) { return u3(p.theta, p.phi, p.lambda); }

GateMatrix x() {
    GateMatrix m = GateMatrix::Zero(2, 2);
    m(0, 1) = m(1, 0) = 1.0;
    return m;
}

GateMatrix y() {
    GateMatrix m = GateMatrix::Zero(2, 2);
    m(0, 1) = -kI;
    m(1, 0) = kI;
    return m;
}

GateMatrix z() {
    GateMatrix m = GateMatrix::Identity(2, 2);
    m(1, 1) = -1.0;
    return m;
}

GateMatrix h() {
    const double r = 1.0 / std::numbers::sqrt2;
    GateMatrix m(2, 2);
    m << r, r, r, -r;
    return m;
}

GateMatrix cnot() { return controlled(x()); }

GateMatrix controlled(const GateMatrix &u) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw SizeError("controlled() expects a 2x2 matrix");
    }
    require_unitary(u);
    GateMatrix m = GateMatrix::Identity(4, 4);
    m.block(2, 2, 2, 2) = u;
    return m;
}

U3Form to_u3(const GateMatrix &u) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw SizeError("to_u3 expects a 2x2 matrix");
    }
    constexpr double eps = 1e-14;
    const double c = std::abs(u(0, 0));
    const double s = std::abs(u(1, 0));
    U3Form f;
    f.params.theta = 2.0 * std::atan2(s, c);
    if (s <= eps) {
        f.global_phase = std::arg(u(0, 0));
        f.params.phi = 0.0;
        f.params.lambda = std::arg(u(1, 1)) - f.global_phase;
    } else if (c <= eps) {
        f.global_phase = std::arg(-u(0, 1));
        f.params.lambda = 0.0;
        f.params.phi = std::arg(u(1, 0)) - f.global_phase;
    } else {
        f.global_phase = std::arg(u(0, 0));
        f.params.phi = std::arg(u(1, 0)) - f.global_phase;
        f.params.lambda = std::arg(-u(0, 1)) - f.global_phase;
    }
    return f;
}

GateMatrix sqrt_unitary(const GateMatrix &u) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw SizeError("sqrt_unitary expects a 2x2 matrix");
    }
    require_unitary(u);
    const cplx tr = u.trace();
    const cplx det = u.determinant();
    const cplx disc = std::sqrt(tr * tr - 4.0 * det);
    const cplx l1 = 0.5 * (tr + disc);
    const cplx l2 = 0.5 * (tr - disc);
    // Pick the branch of s2 closest to s1 so s1 + s2 stays away from zero.
    const cplx s1 = std::sqrt(l1);
    const cplx s2 = s1 * std::sqrt(l2 / l1);
    return (u + s1 * s2 * GateMatrix::Identity(2, 2)) / (s1 + s2);
}

double relative_phase(const GateMatrix &a, const GateMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw SizeError("matrix shapes differ");
    }
    Eigen::Index r = 0, c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(b(r, c)) == 0.0) {
        return 0.0;
    }
    return std::arg(a(r, c) / b(r, c));
}

double projective_distance(const GateMatrix &a, const GateMatrix &b) {
    const double phase = relative_phase(a, b);
    return (a - std::exp(kI * phase) * b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const GateMatrix &a, const GateMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw SizeError("matrix shapes differ");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace otocsim
