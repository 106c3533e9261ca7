// Copyright 2026 The qlre Authors
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

#include "qlre/templates.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qlre {

namespace {

using std::numbers::pi;

// Toffoli layouts over roles a, b (controls) and c (target). Each is an exact
// CCNOT with 6 CNOT, 7 T/T†, 2 H, 1 S, depth 12 and T-depth 6.
constexpr std::string_view kToffoliCompute =
    "h c; cx a b; tdg b; cx a b; cx b c; tdg c; t a; cx a c; t c; tdg b; s b; cx b c; tdg c; cx a c; t c; h c";
constexpr std::string_view kToffoliMiddle =
    "tdg b; h c; cx b c; tdg c; cx a c; t a; t c; cx b c; tdg c; cx a c; t c; h c; cx a b; tdg b; cx a b; s b";
constexpr std::string_view kToffoliUncompute =
    "h c; cx b c; tdg c; cx a c; t c; cx b c; tdg c; tdg b; cx a c; t c; h c; cx a b; tdg b; cx a b; t a; s b";

ExplicitCircuit parse_role_program(std::string_view program) {
    ExplicitCircuit c(3);
    auto role = [](const std::string &r) {
        if (r == "a") return 0;
        if (r == "b") return 1;
        if (r == "c") return 2;
        throw std::logic_error("bad role " + r);
    };
    std::istringstream in{std::string(program)};
    std::string stmt;
    while (std::getline(in, stmt, ';')) {
        std::istringstream words(stmt);
        std::string op, q0, q1;
        words >> op >> q0 >> q1;
        if (op == "cx") {
            c.cnot(role(q0), role(q1));
        } else if (op == "h") {
            c.gate(GateKind::H, role(q0));
        } else if (op == "s") {
            c.gate(GateKind::S, role(q0));
        } else if (op == "t") {
            c.gate(GateKind::T, role(q0));
        } else if (op == "tdg") {
            c.gate(GateKind::Tdag, role(q0));
        } else {
            throw std::logic_error("bad op " + op);
        }
    }
    return c;
}

void require(bool ok, const char *what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

ResourceVector gates(std::initializer_list<std::pair<GateKind, std::int64_t>> list) {
    ResourceVector v;
    for (auto [k, n] : list) {
        v.count(k) += n;
    }
    return v;
}

void add_rotations(ResourceVector &v, const ResourceVector &rot, std::int64_t n) {
    for (std::size_t i = 0; i < kNumGateKinds; ++i) {
        v.counts[i] += rot.counts[i] * n;
    }
}

void add_lifecycle(ResourceVector &v, std::int64_t n) {
    v = seq(v, ResourceVector::lifecycle(n));
}

// Toggles the ancilla by (not sign) xor f. The f flip sits on the ancilla
// between the toggle and the rotation ladder.
void cphase_sign_toggle(ExplicitCircuit &c, int sign, int anc, int f, bool opening) {
    if (f && !opening) {
        c.gate(GateKind::X, anc);
    }
    c.gate(GateKind::X, sign);
    c.cnot(sign, anc);
    c.gate(GateKind::X, sign);
    if (f && opening) {
        c.gate(GateKind::X, anc);
    }
}

}  // namespace

ResourceVector toffoli() {
    ResourceVector v = gates({{GateKind::H, 2}, {GateKind::S, 1}, {GateKind::T, 7}, {GateKind::CNOT, 6}});
    v.depth = 12;
    v.t_depth = 6;
    v.width = 3;
    return v;
}

ResourceVector mcnot(int n) {
    require(n >= 1, "mcnot: need at least one control");
    if (n == 1) {
        return ResourceVector::gate(GateKind::CNOT);
    }
    if (n == 2) {
        return toffoli();
    }
    ResourceVector v = repeat(toffoli(), 2 * n - 3);
    add_lifecycle(v, n - 2);
    v.ancilla_max = n - 2;
    v.width = n + 1;
    return v;
}

ResourceVector qft(int b, const RotationPolicy &policy) {
    require(b >= 1, "qft: need at least one qubit");
    if (b == 1) {
        return ResourceVector::gate(GateKind::H);
    }
    const ResourceVector rot = rotation_cost(policy);
    const std::int64_t pairs = std::int64_t{b} * (b - 1);
    ResourceVector v = gates({{GateKind::H, b}, {GateKind::CNOT, pairs}});
    add_rotations(v, rot, 3 * pairs / 2);
    v.depth = BigInt(b) * b + pairs * rot.depth;
    v.t_depth = pairs * rot.t_depth;
    v.width = b;
    return v;
}

ResourceVector cphase(int n, int f, const RotationPolicy &policy) {
    require(n >= 2, "cphase: need n >= 2");
    require(f == 0 || f == 1, "cphase: f must be 0 or 1");
    const ResourceVector rot = rotation_cost(policy);
    ResourceVector v = gates({{GateKind::X, 4 + 2 * f}, {GateKind::CNOT, 2 * n}});
    add_rotations(v, rot, 2 * (n - 1));
    v.depth = 2 * (n - 1) * (rot.depth + 1) + 6;
    v.t_depth = 2 * (n - 1) * rot.t_depth;
    add_lifecycle(v, 1);
    v.width = n + 1;
    v.ancilla_max = 1;
    return v;
}

ResourceVector ccphase(int n, int f, const RotationPolicy &policy) {
    require(n >= 2, "ccphase: need n >= 2");
    require(f == 0 || f == 1, "ccphase: f must be 0 or 1");
    const ResourceVector rot = rotation_cost(policy);
    // Per magnitude bit: four rotations plus two Toffolis and four CNOTs.
    ResourceVector v = gates({{GateKind::H, 4 * (n - 1)},
                              {GateKind::S, 2 * (n - 1)},
                              {GateKind::T, 14 * (n - 1)},
                              {GateKind::X, 4 + 2 * f},
                              {GateKind::CNOT, 16 * (n - 1) + 2}});
    add_rotations(v, rot, 4 * (n - 1));
    v.depth = 4 * (n - 1) * rot.depth + 36 * (n - 1) + 6;
    v.t_depth = 4 * (n - 1) * rot.t_depth + 14 * (n - 1);
    add_lifecycle(v, 1);
    v.width = n + 2;
    v.ancilla_max = 1;
    return v;
}

ResourceVector croty(int n, int f, const RotationPolicy &policy) {
    require(n >= 2, "croty: need n >= 2");
    require(f == 0 || f == 1, "croty: f must be 0 or 1");
    const ResourceVector rot = rotation_cost(policy);
    ResourceVector v = gates({{GateKind::H, 4 * (n - 1)},
                              {GateKind::S, 2 * (n - 1)},
                              {GateKind::X, 2 * f},
                              {GateKind::CNOT, 2 * n}});
    add_rotations(v, rot, 2 * (n - 1));
    v.depth = 2 * (n - 1) * (rot.depth + 1) + 2 * f;
    v.t_depth = 2 * (n - 1) * rot.t_depth;
    // One measurement, no ancilla; the cycle keeps measurements = ancilla_cycles.
    add_lifecycle(v, 1);
    v.width = n + 1;
    v.ancilla_max = 0;
    return v;
}

std::optional<SmallGate> parse_small_gate(std::string_view name) {
    for (SmallGate g : {SmallGate::CZ, SmallGate::CH, SmallGate::CRz, SmallGate::CRy, SmallGate::CCRz, SmallGate::W}) {
        std::string_view n = small_gate_name(g);
        if (n.size() == name.size() &&
            std::equal(n.begin(), n.end(), name.begin(), [](char x, char y) { return std::tolower(x) == std::tolower(y); })) {
            return g;
        }
    }
    return std::nullopt;
}

std::string_view small_gate_name(SmallGate g) {
    switch (g) {
        case SmallGate::CZ:
            return "CZ";
        case SmallGate::CH:
            return "CH";
        case SmallGate::CRz:
            return "CRz";
        case SmallGate::CRy:
            return "CRy";
        case SmallGate::CCRz:
            return "CCRz";
        case SmallGate::W:
            return "W";
    }
    return "?";
}

ResourceVector small_gate(SmallGate g, const RotationPolicy &policy) {
    const ResourceVector rot = rotation_cost(policy);
    ResourceVector v;
    switch (g) {
        case SmallGate::CZ:
            v = gates({{GateKind::H, 2}, {GateKind::CNOT, 1}});
            v.depth = 3;
            v.width = 2;
            break;
        case SmallGate::CH:
            v = gates({{GateKind::CNOT, 1}, {GateKind::Z, 4}, {GateKind::S, 6}, {GateKind::H, 4}, {GateKind::T, 2},
                       {GateKind::X, 2}});
            v.depth = 17;
            v.t_depth = 2;
            v.width = 2;
            break;
        case SmallGate::CRz:
            v = gates({{GateKind::CNOT, 2}});
            add_rotations(v, rot, 2);
            v.depth = 2 + 2 * rot.depth;
            v.t_depth = 2 * rot.t_depth;
            v.width = 2;
            break;
        case SmallGate::CRy:
            v = gates({{GateKind::CNOT, 2}, {GateKind::H, 4}, {GateKind::S, 2}});
            add_rotations(v, rot, 2);
            v.depth = 8 + 2 * rot.depth;
            v.t_depth = 2 * rot.t_depth;
            v.width = 2;
            break;
        case SmallGate::CCRz:
            v = gates({{GateKind::CNOT, 4}});
            add_rotations(v, rot, 4);
            v.depth = 4 + 4 * rot.depth;
            v.t_depth = 4 * rot.t_depth;
            v.width = 3;
            break;
        case SmallGate::W:
            v = gates({{GateKind::CNOT, 3}, {GateKind::Z, 4}, {GateKind::S, 6}, {GateKind::H, 4}, {GateKind::T, 2},
                       {GateKind::X, 2}});
            v.depth = 21;
            v.t_depth = 2;
            v.width = 2;
            break;
    }
    return v;
}

void append_ry_quarter(ExplicitCircuit &c, bool positive, int q) {
    static constexpr std::array<GateKind, 8> kPlus = {GateKind::S, GateKind::H, GateKind::T, GateKind::S,
                                                      GateKind::H, GateKind::X, GateKind::Z, GateKind::S};
    static constexpr std::array<GateKind, 8> kMinus = {GateKind::Sdag, GateKind::Z,    GateKind::X, GateKind::H,
                                                       GateKind::Sdag, GateKind::Tdag, GateKind::H, GateKind::Sdag};
    for (GateKind k : positive ? kPlus : kMinus) {
        c.gate(k, q);
    }
}

ExplicitCircuit expand_toffoli(ToffoliVariant variant) {
    switch (variant) {
        case ToffoliVariant::Compute:
            return parse_role_program(kToffoliCompute);
        case ToffoliVariant::Middle:
            return parse_role_program(kToffoliMiddle);
        case ToffoliVariant::Uncompute:
            break;
    }
    return parse_role_program(kToffoliUncompute);
}

ExplicitCircuit expand_mcnot(int n) {
    require(n >= 1, "mcnot: need at least one control");
    if (n == 1) {
        ExplicitCircuit c(2);
        c.cnot(0, 1);
        return c;
    }
    if (n == 2) {
        return expand_toffoli(ToffoliVariant::Uncompute);
    }
    const int target = n;
    auto anc = [n](int i) { return n + 1 + i; };
    ExplicitCircuit c(2 * n - 1);
    for (int i = 0; i < n - 2; ++i) {
        c.gate(GateKind::AncillaInit, anc(i));
    }
    std::vector<std::array<int, 3>> ladder;
    ladder.push_back({0, 1, anc(0)});
    for (int i = 1; i <= n - 3; ++i) {
        ladder.push_back({i + 1, anc(i - 1), anc(i)});
    }
    const ExplicitCircuit compute = expand_toffoli(ToffoliVariant::Compute);
    const ExplicitCircuit middle = expand_toffoli(ToffoliVariant::Middle);
    const ExplicitCircuit uncompute = expand_toffoli(ToffoliVariant::Uncompute);
    for (const auto &t : ladder) {
        c.append(compute, {t[0], t[1], t[2]});
    }
    c.append(middle, {n - 1, anc(n - 3), target});
    for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) {
        c.append(uncompute, {(*it)[0], (*it)[1], (*it)[2]});
    }
    for (int i = 0; i < n - 2; ++i) {
        c.gate(GateKind::Measure, anc(i));
        c.gate(GateKind::AncillaTerm, anc(i));
    }
    return c;
}

ExplicitCircuit expand_qft(int b) {
    require(b >= 1, "qft: need at least one qubit");
    ExplicitCircuit c(b);
    for (int i = 0; i < b; ++i) {
        c.gate(GateKind::H, i);
        // Controls in descending order keep consecutive stages strictly serial.
        for (int ctl = b - 1; ctl > i; --ctl) {
            const int k = ctl - i + 1;
            const double phi = 2.0 * pi / std::ldexp(1.0, k);
            c.cnot(ctl, i);
            c.rotation(Axis::Z, -phi / 2, i);
            c.cnot(ctl, i);
            c.rotation(Axis::Z, phi / 2, i);
            c.rotation(Axis::Z, phi / 2, ctl);
        }
    }
    return c;
}

ExplicitCircuit expand_cphase(int n, int f, double phi) {
    require(n >= 2, "cphase: need n >= 2");
    require(f == 0 || f == 1, "cphase: f must be 0 or 1");
    const int sign = n - 1;
    const int anc = n;
    ExplicitCircuit c(n + 1);
    c.gate(GateKind::AncillaInit, anc);
    cphase_sign_toggle(c, sign, anc, f, true);
    for (int i = 0; i < n - 1; ++i) {
        const double theta = 2.0 * phi * std::ldexp(1.0, i);
        c.cnot(i, anc);
        c.rotation(Axis::Z, -theta / 2, anc);
        c.cnot(i, anc);
        c.rotation(Axis::Z, theta / 2, anc);
    }
    cphase_sign_toggle(c, sign, anc, f, false);
    c.gate(GateKind::Measure, anc);
    c.gate(GateKind::AncillaTerm, anc);
    return c;
}

ExplicitCircuit expand_croty(int n, int f, double theta) {
    require(n >= 2, "croty: need n >= 2");
    require(f == 0 || f == 1, "croty: f must be 0 or 1");
    const int sign = n - 1;
    const int target = n;
    ExplicitCircuit c(n + 1);
    if (f) {
        c.gate(GateKind::X, target);
    }
    c.cnot(sign, target);
    for (int i = 0; i < n - 1; ++i) {
        const double alpha = theta * std::ldexp(1.0, i);
        c.gate(GateKind::H, target);
        c.gate(GateKind::S, target);
        c.gate(GateKind::H, target);
        c.cnot(i, target);
        c.rotation(Axis::Z, -alpha / 2, target);
        c.cnot(i, target);
        c.rotation(Axis::Z, alpha / 2, target);
        c.gate(GateKind::H, target);
        c.gate(GateKind::Sdag, target);
        c.gate(GateKind::H, target);
    }
    c.cnot(sign, target);
    if (f) {
        c.gate(GateKind::X, target);
    }
    c.gate(GateKind::Measure, target);
    return c;
}

ExplicitCircuit expand_small_gate(SmallGate g, double angle) {
    switch (g) {
        case SmallGate::CZ: {
            ExplicitCircuit c(2);
            c.gate(GateKind::H, 1);
            c.cnot(0, 1);
            c.gate(GateKind::H, 1);
            return c;
        }
        case SmallGate::CH: {
            ExplicitCircuit c(2);
            c.gate(GateKind::Z, 0);
            append_ry_quarter(c, true, 1);
            c.cnot(0, 1);
            c.gate(GateKind::Z, 0);
            append_ry_quarter(c, false, 1);
            return c;
        }
        case SmallGate::CRz: {
            ExplicitCircuit c(2);
            c.cnot(0, 1);
            c.rotation(Axis::Z, -angle / 2, 1);
            c.cnot(0, 1);
            c.rotation(Axis::Z, angle / 2, 1);
            return c;
        }
        case SmallGate::CRy: {
            ExplicitCircuit c(2);
            c.gate(GateKind::H, 1);
            c.gate(GateKind::S, 1);
            c.gate(GateKind::H, 1);
            c.append(expand_small_gate(SmallGate::CRz, angle), {0, 1});
            c.gate(GateKind::H, 1);
            c.gate(GateKind::Sdag, 1);
            c.gate(GateKind::H, 1);
            return c;
        }
        case SmallGate::CCRz: {
            ExplicitCircuit c(3);
            const double q = angle / 4;
            c.rotation(Axis::Z, q, 2);
            c.cnot(1, 2);
            c.rotation(Axis::Z, -q, 2);
            c.cnot(0, 2);
            c.rotation(Axis::Z, q, 2);
            c.cnot(1, 2);
            c.rotation(Axis::Z, -q, 2);
            c.cnot(0, 2);
            return c;
        }
        case SmallGate::W: {
            ExplicitCircuit c(2);
            c.gate(GateKind::Z, 0);
            c.cnot(0, 1);
            append_ry_quarter(c, false, 0);
            c.cnot(1, 0);
            append_ry_quarter(c, true, 0);
            c.cnot(0, 1);
            c.gate(GateKind::Z, 1);
            return c;
        }
    }
    throw std::invalid_argument("unknown small gate");
}

}  // namespace qlre
