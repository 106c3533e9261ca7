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

#include "qlre/verifier.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qlre/library.hpp"
#include "qlre/templates.hpp"

namespace qlre {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kTolerance = 1e-10;

Eigen::Matrix2cd single_matrix(GateKind k) {
    Eigen::Matrix2cd m;
    const cd i(0, 1);
    switch (k) {
        case GateKind::X:
            m << 0, 1, 1, 0;
            break;
        case GateKind::Y:
            m << 0, -i, i, 0;
            break;
        case GateKind::Z:
            m << 1, 0, 0, -1;
            break;
        case GateKind::H:
            m = hadamard();
            break;
        case GateKind::S:
            m << 1, 0, 0, i;
            break;
        case GateKind::Sdag:
            m << 1, 0, 0, -i;
            break;
        case GateKind::T:
            m << 1, 0, 0, std::polar(1.0, kPi / 4);
            break;
        case GateKind::Tdag:
            m << 1, 0, 0, std::polar(1.0, -kPi / 4);
            break;
        default:
            m.setIdentity();
            break;
    }
    return m;
}

Eigen::Matrix2cd rx(double theta) {
    Eigen::Matrix2cd m;
    const cd i(0, 1);
    m << std::cos(theta / 2), -i * std::sin(theta / 2), -i * std::sin(theta / 2), std::cos(theta / 2);
    return m;
}

void apply_single(Unitary &u, const Eigen::Matrix2cd &g, int q) {
    const Eigen::Index bit = Eigen::Index{1} << q;
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
        if (r & bit) continue;
        const Eigen::Index s = r | bit;
        Eigen::RowVectorXcd a = u.row(r);
        Eigen::RowVectorXcd b = u.row(s);
        u.row(r) = g(0, 0) * a + g(0, 1) * b;
        u.row(s) = g(1, 0) * a + g(1, 1) * b;
    }
}

void apply_cnot(Unitary &u, int control, int target) {
    const Eigen::Index c = Eigen::Index{1} << control;
    const Eigen::Index t = Eigen::Index{1} << target;
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
        if ((r & c) && !(r & t)) {
            u.row(r).swap(u.row(r | t));
        }
    }
}

std::string describe(const std::string &name, const std::vector<int> &params) {
    std::string s = name;
    if (!params.empty()) {
        s += "(";
        for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
        s += ")";
    }
    return s;
}

std::string fmt_distance(double d) {
    std::ostringstream out;
    out << "distance " << d;
    return out.str();
}

}  // namespace

Unitary simulate(const ExplicitCircuit &c) {
    if (c.n_qubits > kMaxUnitaryQubits) {
        throw std::invalid_argument("simulate: " + std::to_string(c.n_qubits) + " qubits exceed the limit of " +
                                    std::to_string(kMaxUnitaryQubits));
    }
    c.validate();
    const Eigen::Index dim = Eigen::Index{1} << c.n_qubits;
    Unitary u = Unitary::Identity(dim, dim);
    for (const Op &op : c.ops) {
        if (op.type == Op::Type::Rotation) {
            const Eigen::Matrix2cd g = op.axis == Axis::X   ? rx(op.angle)
                                       : op.axis == Axis::Y ? ry(op.angle)
                                                            : rz(op.angle);
            apply_single(u, g, op.qubits[0]);
        } else if (op.kind == GateKind::CNOT) {
            apply_cnot(u, op.qubits[0], op.qubits[1]);
        } else if (!is_bookkeeping(op.kind)) {
            apply_single(u, single_matrix(op.kind), op.qubits[0]);
        }
    }
    return u;
}

double phase_distance(const Unitary &a, const Unitary &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    cd phase(1, 0);
    if (std::abs(b(r, c)) > 0 && std::abs(a(r, c)) > 0) {
        phase = a(r, c) / b(r, c);
        phase /= std::abs(phase);
    }
    return (a - phase * b).cwiseAbs().maxCoeff();
}

Unitary restrict_to_zero(const Unitary &u, int n_qubits, const std::vector<int> &fixed_zero) {
    std::vector<Eigen::Index> keep;
    Eigen::Index mask = 0;
    for (int q : fixed_zero) mask |= Eigen::Index{1} << q;
    for (Eigen::Index i = 0; i < (Eigen::Index{1} << n_qubits); ++i) {
        if (!(i & mask)) keep.push_back(i);
    }
    const auto k = static_cast<Eigen::Index>(keep.size());
    Unitary out(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            out(i, j) = u(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
        }
    }
    return out;
}

ExplicitCircuit expand(std::string_view name, const std::vector<int> &params, double angle) {
    const auto arity = [&](std::size_t n) {
        if (params.size() != n) {
            throw std::invalid_argument(std::string(name) + " takes " + std::to_string(n) + " parameter(s)");
        }
    };
    ExplicitCircuit c;
    if (name == "toffoli") {
        arity(0);
        c = expand_toffoli();
    } else if (name == "mcnot") {
        arity(1);
        c = expand_mcnot(params[0]);
    } else if (name == "qft") {
        arity(1);
        c = expand_qft(params[0]);
    } else if (name == "cphase") {
        arity(2);
        c = expand_cphase(params[0], params[1], angle);
    } else if (name == "croty") {
        arity(2);
        c = expand_croty(params[0], params[1], angle);
    } else if (auto g = parse_small_gate(name)) {
        arity(0);
        c = expand_small_gate(*g, angle);
    } else {
        throw std::invalid_argument("no expansion defined for '" + std::string(name) + "'");
    }
    if (c.n_qubits > kMaxExpandQubits) {
        throw std::invalid_argument("expansion of '" + std::string(name) + "' needs " + std::to_string(c.n_qubits) +
                                    " qubits, limit is " + std::to_string(kMaxExpandQubits));
    }
    return c;
}

Eigen::Matrix2cd hadamard() {
    Eigen::Matrix2cd m;
    m << 1, 1, 1, -1;
    return m / std::sqrt(2.0);
}

Eigen::Matrix2cd ry(double theta) {
    Eigen::Matrix2cd m;
    m << std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2);
    return m;
}

Eigen::Matrix2cd rz(double theta) {
    Eigen::Matrix2cd m;
    m << std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2);
    return m;
}

Unitary mcnot_matrix(int n) {
    const Eigen::Index dim = Eigen::Index{1} << (n + 1);
    const Eigen::Index controls = (Eigen::Index{1} << n) - 1;
    Unitary u = Unitary::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        const Eigen::Index i = (j & controls) == controls ? j ^ (Eigen::Index{1} << n) : j;
        u(i, j) = 1;
    }
    return u;
}

Unitary ccnot_matrix() {
    return mcnot_matrix(2);
}

Unitary dft_matrix(int b) {
    const Eigen::Index dim = Eigen::Index{1} << b;
    Unitary u(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index k = 0; k < dim; ++k) {
            u(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(dim)),
                                 2 * kPi * static_cast<double>((j * k) % dim) / static_cast<double>(dim));
        }
    }
    return u;
}

Unitary bit_reversal(int b) {
    const Eigen::Index dim = Eigen::Index{1} << b;
    Unitary u = Unitary::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        Eigen::Index r = 0;
        for (int q = 0; q < b; ++q) {
            if (j & (Eigen::Index{1} << q)) r |= Eigen::Index{1} << (b - 1 - q);
        }
        u(r, j) = 1;
    }
    return u;
}

Unitary w_matrix() {
    // Labels |ab> with a on qubit 0: |01> is index 2, |10> is index 1.
    // W|01> = (|01> + |10>)/sqrt2, W|10> = (|01> - |10>)/sqrt2.
    const double h = 1 / std::sqrt(2.0);
    Unitary u = Unitary::Identity(4, 4);
    u(2, 2) = h;
    u(1, 2) = h;
    u(2, 1) = h;
    u(1, 1) = -h;
    return u;
}

Unitary controlled(const Eigen::Matrix2cd &g) {
    // Control qubit 0, target qubit 1.
    Unitary u = Unitary::Identity(4, 4);
    u(1, 1) = g(0, 0);
    u(1, 3) = g(0, 1);
    u(3, 1) = g(1, 0);
    u(3, 3) = g(1, 1);
    return u;
}

Unitary cphase_matrix(int n, int f, double phi) {
    // Magnitude bits 0..n-2, sign bit n-1; the ancilla is left out.
    const Eigen::Index dim = Eigen::Index{1} << n;
    Unitary u = Unitary::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        const double m = static_cast<double>(j & ((Eigen::Index{1} << (n - 1)) - 1));
        const int s = static_cast<int>((j >> (n - 1)) & 1);
        const double sign = ((s ^ f) != 0) ? -1.0 : 1.0;
        u(j, j) = std::polar(1.0, sign * phi * m);
    }
    return u;
}

Unitary croty_matrix(int n, int f, double theta) {
    const Eigen::Index dim = Eigen::Index{1} << (n + 1);
    const Eigen::Index target = Eigen::Index{1} << n;
    Unitary u = Unitary::Zero(dim, dim);
    for (Eigen::Index j = 0; j < target; ++j) {
        const double m = static_cast<double>(j & ((Eigen::Index{1} << (n - 1)) - 1));
        const int s = static_cast<int>((j >> (n - 1)) & 1);
        const double sign = ((s ^ f) != 0) ? -1.0 : 1.0;
        const Eigen::Matrix2cd g = ry(sign * theta * m);
        u(j, j) = g(0, 0);
        u(j, j | target) = g(0, 1);
        u(j | target, j) = g(1, 0);
        u(j | target, j | target) = g(1, 1);
    }
    return u;
}

Unitary ccrz_matrix(double theta) {
    Unitary u = Unitary::Identity(8, 8);
    const Eigen::Matrix2cd g = rz(theta);
    u(3, 3) = g(0, 0);
    u(3, 7) = g(0, 1);
    u(7, 3) = g(1, 0);
    u(7, 7) = g(1, 1);
    return u;
}

const std::vector<std::string_view> &crosscheck_fields() {
    static const std::vector<std::string_view> fields = [] {
        std::vector<std::string_view> f;
        for (std::string_view name : kFieldNames) {
            if (name != "width") f.push_back(name);
        }
        return f;
    }();
    return fields;
}

CrossResult compare(const std::string &label, const ResourceVector &closed, const ResourceVector &census) {
    CrossResult r;
    r.label = label;
    for (std::string_view f : crosscheck_fields()) {
        BigInt a = get_field(closed, f);
        BigInt b = get_field(census, f);
        if (a != b) {
            r.field = std::string(f);
            r.closed_form = a.str();
            r.expansion = b.str();
            return r;
        }
    }
    r.pass = true;
    return r;
}

CrossResult crosscheck(std::string_view name, const std::vector<int> &params, const RotationPolicy &policy) {
    std::vector<std::int64_t> args(params.begin(), params.end());
    const ResourceVector closed = builtin_leaf(name, args, policy);
    const ResourceVector counted = census(expand(name, params), policy);
    return compare(describe(std::string(name), params), closed, counted);
}

std::vector<std::uint32_t> permutation(const ReversibleCircuit &c) {
    if (c.n_wires > kMaxPermutationWires) {
        throw std::invalid_argument("permutation: " + std::to_string(c.n_wires) + " wires exceed the limit of " +
                                    std::to_string(kMaxPermutationWires));
    }
    const std::uint32_t dim = std::uint32_t{1} << c.n_wires;
    std::vector<std::uint32_t> out(dim);
    for (std::uint32_t x = 0; x < dim; ++x) {
        std::uint32_t s = x;
        for (const RevGate &g : c.gates) {
            const auto bit = [&](std::size_t i) { return (s >> g.wires[i]) & 1U; };
            switch (g.kind) {
                case RevGate::Kind::X:
                    s ^= 1U << g.wires[0];
                    break;
                case RevGate::Kind::CNOT:
                    s ^= bit(0) << g.wires[1];
                    break;
                case RevGate::Kind::Toffoli:
                    s ^= (bit(0) & bit(1)) << g.wires[2];
                    break;
            }
        }
        out[x] = s;
    }
    return out;
}

UfCheck check_uf(const BoolCircuit &f, const ReversibleCircuit &uf, std::uint64_t samples, std::uint64_t seed) {
    UfCheck r;
    const int ni = f.n_inputs();
    const int no = f.n_outputs();
    if (static_cast<int>(uf.input_wires.size()) != ni || static_cast<int>(uf.output_wires.size()) != no) {
        r.failure = "register sizes differ from the boolean circuit";
        return r;
    }
    std::mt19937_64 rng(seed);
    const bool exhaustive = ni <= 16;
    const std::uint64_t n_x = exhaustive ? (std::uint64_t{1} << ni) : samples;
    std::vector<bool> x(static_cast<std::size_t>(ni));
    std::vector<std::uint8_t> state(static_cast<std::size_t>(uf.n_wires));
    for (std::uint64_t t = 0; t < n_x; ++t) {
        for (int i = 0; i < ni; ++i) {
            x[static_cast<std::size_t>(i)] = exhaustive ? ((t >> i) & 1U) != 0 : (rng() & 1U) != 0;
        }
        const std::vector<bool> fx = f.evaluate(x);
        for (int y_fill : {0, 1}) {
            std::fill(state.begin(), state.end(), 0);
            for (int i = 0; i < ni; ++i) state[static_cast<std::size_t>(uf.input_wires[static_cast<std::size_t>(i)])] = x[static_cast<std::size_t>(i)];
            for (int o = 0; o < no; ++o) state[static_cast<std::size_t>(uf.output_wires[static_cast<std::size_t>(o)])] = static_cast<std::uint8_t>(y_fill);
            apply(uf, state);
            ++r.cases;
            std::vector<std::uint8_t> expect(static_cast<std::size_t>(uf.n_wires), 0);
            for (int i = 0; i < ni; ++i) expect[static_cast<std::size_t>(uf.input_wires[static_cast<std::size_t>(i)])] = x[static_cast<std::size_t>(i)];
            for (int o = 0; o < no; ++o) {
                expect[static_cast<std::size_t>(uf.output_wires[static_cast<std::size_t>(o)])] =
                    static_cast<std::uint8_t>(y_fill ^ static_cast<int>(fx[static_cast<std::size_t>(o)]));
            }
            if (state != expect) {
                std::ostringstream msg;
                msg << "input #" << t << " y=" << y_fill << ": ";
                for (int w = 0; w < uf.n_wires; ++w) {
                    if (state[static_cast<std::size_t>(w)] != expect[static_cast<std::size_t>(w)]) {
                        msg << "wire " << w << " is " << int(state[static_cast<std::size_t>(w)]) << ", expected "
                            << int(expect[static_cast<std::size_t>(w)]);
                        break;
                    }
                }
                r.failure = msg.str();
                return r;
            }
        }
    }
    r.pass = true;
    return r;
}

namespace {

Check unitary_check(const std::string &name, const Unitary &got, const Unitary &want) {
    const double d = phase_distance(got, want);
    return Check{name, d <= kTolerance, fmt_distance(d)};
}

std::vector<Check> leaf_suite() {
    std::vector<Check> out;
    const double angle = 0.7;
    out.push_back(unitary_check("toffoli == CCNOT", simulate(expand("toffoli")), ccnot_matrix()));
    for (int n = 1; n <= 4; ++n) {
        const ExplicitCircuit c = expand("mcnot", {n});
        std::vector<int> anc;
        for (int q = n + 1; q < c.n_qubits; ++q) anc.push_back(q);
        out.push_back(unitary_check("mcnot(" + std::to_string(n) + ") == C^nNOT on clean ancillas",
                                    restrict_to_zero(simulate(c), c.n_qubits, anc), mcnot_matrix(n)));
    }
    for (int b = 1; b <= 4; ++b) {
        const Unitary u = simulate(expand("qft", {b}));
        const Unitary f = dft_matrix(b);
        const Unitary r = bit_reversal(b);
        const double d = std::min({phase_distance(u, f), phase_distance(u, r * f), phase_distance(u, f * r)});
        out.push_back(Check{"qft(" + std::to_string(b) + ") == DFT up to bit order", d <= kTolerance, fmt_distance(d)});
    }
    Eigen::Matrix2cd z;
    z << 1, 0, 0, -1;
    out.push_back(unitary_check("w == walk gate (I on 00,11; H on 01,10)", simulate(expand("w")), w_matrix()));
    out.push_back(unitary_check("ch == controlled H", simulate(expand("ch")), controlled(hadamard())));
    out.push_back(unitary_check("cz == controlled Z", simulate(expand("cz")), controlled(z)));
    out.push_back(unitary_check("crz == controlled Rz", simulate(expand("crz", {}, angle)), controlled(rz(angle))));
    out.push_back(unitary_check("cry == controlled Ry", simulate(expand("cry", {}, angle)), controlled(ry(angle))));
    out.push_back(unitary_check("ccrz == doubly controlled Rz", simulate(expand("ccrz", {}, angle)), ccrz_matrix(angle)));
    for (int n = 2; n <= 4; ++n) {
        for (int f = 0; f <= 1; ++f) {
            const std::string p = "(" + std::to_string(n) + "," + std::to_string(f) + ")";
            const ExplicitCircuit cp = expand("cphase", {n, f}, angle);
            out.push_back(unitary_check("cphase" + p + " == signed phase",
                                        restrict_to_zero(simulate(cp), cp.n_qubits, {n}), cphase_matrix(n, f, angle)));
            out.push_back(unitary_check("croty" + p + " == signed Ry", simulate(expand("croty", {n, f}, angle)),
                                        croty_matrix(n, f, angle)));
        }
    }
    return out;
}

std::vector<Check> tables_suite() {
    std::vector<Check> out;
    const auto add = [&out](const CrossResult &r) {
        out.push_back(Check{r.label + " closed form == expansion", r.pass,
                            r.pass ? "all fields equal"
                                   : r.field + ": closed form " + r.closed_form + ", expansion " + r.expansion});
    };
    add(crosscheck("toffoli", {}));
    for (int n = 1; n <= 8; ++n) add(crosscheck("mcnot", {n}));
    for (int b = 1; b <= 6; ++b) add(crosscheck("qft", {b}));
    for (int n = 2; n <= 6; ++n) {
        for (int f = 0; f <= 1; ++f) add(crosscheck("cphase", {n, f}));
    }
    for (int n = 2; n <= 6; ++n) {
        for (int f = 0; f <= 1; ++f) add(crosscheck("croty", {n, f}));
    }
    for (const char *g : {"cz", "ch", "crz", "cry", "ccrz", "w"}) add(crosscheck(g, {}));
    return out;
}

std::vector<Check> reversible_suite() {
    std::vector<Check> out;
    for (int n = 0; n <= 3; ++n) {
        const std::size_t rows = std::size_t{1} << n;
        const std::uint64_t functions = std::uint64_t{1} << rows;
        std::uint64_t passed = 0;
        std::string failure;
        for (std::uint64_t code = 0; code < functions; ++code) {
            std::vector<bool> table(rows);
            for (std::size_t i = 0; i < rows; ++i) table[i] = ((code >> i) & 1U) != 0;
            const BoolCircuit f = from_truth_table(n, table);
            const UfCheck r = check_uf(f, make_uf(compile_tf(f)));
            if (r.pass) {
                ++passed;
            } else if (failure.empty()) {
                failure = "function " + std::to_string(code) + ": " + r.failure;
            }
        }
        out.push_back(Check{"U_f for all " + std::to_string(functions) + " functions of " + std::to_string(n) +
                                " inputs",
                            passed == functions, failure.empty() ? "all cases pass" : failure});
    }
    for (int n = 1; n <= 8; ++n) {
        const BoolCircuit adder = ripple_adder(n);
        const UfCheck r = check_uf(adder, make_uf(compile_tf(adder)));
        out.push_back(Check{"U_f for the " + std::to_string(n) + "-bit adder", r.pass,
                            r.pass ? std::to_string(r.cases) + " cases" : r.failure});
    }
    return out;
}

}  // namespace

std::vector<Check> run_suite(std::string_view suite) {
    if (suite == "leaf") return leaf_suite();
    if (suite == "tables") return tables_suite();
    if (suite == "reversible") return reversible_suite();
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "' (leaf, reversible, tables)");
}

}  // namespace qlre
