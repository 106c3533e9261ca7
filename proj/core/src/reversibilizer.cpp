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

#include "qlre/reversibilizer.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <boost/algorithm/string/split.hpp>
#include <boost/algorithm/string/trim.hpp>

#include "qlre/templates.hpp"

namespace qlre {

BoolParseError::BoolParseError(int line, const std::string &what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

int BoolCircuit::push(BoolNode node) {
    const int id = static_cast<int>(nodes_.size());
    for (int operand : {node.a, node.b}) {
        if (operand >= id) {
            throw std::invalid_argument("operand must precede its user");
        }
    }
    if ((node.op == BoolNode::Op::Not || node.op == BoolNode::Op::And || node.op == BoolNode::Op::Xor) &&
        node.a < 0) {
        throw std::invalid_argument("missing operand");
    }
    if ((node.op == BoolNode::Op::And || node.op == BoolNode::Op::Xor) && node.b < 0) {
        throw std::invalid_argument("missing operand");
    }
    if (node.name.empty()) {
        node.name = "w" + std::to_string(id);
    }
    nodes_.push_back(std::move(node));
    return id;
}

int BoolCircuit::add_input(std::string name) {
    int id = push(BoolNode{BoolNode::Op::Input, -1, -1, false, std::move(name)});
    inputs_.push_back(id);
    return id;
}

int BoolCircuit::add_const(bool value, std::string name) {
    return push(BoolNode{BoolNode::Op::Const, -1, -1, value, std::move(name)});
}

int BoolCircuit::add_not(int a, std::string name) {
    return push(BoolNode{BoolNode::Op::Not, a, -1, false, std::move(name)});
}

int BoolCircuit::add_and(int a, int b, std::string name) {
    return push(BoolNode{BoolNode::Op::And, a, b, false, std::move(name)});
}

int BoolCircuit::add_xor(int a, int b, std::string name) {
    return push(BoolNode{BoolNode::Op::Xor, a, b, false, std::move(name)});
}

void BoolCircuit::add_output(int node) {
    if (node < 0 || node >= static_cast<int>(nodes_.size())) {
        throw std::invalid_argument("output refers to an unknown node");
    }
    outputs_.push_back(node);
}

std::vector<bool> BoolCircuit::evaluate(const std::vector<bool> &input) const {
    if (input.size() != inputs_.size()) {
        throw std::invalid_argument("evaluate: wrong number of inputs");
    }
    std::vector<bool> val(nodes_.size());
    std::size_t next_input = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const BoolNode &n = nodes_[i];
        switch (n.op) {
            case BoolNode::Op::Input:
                val[i] = input[next_input++];
                break;
            case BoolNode::Op::Const:
                val[i] = n.value;
                break;
            case BoolNode::Op::Not:
                val[i] = !val[static_cast<std::size_t>(n.a)];
                break;
            case BoolNode::Op::And:
                val[i] = val[static_cast<std::size_t>(n.a)] && val[static_cast<std::size_t>(n.b)];
                break;
            case BoolNode::Op::Xor:
                val[i] = val[static_cast<std::size_t>(n.a)] != val[static_cast<std::size_t>(n.b)];
                break;
        }
    }
    std::vector<bool> out;
    for (int o : outputs_) {
        out.push_back(val[static_cast<std::size_t>(o)]);
    }
    return out;
}

BoolCircuit BoolCircuit::pruned() const {
    std::vector<bool> live(nodes_.size(), false);
    for (int o : outputs_) {
        live[static_cast<std::size_t>(o)] = true;
    }
    for (std::size_t i = nodes_.size(); i-- > 0;) {
        if (!live[i]) continue;
        for (int operand : {nodes_[i].a, nodes_[i].b}) {
            if (operand >= 0) live[static_cast<std::size_t>(operand)] = true;
        }
    }
    BoolCircuit out;
    std::vector<int> remap(nodes_.size(), -1);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const BoolNode &n = nodes_[i];
        if (n.op != BoolNode::Op::Input && !live[i]) continue;
        BoolNode copy = n;
        copy.a = n.a >= 0 ? remap[static_cast<std::size_t>(n.a)] : -1;
        copy.b = n.b >= 0 ? remap[static_cast<std::size_t>(n.b)] : -1;
        remap[i] = out.push(copy);
        if (n.op == BoolNode::Op::Input) out.inputs_.push_back(remap[i]);
    }
    for (int o : outputs_) {
        out.outputs_.push_back(remap[static_cast<std::size_t>(o)]);
    }
    return out;
}

BoolCircuit BoolCircuit::parse(std::string_view text) {
    BoolCircuit c;
    std::map<std::string, int, std::less<>> names;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    const auto lookup = [&](const std::string &name) {
        auto it = names.find(name);
        if (it == names.end()) {
            throw BoolParseError(line_no, "undefined wire '" + name + "'");
        }
        return it->second;
    };
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        boost::algorithm::trim(line);
        if (line.empty()) continue;
        std::vector<std::string> tok;
        boost::algorithm::split(tok, line, [](char ch) { return ch == ' ' || ch == '\t'; },
                                boost::algorithm::token_compress_on);
        if (tok[0] == "OUTPUT") {
            if (tok.size() < 2) throw BoolParseError(line_no, "OUTPUT needs at least one wire");
            for (std::size_t i = 1; i < tok.size(); ++i) c.add_output(lookup(tok[i]));
            continue;
        }
        if (tok.size() < 3 || tok[1] != "=") {
            throw BoolParseError(line_no, "expected '<wire> = <OP> ...' or 'OUTPUT <wire> ...'");
        }
        const std::string &name = tok[0];
        if (names.contains(name)) {
            throw BoolParseError(line_no, "wire '" + name + "' defined twice");
        }
        const std::string &op = tok[2];
        const std::size_t args = tok.size() - 3;
        const auto need = [&](std::size_t n) {
            if (args != n) {
                throw BoolParseError(line_no, op + " takes " + std::to_string(n) + " operand(s)");
            }
        };
        int id = 0;
        if (op == "INPUT") {
            need(0);
            id = c.add_input(name);
        } else if (op == "CONST") {
            need(1);
            if (tok[3] != "0" && tok[3] != "1") throw BoolParseError(line_no, "CONST takes 0 or 1");
            id = c.add_const(tok[3] == "1", name);
        } else if (op == "NOT") {
            need(1);
            id = c.add_not(lookup(tok[3]), name);
        } else if (op == "AND") {
            need(2);
            id = c.add_and(lookup(tok[3]), lookup(tok[4]), name);
        } else if (op == "XOR") {
            need(2);
            id = c.add_xor(lookup(tok[3]), lookup(tok[4]), name);
        } else {
            throw BoolParseError(line_no, "unknown operation '" + op + "'");
        }
        names.emplace(name, id);
    }
    if (c.outputs_.empty()) {
        throw BoolParseError(line_no, "circuit has no OUTPUT");
    }
    return c.pruned();
}

std::string BoolCircuit::to_text() const {
    std::ostringstream out;
    for (const BoolNode &n : nodes_) {
        out << n.name << " = ";
        switch (n.op) {
            case BoolNode::Op::Input:
                out << "INPUT";
                break;
            case BoolNode::Op::Const:
                out << "CONST " << (n.value ? 1 : 0);
                break;
            case BoolNode::Op::Not:
                out << "NOT " << nodes_[static_cast<std::size_t>(n.a)].name;
                break;
            case BoolNode::Op::And:
                out << "AND " << nodes_[static_cast<std::size_t>(n.a)].name << " "
                    << nodes_[static_cast<std::size_t>(n.b)].name;
                break;
            case BoolNode::Op::Xor:
                out << "XOR " << nodes_[static_cast<std::size_t>(n.a)].name << " "
                    << nodes_[static_cast<std::size_t>(n.b)].name;
                break;
        }
        out << "\n";
    }
    out << "OUTPUT";
    for (int o : outputs_) out << " " << nodes_[static_cast<std::size_t>(o)].name;
    out << "\n";
    return out.str();
}

BoolCircuit from_truth_table(int n_inputs, const std::vector<bool> &table) {
    if (n_inputs < 0 || n_inputs > 16 || table.size() != (std::size_t{1} << n_inputs)) {
        throw std::invalid_argument("truth table size must be 2^n_inputs");
    }
    // Moebius transform gives the ANF coefficients.
    std::vector<bool> anf = table;
    for (int j = 0; j < n_inputs; ++j) {
        for (std::size_t i = 0; i < anf.size(); ++i) {
            if (i & (std::size_t{1} << j)) anf[i] = anf[i] != anf[i ^ (std::size_t{1} << j)];
        }
    }
    BoolCircuit c;
    std::vector<int> x;
    for (int j = 0; j < n_inputs; ++j) x.push_back(c.add_input("x" + std::to_string(j)));
    int acc = -1;
    for (std::size_t m = 0; m < anf.size(); ++m) {
        if (!anf[m]) continue;
        int term = -1;
        for (int j = 0; j < n_inputs; ++j) {
            if (!(m & (std::size_t{1} << j))) continue;
            term = term < 0 ? x[static_cast<std::size_t>(j)] : c.add_and(term, x[static_cast<std::size_t>(j)]);
        }
        if (term < 0) term = c.add_const(true);
        acc = acc < 0 ? term : c.add_xor(acc, term);
    }
    if (acc < 0) acc = c.add_const(false);
    c.add_output(acc);
    return c;
}

BoolCircuit ripple_adder(int n) {
    if (n < 1) {
        throw std::invalid_argument("ripple_adder: n must be >= 1");
    }
    BoolCircuit c;
    std::vector<int> a, b;
    for (int i = 0; i < n; ++i) a.push_back(c.add_input("a" + std::to_string(i)));
    for (int i = 0; i < n; ++i) b.push_back(c.add_input("b" + std::to_string(i)));
    std::vector<int> sum;
    int carry = -1;
    for (int i = 0; i < n; ++i) {
        const std::string s = std::to_string(i);
        if (i == 0) {
            sum.push_back(c.add_xor(a[0], b[0], "s0"));
            carry = c.add_and(a[0], b[0], "c0");
            continue;
        }
        int p = c.add_xor(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)], "p" + s);
        sum.push_back(c.add_xor(p, carry, "s" + s));
        int g = c.add_and(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)], "g" + s);
        int q = c.add_and(p, carry, "q" + s);
        // g and p AND carry are never both 1, so XOR acts as OR.
        carry = c.add_xor(g, q, "c" + s);
    }
    for (int s : sum) c.add_output(s);
    c.add_output(carry);
    return c;
}

std::size_t ReversibleCircuit::count(RevGate::Kind kind) const {
    return static_cast<std::size_t>(
        std::count_if(gates.begin(), gates.end(), [kind](const RevGate &g) { return g.kind == kind; }));
}

std::string ReversibleCircuit::to_text() const {
    std::ostringstream out;
    out << "wires " << n_wires << "\n";
    const auto list = [&out](const char *label, const std::vector<int> &w) {
        out << label;
        for (int q : w) out << " " << q;
        out << "\n";
    };
    list("inputs", input_wires);
    list("outputs", output_wires);
    std::map<std::size_t, std::vector<std::string>> events;
    for (const AncillaLife &a : ancillas) {
        events[a.init].push_back("INIT " + std::to_string(a.wire));
        if (a.term >= 0) events[static_cast<std::size_t>(a.term)].push_back("TERM " + std::to_string(a.wire));
    }
    for (std::size_t i = 0; i <= gates.size(); ++i) {
        if (auto it = events.find(i); it != events.end()) {
            for (const auto &e : it->second) out << e << "\n";
        }
        if (i == gates.size()) break;
        const RevGate &g = gates[i];
        out << (g.kind == RevGate::Kind::X ? "X" : g.kind == RevGate::Kind::CNOT ? "CNOT" : "TOFFOLI");
        for (int q : g.wires) out << " " << q;
        out << "\n";
    }
    return out.str();
}

ReversibleCircuit compile_tf(const BoolCircuit &c) {
    ReversibleCircuit rc;
    std::vector<int> wire(c.nodes().size(), -1);
    for (int in : c.inputs()) {
        wire[static_cast<std::size_t>(in)] = rc.n_wires++;
        rc.roles.push_back(WireRole::Input);
        rc.input_wires.push_back(wire[static_cast<std::size_t>(in)]);
    }
    for (std::size_t i = 0; i < c.nodes().size(); ++i) {
        const BoolNode &n = c.nodes()[i];
        if (n.op == BoolNode::Op::Input) continue;
        const int w = rc.n_wires++;
        wire[i] = w;
        rc.roles.push_back(WireRole::Ancilla);
        rc.ancillas.push_back({w, 0, -1});
        const int a = n.a >= 0 ? wire[static_cast<std::size_t>(n.a)] : -1;
        const int b = n.b >= 0 ? wire[static_cast<std::size_t>(n.b)] : -1;
        switch (n.op) {
            case BoolNode::Op::Input:
                break;
            case BoolNode::Op::Const:
                if (n.value) rc.gates.push_back({RevGate::Kind::X, {w}});
                break;
            case BoolNode::Op::Not:
                rc.gates.push_back({RevGate::Kind::CNOT, {a, w}});
                rc.gates.push_back({RevGate::Kind::X, {w}});
                break;
            case BoolNode::Op::And:
                rc.gates.push_back({RevGate::Kind::Toffoli, {a, b, w}});
                break;
            case BoolNode::Op::Xor:
                rc.gates.push_back({RevGate::Kind::CNOT, {a, w}});
                rc.gates.push_back({RevGate::Kind::CNOT, {b, w}});
                break;
        }
    }
    for (int o : c.outputs()) {
        rc.output_wires.push_back(wire[static_cast<std::size_t>(o)]);
    }
    for (int w : rc.output_wires) {
        if (rc.roles[static_cast<std::size_t>(w)] == WireRole::Ancilla) rc.roles[static_cast<std::size_t>(w)] = WireRole::Output;
    }
    return rc;
}

ReversibleCircuit make_uf(const ReversibleCircuit &tf) {
    ReversibleCircuit uf;
    uf.n_wires = tf.n_wires;
    uf.roles = tf.roles;
    uf.input_wires = tf.input_wires;
    uf.ancillas = tf.ancillas;
    for (auto &role : uf.roles) {
        if (role == WireRole::Output) role = WireRole::Ancilla;
    }
    uf.gates = tf.gates;
    for (int out : tf.output_wires) {
        const int y = uf.n_wires++;
        uf.roles.push_back(WireRole::Output);
        uf.output_wires.push_back(y);
        uf.gates.push_back({RevGate::Kind::CNOT, {out, y}});
    }
    // X, CNOT and Toffoli are self-inverse.
    uf.gates.insert(uf.gates.end(), tf.gates.rbegin(), tf.gates.rend());
    for (AncillaLife &a : uf.ancillas) {
        a.term = static_cast<std::int64_t>(uf.gates.size());
    }
    return uf;
}

void apply(const ReversibleCircuit &c, std::vector<std::uint8_t> &state) {
    if (state.size() != static_cast<std::size_t>(c.n_wires)) {
        throw std::invalid_argument("apply: state size differs from wire count");
    }
    for (const RevGate &g : c.gates) {
        const auto &w = g.wires;
        switch (g.kind) {
            case RevGate::Kind::X:
                state[static_cast<std::size_t>(w[0])] ^= 1U;
                break;
            case RevGate::Kind::CNOT:
                state[static_cast<std::size_t>(w[1])] ^= state[static_cast<std::size_t>(w[0])];
                break;
            case RevGate::Kind::Toffoli:
                state[static_cast<std::size_t>(w[2])] ^=
                    state[static_cast<std::size_t>(w[0])] & state[static_cast<std::size_t>(w[1])];
                break;
        }
    }
}

ExplicitCircuit to_explicit(const ReversibleCircuit &c) {
    ExplicitCircuit e(c.n_wires);
    std::map<std::size_t, std::vector<int>> inits;
    std::map<std::size_t, std::vector<int>> terms;
    for (const AncillaLife &a : c.ancillas) {
        inits[a.init].push_back(a.wire);
        if (a.term >= 0) terms[static_cast<std::size_t>(a.term)].push_back(a.wire);
    }
    const ExplicitCircuit tof = expand_toffoli();
    for (std::size_t i = 0; i <= c.gates.size(); ++i) {
        if (auto it = terms.find(i); it != terms.end()) {
            for (int w : it->second) {
                e.gate(GateKind::Measure, w);
                e.gate(GateKind::AncillaTerm, w);
            }
        }
        if (auto it = inits.find(i); it != inits.end()) {
            for (int w : it->second) e.gate(GateKind::AncillaInit, w);
        }
        if (i == c.gates.size()) break;
        const RevGate &g = c.gates[i];
        switch (g.kind) {
            case RevGate::Kind::X:
                e.gate(GateKind::X, g.wires[0]);
                break;
            case RevGate::Kind::CNOT:
                e.cnot(g.wires[0], g.wires[1]);
                break;
            case RevGate::Kind::Toffoli:
                e.append(tof, g.wires);
                break;
        }
    }
    return e;
}

ResourceVector resources(const ReversibleCircuit &c) {
    return census(to_explicit(c));
}

}  // namespace qlre
