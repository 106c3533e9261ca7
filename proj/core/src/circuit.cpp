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

#include "qlre/circuit.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qlre {

void ExplicitCircuit::gate(GateKind kind, int q) {
    if (kind == GateKind::CNOT) {
        throw std::invalid_argument("use cnot() for CNOT");
    }
    ops.push_back(Op{Op::Type::Gate, kind, Axis::Z, 0.0, {q}});
}

void ExplicitCircuit::cnot(int control, int target) {
    ops.push_back(Op{Op::Type::Gate, GateKind::CNOT, Axis::Z, 0.0, {control, target}});
}

void ExplicitCircuit::rotation(Axis axis, double angle, int q) {
    ops.push_back(Op{Op::Type::Rotation, GateKind::X, axis, angle, {q}});
}

void ExplicitCircuit::append(const ExplicitCircuit &other, const std::vector<int> &wires) {
    if (static_cast<int>(wires.size()) < other.n_qubits) {
        throw std::invalid_argument("append: wire map too short");
    }
    for (Op op : other.ops) {
        for (int &q : op.qubits) {
            q = wires[static_cast<std::size_t>(q)];
        }
        ops.push_back(std::move(op));
    }
}

void ExplicitCircuit::validate() const {
    for (const Op &op : ops) {
        std::size_t arity = (op.type == Op::Type::Gate && op.kind == GateKind::CNOT) ? 2 : 1;
        if (op.qubits.size() != arity) {
            throw std::out_of_range("operation has the wrong number of qubits");
        }
        for (int q : op.qubits) {
            if (q < 0 || q >= n_qubits) {
                throw std::out_of_range("qubit index " + std::to_string(q) + " out of range");
            }
        }
        if (arity == 2 && op.qubits[0] == op.qubits[1]) {
            throw std::out_of_range("CNOT control equals target");
        }
    }
}

std::string ExplicitCircuit::to_text() const {
    std::ostringstream out;
    for (const Op &op : ops) {
        if (op.type == Op::Type::Rotation) {
            const char *axis = op.axis == Axis::X ? "RX" : op.axis == Axis::Y ? "RY" : "RZ";
            out << axis << "(" << op.angle << ")";
        } else {
            out << gate_name(op.kind);
        }
        for (int q : op.qubits) {
            out << " " << q;
        }
        out << "\n";
    }
    return out.str();
}

ResourceVector census(const ExplicitCircuit &c, const RotationPolicy &policy) {
    c.validate();
    const std::vector<GateKind> rot = rotation_sequence(policy);

    ResourceVector v;
    std::vector<std::int64_t> next_free(static_cast<std::size_t>(c.n_qubits), 0);
    std::set<std::int64_t> t_layers;
    std::int64_t depth = 0;
    std::int64_t live = 0;
    std::int64_t live_max = 0;

    auto place_single = [&](GateKind k, int q) {
        v.count(k) += 1;
        std::int64_t layer = next_free[static_cast<std::size_t>(q)];
        next_free[static_cast<std::size_t>(q)] = layer + 1;
        depth = std::max(depth, layer + 1);
        if (is_t_like(k)) {
            t_layers.insert(layer);
        }
    };

    for (const Op &op : c.ops) {
        if (op.type == Op::Type::Rotation) {
            for (GateKind k : rot) {
                place_single(k, op.qubits[0]);
            }
            continue;
        }
        switch (op.kind) {
            case GateKind::Measure:
                v.count(op.kind) += 1;
                v.measurements += 1;
                break;
            case GateKind::AncillaInit:
                v.count(op.kind) += 1;
                v.ancilla_cycles += 1;
                live_max = std::max(live_max, ++live);
                break;
            case GateKind::AncillaTerm:
                v.count(op.kind) += 1;
                --live;
                break;
            case GateKind::CNOT: {
                v.count(op.kind) += 1;
                auto a = static_cast<std::size_t>(op.qubits[0]);
                auto b = static_cast<std::size_t>(op.qubits[1]);
                std::int64_t layer = std::max(next_free[a], next_free[b]);
                next_free[a] = next_free[b] = layer + 1;
                depth = std::max(depth, layer + 1);
                break;
            }
            default:
                place_single(op.kind, op.qubits[0]);
                break;
        }
    }
    v.depth = depth;
    v.t_depth = static_cast<std::int64_t>(t_layers.size());
    v.width = c.n_qubits;
    v.ancilla_max = live_max;
    return v;
}

}  // namespace qlre
