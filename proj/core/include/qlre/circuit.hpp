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

#pragma once

#include <string>
#include <vector>

#include "qlre/resources.hpp"
#include "qlre/synthesis.hpp"

namespace qlre {

enum class Axis { X, Y, Z };

/// A gate, or an arbitrary-angle rotation kept symbolic.
///
/// Rotations are costed by the rotation policy for census and layering and
/// applied exactly by the simulator.
struct Op {
    enum class Type { Gate, Rotation };

    Type type = Type::Gate;
    GateKind kind = GateKind::X;
    Axis axis = Axis::Z;
    double angle = 0.0;
    /// CNOT: {control, target}. Everything else: {qubit}.
    std::vector<int> qubits;
};

struct ExplicitCircuit {
    int n_qubits = 0;
    std::vector<Op> ops;

    explicit ExplicitCircuit(int n = 0) : n_qubits(n) {}

    void gate(GateKind kind, int q);
    void cnot(int control, int target);
    void rotation(Axis axis, double angle, int q);
    /// Appends `other` with its qubit i mapped to `wires[i]`.
    void append(const ExplicitCircuit &other, const std::vector<int> &wires);

    /// Throws std::out_of_range on a bad qubit index or CNOT arity.
    void validate() const;
    std::string to_text() const;
};

/// Layers the circuit greedily by qubit availability (ASAP).
///
/// Counts, ancilla lifetimes and measurements are taken gate by gate.
/// Bookkeeping kinds are counted but never occupy a layer. Width is n_qubits.
ResourceVector census(const ExplicitCircuit &c, const RotationPolicy &policy = {});

}  // namespace qlre
