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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qlre/circuit.hpp"
#include "qlre/resources.hpp"

namespace qlre {

struct BoolNode {
    enum class Op { Input, Const, Not, And, Xor };

    Op op = Op::Input;
    int a = -1;
    int b = -1;
    bool value = false;
    std::string name;
};

class BoolParseError : public std::runtime_error {
   public:
    BoolParseError(int line, const std::string &what);
    int line() const {
        return line_;
    }

   private:
    int line_;
};

/// Boolean circuit over {INPUT, CONST, NOT, AND, XOR}. Nodes are stored in
/// topological order: operands always precede their users.
///
/// Text format, one statement per line:
///
///     x = INPUT
///     c = CONST 1
///     w1 = NOT x
///     w2 = AND x c
///     w3 = XOR w1 w2
///     OUTPUT w2 w3
class BoolCircuit {
   public:
    int add_input(std::string name = {});
    int add_const(bool value, std::string name = {});
    int add_not(int a, std::string name = {});
    int add_and(int a, int b, std::string name = {});
    int add_xor(int a, int b, std::string name = {});
    void add_output(int node);

    const std::vector<BoolNode> &nodes() const {
        return nodes_;
    }
    const std::vector<int> &inputs() const {
        return inputs_;
    }
    const std::vector<int> &outputs() const {
        return outputs_;
    }
    int n_inputs() const {
        return static_cast<int>(inputs_.size());
    }
    int n_outputs() const {
        return static_cast<int>(outputs_.size());
    }

    std::vector<bool> evaluate(const std::vector<bool> &input) const;
    /// Drops non-input nodes that no output depends on.
    BoolCircuit pruned() const;

    static BoolCircuit parse(std::string_view text);
    std::string to_text() const;

   private:
    int push(BoolNode node);

    std::vector<BoolNode> nodes_;
    std::vector<int> inputs_;
    std::vector<int> outputs_;
};

/// Algebraic normal form of a single-output truth table; entry i is f(x)
/// with input j equal to bit j of i.
BoolCircuit from_truth_table(int n_inputs, const std::vector<bool> &table);

/// Ripple-carry adder over inputs a0..a(n-1), b0..b(n-1) (LSB first) with
/// outputs s0..s(n-1) and the carry.
BoolCircuit ripple_adder(int n);

struct RevGate {
    enum class Kind { X, CNOT, Toffoli };

    Kind kind = Kind::X;
    /// Controls first, target last.
    std::vector<int> wires;
};

enum class WireRole { Input, Output, Ancilla };

struct AncillaLife {
    int wire = 0;
    /// Gate index before which the wire is initialized to 0.
    std::size_t init = 0;
    /// Gate index before which it is measured and released; -1 while live.
    std::int64_t term = -1;
};

struct ReversibleCircuit {
    int n_wires = 0;
    std::vector<WireRole> roles;
    std::vector<RevGate> gates;
    std::vector<int> input_wires;
    std::vector<int> output_wires;
    std::vector<AncillaLife> ancillas;

    std::size_t count(RevGate::Kind kind) const;
    std::string to_text() const;
};

/// One fresh ancilla per non-input node: AND -> Toffoli, XOR -> 2 CNOT,
/// NOT -> CNOT + X, CONST 1 -> X. Output wires are the nodes' ancillas (or
/// the input wire itself for an input passed through).
ReversibleCircuit compile_tf(const BoolCircuit &c);

/// T_f, CNOT copy of every output into a fresh result wire, T_f reversed,
/// then every T_f ancilla is measured and released.
ReversibleCircuit make_uf(const ReversibleCircuit &tf);

/// Applies the gates to a basis state (one byte per wire).
void apply(const ReversibleCircuit &c, std::vector<std::uint8_t> &state);

/// Explicit Clifford+T form with ancilla bookkeeping ops.
ExplicitCircuit to_explicit(const ReversibleCircuit &c);
ResourceVector resources(const ReversibleCircuit &c);

}  // namespace qlre
