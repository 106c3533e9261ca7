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

#include <optional>
#include <string_view>

#include "qlre/circuit.hpp"
#include "qlre/resources.hpp"
#include "qlre/synthesis.hpp"

namespace qlre {

// Closed forms. Tabulated values embed the fixed 100-gate rotation budget;
// under other policies the rotation share rescales.

ResourceVector toffoli();
/// n controls. n = 1 is a bare CNOT and n = 2 a Toffoli.
ResourceVector mcnot(int n);
ResourceVector qft(int b, const RotationPolicy &policy = {});
/// Phase shift on a signed n-qubit register; f flips the sign convention.
ResourceVector cphase(int n, int f, const RotationPolicy &policy = {});
/// Conditional variant of cphase.
ResourceVector ccphase(int n, int f, const RotationPolicy &policy = {});
/// Target Y rotation by a signed n-qubit register value.
ResourceVector croty(int n, int f, const RotationPolicy &policy = {});

enum class SmallGate { CZ, CH, CRz, CRy, CCRz, W };

std::optional<SmallGate> parse_small_gate(std::string_view name);
std::string_view small_gate_name(SmallGate g);
ResourceVector small_gate(SmallGate g, const RotationPolicy &policy = {});

// Explicit expansions.

/// Three exact Toffoli layouts with one census. Mixing them lets an MCNOT
/// ladder overlap neighbouring Toffolis down to the tabulated depth.
enum class ToffoliVariant { Compute, Middle, Uncompute };

/// Qubits: 0, 1 controls; 2 target.
ExplicitCircuit expand_toffoli(ToffoliVariant variant = ToffoliVariant::Uncompute);
/// Qubits: 0..n-1 controls, n target, n+1..2n-2 ancillas.
ExplicitCircuit expand_mcnot(int n);
/// Qubits 0..b-1; output is bit-reversed (no final swaps).
ExplicitCircuit expand_qft(int b);
/// Qubits: 0..n-2 magnitude (LSB first), n-1 sign, n ancilla.
/// Applies exp(i (-1)^(sign xor f) phi m) to magnitude m.
ExplicitCircuit expand_cphase(int n, int f, double phi);
/// Qubits: 0..n-2 magnitude (LSB first), n-1 sign, n target.
/// Applies Ry((-1)^(sign xor f) theta m) to the target, then measures it.
ExplicitCircuit expand_croty(int n, int f, double theta);
/// Rotation angles apply to CRz, CRy and CCRz. Qubit 0 is the control
/// (CCRz: 0, 1 controls, 2 target).
ExplicitCircuit expand_small_gate(SmallGate g, double angle = 0.0);

/// Exact Clifford+T sequences for Ry(+-pi/4), in time order.
void append_ry_quarter(ExplicitCircuit &c, bool positive, int q);

}  // namespace qlre
