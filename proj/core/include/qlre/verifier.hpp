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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qlre/circuit.hpp"
#include "qlre/reversibilizer.hpp"
#include "qlre/synthesis.hpp"

namespace qlre {

using Unitary = Eigen::MatrixXcd;

inline constexpr int kMaxUnitaryQubits = 12;
inline constexpr int kMaxExpandQubits = 24;
inline constexpr int kMaxPermutationWires = 22;

/// Dense unitary with qubit 0 as the least significant bit of the basis
/// index. Bookkeeping ops act as identity.
Unitary simulate(const ExplicitCircuit &c);

/// min over phi of max |a - e^{i phi} b|, with phi taken from b's largest
/// entry.
double phase_distance(const Unitary &a, const Unitary &b);

/// Rows and columns whose `fixed_zero` qubits are all 0.
Unitary restrict_to_zero(const Unitary &u, int n_qubits, const std::vector<int> &fixed_zero);

/// Explicit circuit for a leaf template. `params` follow the leaf's
/// arguments; `angle` feeds the angle-carrying templates.
ExplicitCircuit expand(std::string_view name, const std::vector<int> &params = {}, double angle = 0.3);

/// Reference unitaries.
Unitary ccnot_matrix();
Unitary mcnot_matrix(int n);
Unitary dft_matrix(int b);
Unitary bit_reversal(int b);
Unitary w_matrix();
Unitary controlled(const Eigen::Matrix2cd &g);
Eigen::Matrix2cd hadamard();
Eigen::Matrix2cd ry(double theta);
Eigen::Matrix2cd rz(double theta);
Unitary cphase_matrix(int n, int f, double phi);
Unitary croty_matrix(int n, int f, double theta);
Unitary ccrz_matrix(double theta);

struct CrossResult {
    std::string label;
    bool pass = false;
    /// First differing field, empty on a pass.
    std::string field;
    std::string closed_form;
    std::string expansion;
};

/// Fields compared between a closed form and an expansion census. Width is
/// left out: the closed forms count data qubits only.
const std::vector<std::string_view> &crosscheck_fields();

CrossResult compare(const std::string &label, const ResourceVector &closed, const ResourceVector &census);
CrossResult crosscheck(std::string_view name, const std::vector<int> &params,
                       const RotationPolicy &policy = {});

/// Basis-state map of a reversible circuit over all 2^n_wires inputs.
std::vector<std::uint32_t> permutation(const ReversibleCircuit &c);

struct UfCheck {
    bool pass = false;
    std::uint64_t cases = 0;
    std::string failure;
};

/// Checks U_f |x, y, 0> = |x, y xor f(x), 0> for all x (inputs <= 16) and
/// y in {0, all-ones}, or for `samples` random x above that.
UfCheck check_uf(const BoolCircuit &f, const ReversibleCircuit &uf, std::uint64_t samples = 1000,
                 std::uint64_t seed = 1);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Suites: "leaf" (unitary simulation), "tables" (closed form against
/// expansion census), "reversible" (U_f simulation).
std::vector<Check> run_suite(std::string_view suite);

}  // namespace qlre
