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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace qlre {

using BigInt = boost::multiprecision::cpp_int;

enum class GateKind : std::uint8_t {
    X,
    Y,
    Z,
    H,
    S,
    Sdag,
    T,
    Tdag,
    CNOT,
    Measure,
    AncillaInit,
    AncillaTerm,
};

inline constexpr std::size_t kNumGateKinds = 12;

inline constexpr std::array<GateKind, kNumGateKinds> kAllGateKinds = {
    GateKind::X,    GateKind::Y,    GateKind::Z,       GateKind::H,           GateKind::S,          GateKind::Sdag,
    GateKind::T,    GateKind::Tdag, GateKind::CNOT,    GateKind::Measure,     GateKind::AncillaInit, GateKind::AncillaTerm,
};

std::string_view gate_name(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);

/// Measure, AncillaInit and AncillaTerm: counted, but never occupy a layer.
bool is_bookkeeping(GateKind kind);
bool is_t_like(GateKind kind);

struct ResourceVector {
    std::array<BigInt, kNumGateKinds> counts{};
    BigInt width;
    BigInt depth;
    BigInt t_depth;
    BigInt ancilla_max;
    BigInt ancilla_cycles;
    BigInt measurements;

    BigInt &count(GateKind kind) {
        return counts[static_cast<std::size_t>(kind)];
    }
    const BigInt &count(GateKind kind) const {
        return counts[static_cast<std::size_t>(kind)];
    }

    /// X+Y+Z+H+S+S†+T+T†+CNOT. Bookkeeping kinds are excluded.
    BigInt total_gates() const;
    BigInt t_count() const;
    BigInt s_count() const;
    bool is_zero() const;

    bool operator==(const ResourceVector &other) const = default;

    /// One gate as a standalone block: depth 1 (0 for bookkeeping), width 1 (2 for CNOT).
    static ResourceVector gate(GateKind kind);
    /// n allocate-use-measure-terminate cycles of register qubits; no gates, no depth.
    static ResourceVector lifecycle(const BigInt &n);
};

ResourceVector seq(const ResourceVector &a, const ResourceVector &b);
ResourceVector par(const ResourceVector &a, const ResourceVector &b);
ResourceVector repeat(const ResourceVector &a, const BigInt &n);
/// n parallel copies of a.
ResourceVector par_repeat(const ResourceVector &a, const BigInt &n);

/// Returns a description of the first violated invariant, if any.
std::optional<std::string> check_invariants(const ResourceVector &v);

/// Serialized field names, in output order.
inline constexpr std::array<std::string_view, 14> kFieldNames = {
    "x",     "y",     "z",       "h",           "s",              "t",           "cnot",
    "measure", "width", "depth", "t_depth", "ancilla_max", "ancilla_cycles", "measurements",
};

/// Reads a serialized field. "s" and "t" merge the daggered kinds.
BigInt get_field(const ResourceVector &v, std::string_view field);
/// Writes a serialized field. Throws std::invalid_argument on an unknown name.
/// "s" and "t" set the undaggered kind and clear the daggered one.
void set_field(ResourceVector &v, std::string_view field, const BigInt &value);

/// Parses a non-negative decimal integer. Leading zeros are decimal, not octal.
BigInt parse_count(std::string_view digits);

nlohmann::json to_json(const ResourceVector &v);
ResourceVector resource_vector_from_json(const nlohmann::json &j);

/// Rounds to `digits` significant digits, e.g. "3.34e+25". Values below 1000 print exactly.
std::string sci(const BigInt &value, int digits = 3);
double to_double(const BigInt &value);

}  // namespace qlre
