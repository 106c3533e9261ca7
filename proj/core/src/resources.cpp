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

#include "qlre/resources.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace qlre {

namespace {

constexpr std::array<std::string_view, kNumGateKinds> kGateNames = {
    "X", "Y", "Z", "H", "S", "Sdag", "T", "Tdag", "CNOT", "Measure", "AncillaInit", "AncillaTerm",
};

}  // namespace

std::string_view gate_name(GateKind kind) {
    return kGateNames[static_cast<std::size_t>(kind)];
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
    for (GateKind k : kAllGateKinds) {
        if (gate_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

bool is_bookkeeping(GateKind kind) {
    return kind == GateKind::Measure || kind == GateKind::AncillaInit || kind == GateKind::AncillaTerm;
}

bool is_t_like(GateKind kind) {
    return kind == GateKind::T || kind == GateKind::Tdag;
}

BigInt ResourceVector::total_gates() const {
    BigInt total;
    for (GateKind k : kAllGateKinds) {
        if (!is_bookkeeping(k)) {
            total += count(k);
        }
    }
    return total;
}

BigInt ResourceVector::t_count() const {
    return count(GateKind::T) + count(GateKind::Tdag);
}

BigInt ResourceVector::s_count() const {
    return count(GateKind::S) + count(GateKind::Sdag);
}

bool ResourceVector::is_zero() const {
    return *this == ResourceVector{};
}

ResourceVector ResourceVector::gate(GateKind kind) {
    ResourceVector v;
    v.count(kind) = 1;
    if (!is_bookkeeping(kind)) {
        v.depth = 1;
        v.width = kind == GateKind::CNOT ? 2 : 1;
    }
    if (is_t_like(kind)) {
        v.t_depth = 1;
    }
    if (kind == GateKind::Measure) {
        v.measurements = 1;
    }
    if (kind == GateKind::AncillaInit) {
        v.ancilla_cycles = 1;
    }
    return v;
}

ResourceVector ResourceVector::lifecycle(const BigInt &n) {
    ResourceVector v;
    v.count(GateKind::Measure) = n;
    v.count(GateKind::AncillaInit) = n;
    v.count(GateKind::AncillaTerm) = n;
    v.ancilla_cycles = n;
    v.measurements = n;
    return v;
}

ResourceVector seq(const ResourceVector &a, const ResourceVector &b) {
    ResourceVector r;
    for (std::size_t i = 0; i < kNumGateKinds; ++i) {
        r.counts[i] = a.counts[i] + b.counts[i];
    }
    r.width = std::max(a.width, b.width);
    r.depth = a.depth + b.depth;
    r.t_depth = a.t_depth + b.t_depth;
    r.ancilla_max = std::max(a.ancilla_max, b.ancilla_max);
    r.ancilla_cycles = a.ancilla_cycles + b.ancilla_cycles;
    r.measurements = a.measurements + b.measurements;
    return r;
}

ResourceVector par(const ResourceVector &a, const ResourceVector &b) {
    ResourceVector r;
    for (std::size_t i = 0; i < kNumGateKinds; ++i) {
        r.counts[i] = a.counts[i] + b.counts[i];
    }
    r.width = a.width + b.width;
    r.depth = std::max(a.depth, b.depth);
    r.t_depth = std::max(a.t_depth, b.t_depth);
    r.ancilla_max = a.ancilla_max + b.ancilla_max;
    r.ancilla_cycles = a.ancilla_cycles + b.ancilla_cycles;
    r.measurements = a.measurements + b.measurements;
    return r;
}

ResourceVector repeat(const ResourceVector &a, const BigInt &n) {
    if (n < 0) {
        throw std::invalid_argument("repeat: negative count");
    }
    if (n == 0) {
        return {};
    }
    ResourceVector r = a;
    for (auto &c : r.counts) {
        c *= n;
    }
    r.depth *= n;
    r.t_depth *= n;
    r.ancilla_cycles *= n;
    r.measurements *= n;
    return r;
}

ResourceVector par_repeat(const ResourceVector &a, const BigInt &n) {
    if (n < 0) {
        throw std::invalid_argument("par_repeat: negative count");
    }
    if (n == 0) {
        return {};
    }
    ResourceVector r = a;
    for (auto &c : r.counts) {
        c *= n;
    }
    r.width *= n;
    r.ancilla_max *= n;
    r.ancilla_cycles *= n;
    r.measurements *= n;
    return r;
}

std::optional<std::string> check_invariants(const ResourceVector &v) {
    for (GateKind k : kAllGateKinds) {
        if (v.count(k) < 0) {
            return std::string("negative count for ") + std::string(gate_name(k));
        }
    }
    if (v.width < 0 || v.depth < 0 || v.t_depth < 0 || v.ancilla_max < 0 || v.ancilla_cycles < 0 ||
        v.measurements < 0) {
        return std::string("negative scalar field");
    }
    if (v.t_depth > v.depth) {
        return std::string("t_depth exceeds depth");
    }
    if (v.t_count() < v.t_depth) {
        return std::string("t_depth exceeds T count");
    }
    if (v.ancilla_max > v.width) {
        return std::string("ancilla_max exceeds width");
    }
    return std::nullopt;
}

BigInt get_field(const ResourceVector &v, std::string_view field) {
    if (field == "x") return v.count(GateKind::X);
    if (field == "y") return v.count(GateKind::Y);
    if (field == "z") return v.count(GateKind::Z);
    if (field == "h") return v.count(GateKind::H);
    if (field == "s") return v.s_count();
    if (field == "t") return v.t_count();
    if (field == "cnot") return v.count(GateKind::CNOT);
    if (field == "measure") return v.count(GateKind::Measure);
    if (field == "width") return v.width;
    if (field == "depth") return v.depth;
    if (field == "t_depth") return v.t_depth;
    if (field == "ancilla_max") return v.ancilla_max;
    if (field == "ancilla_cycles") return v.ancilla_cycles;
    if (field == "measurements") return v.measurements;
    throw std::invalid_argument("unknown resource field '" + std::string(field) + "'");
}

void set_field(ResourceVector &v, std::string_view field, const BigInt &value) {
    if (field == "x") {
        v.count(GateKind::X) = value;
    } else if (field == "y") {
        v.count(GateKind::Y) = value;
    } else if (field == "z") {
        v.count(GateKind::Z) = value;
    } else if (field == "h") {
        v.count(GateKind::H) = value;
    } else if (field == "s") {
        v.count(GateKind::S) = value;
        v.count(GateKind::Sdag) = 0;
    } else if (field == "t") {
        v.count(GateKind::T) = value;
        v.count(GateKind::Tdag) = 0;
    } else if (field == "cnot") {
        v.count(GateKind::CNOT) = value;
    } else if (field == "measure") {
        v.count(GateKind::Measure) = value;
    } else if (field == "width") {
        v.width = value;
    } else if (field == "depth") {
        v.depth = value;
    } else if (field == "t_depth") {
        v.t_depth = value;
    } else if (field == "ancilla_max") {
        v.ancilla_max = value;
    } else if (field == "ancilla_cycles") {
        v.ancilla_cycles = value;
        v.count(GateKind::AncillaInit) = value;
        v.count(GateKind::AncillaTerm) = value;
    } else if (field == "measurements") {
        v.measurements = value;
    } else {
        throw std::invalid_argument("unknown resource field '" + std::string(field) + "'");
    }
}

nlohmann::json to_json(const ResourceVector &v) {
    nlohmann::json j = nlohmann::json::object();
    for (std::string_view f : kFieldNames) {
        j[std::string(f)] = get_field(v, f).str();
    }
    return j;
}

BigInt parse_count(std::string_view digits) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("'" + std::string(digits) + "' is not a non-negative integer");
    }
    const auto first = digits.find_first_not_of('0');
    return first == std::string_view::npos ? BigInt(0) : BigInt(std::string(digits.substr(first)));
}

ResourceVector resource_vector_from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw std::invalid_argument("resource vector JSON must be an object");
    }
    ResourceVector v;
    for (const auto &[key, value] : j.items()) {
        BigInt n;
        if (value.is_string()) {
            n = parse_count(value.get<std::string>());
        } else if (value.is_number_unsigned()) {
            n = value.get<std::uint64_t>();
        } else {
            throw std::invalid_argument("field '" + key + "' must be a decimal string or unsigned integer");
        }
        set_field(v, key, n);
    }
    return v;
}

std::string sci(const BigInt &value, int digits) {
    if (value < 0) {
        return "-" + sci(-value, digits);
    }
    std::string s = value.str();
    if (s.size() <= 3) {
        return s;
    }
    int exponent = static_cast<int>(s.size()) - 1;
    // Round half up on the decimal string.
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(s.size() - digits));
    BigInt rounded = (value + scale / 2) / scale;
    std::string r = rounded.str();
    if (static_cast<int>(r.size()) > digits) {
        ++exponent;
        r.pop_back();
    }
    std::string mantissa = r.substr(0, 1);
    if (digits > 1) {
        mantissa += "." + r.substr(1);
    }
    char buf[16];
    std::snprintf(buf, sizeof(buf), "e+%02d", exponent);
    return mantissa + buf;
}

double to_double(const BigInt &value) {
    return value.convert_to<double>();
}

}  // namespace qlre
