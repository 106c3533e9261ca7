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

#include "qlre/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/algorithm/string/trim.hpp>

#include "embedded.hpp"

namespace qlre {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

struct PendingProfile {
    OracleCostProfile profile;
    std::set<std::string, std::less<>> seen;
    int header_line = 0;
};

void finish(PendingProfile &p, OracleSet &out, const std::string &source_name) {
    ResourceVector &v = p.profile.vector;
    if (!p.seen.contains("measure")) {
        v.count(GateKind::Measure) = v.measurements;
    }
    if (!p.seen.contains("width")) {
        v.width = v.ancilla_max;
    }
    if (v.measurements != v.ancilla_cycles) {
        throw ProfileParseError(source_name, p.header_line,
                                "profile '" + p.profile.name + "': measurements differ from ancilla_cycles");
    }
    if (auto bad = check_invariants(v)) {
        throw ProfileParseError(source_name, p.header_line, "profile '" + p.profile.name + "': " + *bad);
    }
    out.emplace(p.profile.name, std::move(p.profile));
}

}  // namespace

ProfileParseError::ProfileParseError(std::string source, int line, const std::string &what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

OracleSet parse_profiles(std::string_view text, const std::string &source_name) {
    OracleSet out;
    std::optional<PendingProfile> current;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        boost::algorithm::trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']' || line.rfind("[oracle ", 0) != 0) {
                throw ProfileParseError(source_name, line_no, "expected '[oracle <name>]'");
            }
            std::string name = line.substr(8, line.size() - 9);
            boost::algorithm::trim(name);
            if (name.empty()) {
                throw ProfileParseError(source_name, line_no, "empty oracle name");
            }
            if (current) {
                finish(*current, out, source_name);
            }
            if (out.contains(name)) {
                throw ProfileParseError(source_name, line_no, "duplicate oracle '" + name + "'");
            }
            current = PendingProfile{};
            current->profile.name = name;
            current->header_line = line_no;
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ProfileParseError(source_name, line_no, "expected '<field> = <integer>'");
        }
        if (!current) {
            throw ProfileParseError(source_name, line_no, "field outside an [oracle] block");
        }
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        boost::algorithm::trim(key);
        boost::algorithm::trim(value);
        if (!current->seen.insert(key).second) {
            throw ProfileParseError(source_name, line_no, "duplicate field '" + key + "'");
        }
        if (key == "source") {
            current->profile.source = value;
            continue;
        }
        if (std::find(kFieldNames.begin(), kFieldNames.end(), key) == kFieldNames.end()) {
            throw ProfileParseError(source_name, line_no, "unknown field '" + key + "'");
        }
        if (!all_digits(value)) {
            throw ProfileParseError(source_name, line_no, "field '" + key + "' needs a non-negative integer");
        }
        set_field(current->profile.vector, key, parse_count(value));
    }
    if (current) {
        finish(*current, out, source_name);
    }
    return out;
}

OracleSet load_profiles(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open oracle profile file '" + path + "'");
    }
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_profiles(buf.str(), path);
}

std::string serialize_profiles(const OracleSet &profiles) {
    std::ostringstream out;
    bool first = true;
    for (const auto &[name, p] : profiles) {
        if (!first) {
            out << "\n";
        }
        first = false;
        out << "[oracle " << name << "]\n";
        if (!p.source.empty()) {
            out << "source = " << p.source << "\n";
        }
        for (std::string_view f : kFieldNames) {
            out << f << " = " << get_field(p.vector, f) << "\n";
        }
    }
    return out.str();
}

std::string_view default_profiles_text() {
    return embedded::kOraclesProfile;
}

const OracleSet &default_profiles() {
    static const OracleSet set = parse_profiles(default_profiles_text(), "oracles_default.profile");
    return set;
}

const OracleCostProfile &require_profile(const OracleSet &set, std::string_view name) {
    auto it = set.find(name);
    if (it == set.end()) {
        throw std::out_of_range("oracle profile '" + std::string(name) + "' not found");
    }
    return it->second;
}

OracleCostProfile integer_inverse_profile(const OracleSet &set, bool include_oracles, double factor) {
    OracleCostProfile p;
    p.name = "integer_inverse";
    if (!include_oracles) {
        p.source = "excluded";
        return p;
    }
    if (!(factor >= 0) || !std::isfinite(factor)) {
        throw std::invalid_argument("oracles.integer_inverse_factor must be finite and >= 0");
    }
    const OracleCostProfile &base = require_profile(set, "oracle_A_false");
    p.source = "oracle_A_false x " + std::to_string(factor);
    // Exact rational scaling with round-half-up.
    const auto scaled = [factor](const BigInt &x) -> BigInt {
        constexpr std::int64_t kDen = 1'000'000'000;
        BigInt num = static_cast<BigInt>(std::llround(factor * kDen));
        return (x * num + kDen / 2) / kDen;
    };
    for (std::size_t i = 0; i < kNumGateKinds; ++i) {
        p.vector.counts[i] = scaled(base.vector.counts[i]);
    }
    p.vector.width = scaled(base.vector.width);
    p.vector.depth = scaled(base.vector.depth);
    p.vector.t_depth = scaled(base.vector.t_depth);
    p.vector.ancilla_max = scaled(base.vector.ancilla_max);
    p.vector.ancilla_cycles = scaled(base.vector.ancilla_cycles);
    p.vector.measurements = scaled(base.vector.measurements);
    return p;
}

}  // namespace qlre
