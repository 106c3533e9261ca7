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

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qlre/resources.hpp"

namespace qlre {

/// Per-query cost of a black-box oracle.
struct OracleCostProfile {
    std::string name;
    ResourceVector vector;
    std::string source;

    bool operator==(const OracleCostProfile &) const = default;
};

using OracleSet = std::map<std::string, OracleCostProfile, std::less<>>;

class ProfileParseError : public std::runtime_error {
   public:
    ProfileParseError(std::string source, int line, const std::string &what);
    int line() const {
        return line_;
    }

   private:
    int line_;
};

/// Parses `[oracle <name>]` blocks of `<field> = <integer>` lines plus an
/// optional `source = <text>` line. Omitted fields are zero; the Measure and
/// ancilla bookkeeping counts follow measurements and ancilla_cycles.
/// Rejects profiles whose measurements differ from their ancilla cycles.
OracleSet parse_profiles(std::string_view text, const std::string &source_name = "<string>");
OracleSet load_profiles(const std::string &path);
std::string serialize_profiles(const OracleSet &profiles);

/// The bundled tables: oracle_A_false (band 1, plus _band3 and _band5),
/// oracle_A_true, oracle_b and oracle_R.
const OracleSet &default_profiles();
std::string_view default_profiles_text();

/// Throws std::out_of_range naming the missing profile.
const OracleCostProfile &require_profile(const OracleSet &set, std::string_view name);

/// Zero in excl mode. In incl mode, oracle_A_false scaled by `factor`
/// (rounded half up field-wise).
OracleCostProfile integer_inverse_profile(const OracleSet &set, bool include_oracles, double factor = 1.0);

}  // namespace qlre
