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
#include <stdexcept>
#include <string>
#include <string_view>

#include "qlre/profile.hpp"

namespace qlre {

class ConfigError : public std::runtime_error {
   public:
    ConfigError(const std::string &source, int line, const std::string &key, const std::string &what);
    const std::string &key() const {
        return key_;
    }
    int line() const {
        return line_;
    }

   private:
    std::string key_;
    int line_;
};

/// YAML run configuration. Every key is optional:
///
///     problem:   {nx, ny, N, kappa, d, epsilon, p_err, alpha, Nb}
///     suzuki:    {k}
///     trotter:   {r_override: <integer> | auto, normA_t}
///     registers: {n1, n4}
///     rotation:  {mode: fixed | fowler, total, distance}
///     oracles:   {mix_true, integer_inverse_factor, profile: <path>}
///     templates: {override: <path>}
///     output:    {format: table | json | csv}
///
/// Relative paths resolve against the config file's directory.
struct Config {
    ProblemParams params;
    RotationPolicy policy;
    std::int64_t mix_true = 4;
    double integer_inverse_factor = 1.0;
    std::optional<std::string> oracle_profile;
    std::optional<std::string> template_override;
    std::string format = "table";

    /// Loads the referenced profile and template files.
    ProfileInputs to_inputs() const;
};

Config parse_config(std::string_view yaml, const std::string &source = "<string>", const std::string &base_dir = ".");
Config load_config(const std::string &path);

}  // namespace qlre
