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

#include "qlre/config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace qlre {

namespace {

const std::map<std::string, std::set<std::string>> &schema() {
    static const std::map<std::string, std::set<std::string>> kSchema = {
        {"problem", {"nx", "ny", "N", "kappa", "d", "epsilon", "p_err", "alpha", "Nb"}},
        {"suzuki", {"k"}},
        {"trotter", {"r_override", "normA_t"}},
        {"registers", {"n1", "n4"}},
        {"rotation", {"mode", "total", "distance"}},
        {"oracles", {"mix_true", "integer_inverse_factor", "profile"}},
        {"templates", {"override"}},
        {"output", {"format"}},
    };
    return kSchema;
}

class Reader {
   public:
    Reader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const YAML::Node &node, const std::string &key, const std::string &what) const {
        throw ConfigError(source_, node.Mark().line + 1, key, what);
    }

    std::string scalar(const YAML::Node &node, const std::string &key) const {
        if (!node.IsScalar()) fail(node, key, "expected a scalar value");
        return node.Scalar();
    }

    double real(const YAML::Node &node, const std::string &key) const {
        const std::string s = scalar(node, key);
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception &) {
            fail(node, key, "expected a number, got '" + s + "'");
        }
        if (used != s.size()) fail(node, key, "expected a number, got '" + s + "'");
        if (!std::isfinite(v)) fail(node, key, "value must be finite");
        return v;
    }

    BigInt integer(const YAML::Node &node, const std::string &key) const {
        const std::string s = scalar(node, key);
        Rational q;
        try {
            q = parse_decimal(s);
        } catch (const ExprError &) {
            fail(node, key, "expected a non-negative integer, got '" + s + "'");
        }
        if (boost::multiprecision::denominator(q) != 1) {
            fail(node, key, "expected an integer, got '" + s + "'");
        }
        return boost::multiprecision::numerator(q);
    }

    std::int64_t small(const YAML::Node &node, const std::string &key) const {
        BigInt v = integer(node, key);
        if (v > 1'000'000'000) fail(node, key, "value too large");
        return v.convert_to<std::int64_t>();
    }

   private:
    std::string source_;
};

std::string resolve_path(const std::string &base, const std::string &p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? p : (std::filesystem::path(base) / path).lexically_normal().string();
}

}  // namespace

ConfigError::ConfigError(const std::string &source, int line, const std::string &key, const std::string &what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + key + ": " + what), key_(key), line_(line) {}

Config parse_config(std::string_view yaml, const std::string &source, const std::string &base_dir) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(yaml));
    } catch (const YAML::Exception &e) {
        throw ConfigError(source, e.mark.line + 1, "<document>", e.msg);
    }
    Config cfg;
    if (root.IsNull()) {
        return cfg;
    }
    Reader rd(source);
    if (!root.IsMap()) rd.fail(root, "<document>", "top level must be a mapping");
    for (const auto &section : root) {
        const std::string name = section.first.as<std::string>();
        auto it = schema().find(name);
        if (it == schema().end()) rd.fail(section.first, name, "unknown section");
        if (section.second.IsNull()) continue;
        if (!section.second.IsMap()) rd.fail(section.second, name, "expected a mapping");
        for (const auto &entry : section.second) {
            const std::string key = entry.first.as<std::string>();
            const std::string path = name + "." + key;
            if (!it->second.contains(key)) rd.fail(entry.first, path, "unknown key");
            const YAML::Node &v = entry.second;
            ProblemParams &p = cfg.params;
            if (path == "problem.nx") {
                p.nx = rd.small(v, path);
            } else if (path == "problem.ny") {
                p.ny = rd.small(v, path);
            } else if (path == "problem.N") {
                p.N = rd.integer(v, path);
            } else if (path == "problem.kappa") {
                p.kappa = rd.real(v, path);
            } else if (path == "problem.d") {
                p.d = rd.real(v, path);
            } else if (path == "problem.epsilon") {
                p.epsilon = rd.real(v, path);
            } else if (path == "problem.p_err") {
                p.p_err = rd.real(v, path);
            } else if (path == "problem.alpha") {
                p.alpha = rd.real(v, path);
            } else if (path == "problem.Nb") {
                p.Nb = rd.small(v, path);
            } else if (path == "suzuki.k") {
                p.k = rd.small(v, path);
            } else if (path == "trotter.r_override") {
                if (rd.scalar(v, path) == "auto") {
                    p.r_override.reset();
                } else {
                    p.r_override = rd.integer(v, path);
                }
            } else if (path == "trotter.normA_t") {
                p.normA_t = rd.real(v, path);
            } else if (path == "registers.n1") {
                p.n1 = rd.small(v, path);
            } else if (path == "registers.n4") {
                p.n4 = rd.small(v, path);
            } else if (path == "rotation.mode") {
                const std::string m = rd.scalar(v, path);
                if (m == "fixed") {
                    cfg.policy.mode = RotationMode::FixedBudget;
                } else if (m == "fowler") {
                    cfg.policy.mode = RotationMode::FowlerFit;
                } else {
                    rd.fail(v, path, "expected 'fixed' or 'fowler'");
                }
            } else if (path == "rotation.total") {
                const std::int64_t total = rd.small(v, path);
                // Keep the 40/40/20 T/H/S split.
                cfg.policy.fixed_total = total;
                cfg.policy.mix_t = (total * 2 + 2) / 5;
                cfg.policy.mix_h = cfg.policy.mix_t;
                cfg.policy.mix_s = total - 2 * cfg.policy.mix_t;
                if (cfg.policy.mix_s < 0) rd.fail(v, path, "total too small for the 40/40/20 split");
            } else if (path == "rotation.distance") {
                cfg.policy.target_distance = rd.real(v, path);
            } else if (path == "oracles.mix_true") {
                cfg.mix_true = rd.small(v, path);
                if (cfg.mix_true > 6) rd.fail(v, path, "must be in [0, 6]");
            } else if (path == "oracles.integer_inverse_factor") {
                cfg.integer_inverse_factor = rd.real(v, path);
                if (cfg.integer_inverse_factor < 0) rd.fail(v, path, "must be >= 0");
            } else if (path == "oracles.profile") {
                cfg.oracle_profile = resolve_path(base_dir, rd.scalar(v, path));
            } else if (path == "templates.override") {
                cfg.template_override = resolve_path(base_dir, rd.scalar(v, path));
            } else if (path == "output.format") {
                cfg.format = rd.scalar(v, path);
                if (cfg.format != "table" && cfg.format != "json" && cfg.format != "csv") {
                    rd.fail(v, path, "expected table, json or csv");
                }
            }
        }
    }
    try {
        cfg.params.validate();
        cfg.policy.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(source, 0, "<values>", e.what());
    }
    return cfg;
}

Config load_config(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw ConfigError(path, 0, "<file>", "cannot open config file");
    }
    std::stringstream buf;
    buf << f.rdbuf();
    std::string base = std::filesystem::path(path).parent_path().string();
    return parse_config(buf.str(), path, base.empty() ? "." : base);
}

ProfileInputs Config::to_inputs() const {
    ProfileInputs in;
    in.params = params;
    in.policy = policy;
    in.mix_true = mix_true;
    in.integer_inverse_factor = integer_inverse_factor;
    if (oracle_profile) in.oracles = load_profiles(*oracle_profile);
    if (template_override) in.overrides = TemplateLibrary::load(*template_override);
    return in;
}

}  // namespace qlre
