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
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlre/library.hpp"
#include "qlre/oracles.hpp"
#include "qlre/resources.hpp"
#include "qlre/sizing.hpp"
#include "qlre/synthesis.hpp"

namespace qlre {

class ProfileError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct CallNode;

struct CallEdge {
    std::shared_ptr<const CallNode> node;
    BigInt multiplicity;
};

/// One instantiated template. Identical (name, args) pairs share a node, so
/// the tree is stored as a DAG and each node is evaluated once.
struct CallNode {
    enum class Kind { Composite, Leaf, Oracle };

    std::string name;
    std::vector<BigInt> args;
    Kind kind = Kind::Composite;
    NodeTag tag = NodeTag::Core;
    Compose compose = Compose::Seq;
    std::vector<CallEdge> children;
    /// Cost of a leaf or oracle node, or the gate literal of a composite.
    ResourceVector own;
    const TemplateDef *def = nullptr;

    std::string label() const;
};

struct ProfileInputs {
    ProblemParams params;
    RotationPolicy policy;
    OracleSet oracles = default_profiles();
    std::int64_t mix_true = 4;
    double integer_inverse_factor = 1.0;
    bool parallel_ampest = false;
    /// Blocks that replace or extend the built-in call tree.
    std::optional<TemplateLibrary> overrides;
};

struct CallTree {
    std::shared_ptr<const CallNode> root;
    /// Every instantiated node by label.
    std::map<std::string, std::shared_ptr<const CallNode>, std::less<>> nodes;
    Env globals;
    /// Library the tree was built from; nodes point into it.
    std::shared_ptr<const TemplateLibrary> library;
};

/// Expression globals: n0 n1 n2 n4 Nb k r M mix_true.
Env profile_globals(const ProblemParams &resolved, std::int64_t mix_true);

/// Builds the call tree rooted at `root` (default "qlsa"). `params` must be
/// resolved. Throws ProfileError on unresolved names, cycles, bad arguments
/// or negative multiplicities.
CallTree build_profile(const ProfileInputs &inputs, const std::string &root = "qlsa",
                       const std::vector<BigInt> &root_args = {});

/// Bottom-up fold. With include_oracles false every node not tagged core
/// contributes nothing.
ResourceVector evaluate(const CallTree &tree, bool include_oracles);

/// Number of times nodes matching `name` are entered below `within`,
/// multiplicities multiplied along each path. A trailing '*' in `name`
/// matches a prefix.
BigInt occurrences(const CallTree &tree, const std::string &within, const std::string &name);

std::map<std::string, BigInt, std::less<>> anchors(const CallTree &tree);

struct Report {
    ProblemParams params;
    ResourceVector incl_oracles;
    ResourceVector excl_oracles;
    std::map<std::string, BigInt, std::less<>> anchors;
    bool parallel_ampest = false;
    std::int64_t persistent_qubits = 0;
    BigInt copies = 1;
};

/// Resolves the parameters, builds the tree and evaluates both modes. The
/// reported width is the persistent registers (one set per parallel copy)
/// plus the peak ancilla demand.
Report estimate(ProfileInputs inputs);

nlohmann::json to_json(const Report &r);
/// Header plus one row per mode.
std::string to_csv(const Report &r, bool incl = true, bool excl = true);
std::string to_table(const Report &r, bool incl = true, bool excl = true);

}  // namespace qlre
