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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qlre/expr.hpp"
#include "qlre/resources.hpp"
#include "qlre/synthesis.hpp"

namespace qlre {

enum class Compose { Seq, Par };
enum class NodeTag { Core, Oracle, IntegerInverse };

std::string_view tag_name(NodeTag tag);

struct ChildRef {
    std::string name;
    std::vector<Expr> args;
    Expr multiplicity;
};

/// A composite template read from a template-definition file.
///
/// Block syntax:
///
///     [template name(p1, p2)]
///     compose = seq | par
///     tag = core | oracle | integer_inverse
///     children = child(arg, ...) * multiplicity, ...
///     gates = x: 2*n2, h: 1
///     note = free text
struct TemplateDef {
    std::string name;
    std::vector<std::string> params;
    Compose compose = Compose::Seq;
    NodeTag tag = NodeTag::Core;
    std::vector<ChildRef> children;
    std::vector<std::pair<GateKind, Expr>> gates;
    bool has_gates = false;
    std::string note;
    std::string source;
    int line = 0;
};

class TemplateParseError : public std::runtime_error {
   public:
    TemplateParseError(const std::string &source, int line, const std::string &what);
    int line() const {
        return line_;
    }

   private:
    int line_;
};

class TemplateLibrary {
   public:
    static TemplateLibrary parse(std::string_view text, const std::string &source_name = "<string>");
    static TemplateLibrary load(const std::string &path);
    /// The QLSA call tree shipped with the library.
    static const TemplateLibrary &builtin_qlsa();
    static std::string_view builtin_qlsa_text();

    /// Replaces same-named blocks and adds new ones.
    void override_with(const TemplateLibrary &other);
    const TemplateDef *find(std::string_view name) const;
    TemplateDef *find_mutable(std::string_view name);
    std::vector<std::string> names() const;

   private:
    std::map<std::string, TemplateDef, std::less<>> defs_;
};

/// Leaf templates with closed forms: single gates (x y z h s sdag t tdag cnot),
/// rot, toffoli, mcnot(n), qft(b), cphase(n,f), ccphase(n,f), croty(n,f),
/// cz, ch, crz, cry, ccrz, w and lifecycle(k).
bool is_builtin_leaf(std::string_view name);
/// Throws std::invalid_argument on a wrong arity or out-of-domain argument.
ResourceVector builtin_leaf(std::string_view name, const std::vector<std::int64_t> &args, const RotationPolicy &policy);
/// Closed-form formula text for display, or empty.
std::string builtin_formula(std::string_view name);

}  // namespace qlre
