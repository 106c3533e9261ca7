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

#include "qlre/library.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

#include <boost/algorithm/string/trim.hpp>

#include "embedded.hpp"
#include "qlre/templates.hpp"

namespace qlre {

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

void skip_ws(std::string_view s, std::size_t &pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
    }
}

std::string read_ident(std::string_view s, std::size_t &pos) {
    skip_ws(s, pos);
    std::size_t start = pos;
    if (pos < s.size() && is_ident_start(s[pos])) {
        while (pos < s.size() && is_ident_char(s[pos])) {
            ++pos;
        }
    }
    return std::string(s.substr(start, pos - start));
}

std::vector<ChildRef> parse_children(std::string_view s) {
    std::vector<ChildRef> out;
    std::size_t pos = 0;
    skip_ws(s, pos);
    if (pos == s.size()) {
        return out;
    }
    while (true) {
        ChildRef ref;
        ref.name = read_ident(s, pos);
        if (ref.name.empty()) {
            throw ExprError("expected a template name at column " + std::to_string(pos + 1));
        }
        skip_ws(s, pos);
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            skip_ws(s, pos);
            if (pos < s.size() && s[pos] == ')') {
                ++pos;
            } else {
                while (true) {
                    ref.args.push_back(Expr::parse_prefix(s, pos));
                    skip_ws(s, pos);
                    if (pos < s.size() && s[pos] == ',') {
                        ++pos;
                        continue;
                    }
                    if (pos < s.size() && s[pos] == ')') {
                        ++pos;
                        break;
                    }
                    throw ExprError("expected ',' or ')' in arguments of '" + ref.name + "'");
                }
            }
            skip_ws(s, pos);
        }
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            ref.multiplicity = Expr::parse_prefix(s, pos);
            skip_ws(s, pos);
        } else {
            ref.multiplicity = Expr::constant(1);
        }
        out.push_back(std::move(ref));
        if (pos == s.size()) {
            return out;
        }
        if (s[pos] != ',') {
            throw ExprError("expected ',' at column " + std::to_string(pos + 1));
        }
        ++pos;
    }
}

std::optional<GateKind> gate_kind_for_key(std::string_view key) {
    static const std::map<std::string, GateKind, std::less<>> kKinds = {
        {"x", GateKind::X},      {"y", GateKind::Y},       {"z", GateKind::Z},
        {"h", GateKind::H},      {"s", GateKind::S},       {"sdag", GateKind::Sdag},
        {"t", GateKind::T},      {"tdag", GateKind::Tdag}, {"cnot", GateKind::CNOT},
    };
    auto it = kKinds.find(key);
    if (it == kKinds.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<std::pair<GateKind, Expr>> parse_gates(std::string_view s) {
    std::vector<std::pair<GateKind, Expr>> out;
    std::size_t pos = 0;
    skip_ws(s, pos);
    if (pos == s.size()) {
        return out;
    }
    while (true) {
        std::string key = read_ident(s, pos);
        auto kind = gate_kind_for_key(key);
        if (!kind) {
            throw ExprError("unknown gate '" + key + "' in gates list");
        }
        skip_ws(s, pos);
        if (pos >= s.size() || s[pos] != ':') {
            throw ExprError("expected ':' after gate '" + key + "'");
        }
        ++pos;
        out.emplace_back(*kind, Expr::parse_prefix(s, pos));
        skip_ws(s, pos);
        if (pos == s.size()) {
            return out;
        }
        if (s[pos] != ',') {
            throw ExprError("expected ',' at column " + std::to_string(pos + 1));
        }
        ++pos;
    }
}

struct Leaf {
    int arity;
    std::function<ResourceVector(const std::vector<std::int64_t> &, const RotationPolicy &)> make;
    std::string formula;
};

int to_int(std::int64_t v, const char *what) {
    if (v < 0 || v > 1'000'000) {
        throw std::invalid_argument(std::string(what) + ": argument out of range");
    }
    return static_cast<int>(v);
}

const std::map<std::string, Leaf, std::less<>> &leaves() {
    static const std::map<std::string, Leaf, std::less<>> kLeaves = [] {
        std::map<std::string, Leaf, std::less<>> m;
        auto single = [&m](const char *name, GateKind k) {
            m[name] = Leaf{0, [k](const auto &, const auto &) { return ResourceVector::gate(k); },
                           std::string(gate_name(k)) + ": one gate"};
        };
        single("x", GateKind::X);
        single("y", GateKind::Y);
        single("z", GateKind::Z);
        single("h", GateKind::H);
        single("s", GateKind::S);
        single("sdag", GateKind::Sdag);
        single("t", GateKind::T);
        single("tdag", GateKind::Tdag);
        single("cnot", GateKind::CNOT);
        m["rot"] = Leaf{0, [](const auto &, const RotationPolicy &p) { return rotation_cost(p); },
                        "rotation policy: fixed budget T 40, H 40, S 20, depth 100, t_depth 40"};
        m["toffoli"] = Leaf{0, [](const auto &, const auto &) { return toffoli(); },
                            "CNOT 6, S 1, T 7, H 2, depth 12, t_depth 6, width 3"};
        m["mcnot"] = Leaf{1, [](const auto &a, const auto &) { return mcnot(to_int(a[0], "mcnot")); },
                          "n>=3: ancilla n-2, H 2(2n-3), S 2n-3, T 7(2n-3), CNOT 6(2n-3), width n+1, "
                          "depth 12(2n-3), t_depth 6(2n-3), measurements n-2"};
        m["qft"] = Leaf{1, [](const auto &a, const RotationPolicy &p) {
                            // An empty register has an empty transform.
                            int b = to_int(a[0], "qft");
                            return b == 0 ? ResourceVector{} : qft(b, p);
                        },
                        "b>=2: H b, rotations 3b(b-1)/2, CNOT b(b-1), width b, depth b^2 + b(b-1) depth(rot), "
                        "t_depth b(b-1) t_depth(rot)"};
        m["cphase"] = Leaf{2,
                           [](const auto &a, const RotationPolicy &p) {
                               return cphase(to_int(a[0], "cphase"), to_int(a[1], "cphase"), p);
                           },
                           "ancilla 1, H 80(n-1), S 40(n-1), T 80(n-1), X 4+2f, CNOT 2n, width n+1, "
                           "depth 202(n-1)+6, t_depth 80(n-1), measurements 1"};
        m["ccphase"] = Leaf{2,
                            [](const auto &a, const RotationPolicy &p) {
                                return ccphase(to_int(a[0], "ccphase"), to_int(a[1], "ccphase"), p);
                            },
                            "ancilla 1, H 164(n-1), S 82(n-1), T 174(n-1), X 4+2f, CNOT 16(n-1)+2, width n+2, "
                            "depth 436(n-1)+6, t_depth 174(n-1), measurements 1"};
        m["croty"] = Leaf{2,
                          [](const auto &a, const RotationPolicy &p) {
                              return croty(to_int(a[0], "croty"), to_int(a[1], "croty"), p);
                          },
                          "ancilla 0, H 84(n-1), S 42(n-1), T 80(n-1), X 2f, CNOT 2n, width n+1, "
                          "depth 202(n-1)+2f, t_depth 80(n-1), measurements 1"};
        for (SmallGate g : {SmallGate::CZ, SmallGate::CH, SmallGate::CRz, SmallGate::CRy, SmallGate::CCRz,
                            SmallGate::W}) {
            std::string name(small_gate_name(g));
            for (char &c : name) {
                c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            }
            m[name] = Leaf{0, [g](const auto &, const RotationPolicy &p) { return small_gate(g, p); }, ""};
        }
        m["lifecycle"] = Leaf{1,
                              [](const auto &a, const auto &) {
                                  if (a[0] < 0) throw std::invalid_argument("lifecycle: negative count");
                                  return ResourceVector::lifecycle(a[0]);
                              },
                              "k register qubits initialized, measured and terminated"};
        return m;
    }();
    return kLeaves;
}

}  // namespace

std::string_view tag_name(NodeTag tag) {
    switch (tag) {
        case NodeTag::Core:
            return "core";
        case NodeTag::Oracle:
            return "oracle";
        case NodeTag::IntegerInverse:
            return "integer_inverse";
    }
    return "?";
}

TemplateParseError::TemplateParseError(const std::string &source, int line, const std::string &what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

TemplateLibrary TemplateLibrary::parse(std::string_view text, const std::string &source_name) {
    TemplateLibrary lib;
    TemplateDef *current = nullptr;
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
            if (line.back() != ']' || line.rfind("[template ", 0) != 0) {
                throw TemplateParseError(source_name, line_no, "expected '[template <name>]'");
            }
            std::string head = line.substr(10, line.size() - 11);
            std::size_t pos = 0;
            TemplateDef def;
            def.name = read_ident(head, pos);
            if (def.name.empty()) {
                throw TemplateParseError(source_name, line_no, "missing template name");
            }
            skip_ws(head, pos);
            if (pos < head.size() && head[pos] == '(') {
                ++pos;
                while (true) {
                    std::string p = read_ident(head, pos);
                    skip_ws(head, pos);
                    if (!p.empty()) {
                        def.params.push_back(p);
                    }
                    if (pos < head.size() && head[pos] == ',' && !p.empty()) {
                        ++pos;
                        continue;
                    }
                    if (pos < head.size() && head[pos] == ')') {
                        ++pos;
                        break;
                    }
                    throw TemplateParseError(source_name, line_no, "bad parameter list");
                }
                skip_ws(head, pos);
            }
            if (pos != head.size()) {
                throw TemplateParseError(source_name, line_no, "unexpected text in template header");
            }
            if (lib.defs_.contains(def.name)) {
                throw TemplateParseError(source_name, line_no, "duplicate template '" + def.name + "'");
            }
            def.source = source_name;
            def.line = line_no;
            current = &lib.defs_.emplace(def.name, std::move(def)).first->second;
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw TemplateParseError(source_name, line_no, "expected '<key> = <value>'");
        }
        if (!current) {
            throw TemplateParseError(source_name, line_no, "key outside a [template] block");
        }
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        boost::algorithm::trim(key);
        boost::algorithm::trim(value);
        const int key_line = line_no;
        // A trailing comma continues the value on the next line.
        while (!value.empty() && value.back() == ',' && std::getline(in, raw)) {
            ++line_no;
            std::string more = raw.substr(0, raw.find('#'));
            boost::algorithm::trim(more);
            value += " " + more;
        }
        try {
            if (key == "compose") {
                if (value == "seq") {
                    current->compose = Compose::Seq;
                } else if (value == "par") {
                    current->compose = Compose::Par;
                } else {
                    throw TemplateParseError(source_name, key_line, "compose must be 'seq' or 'par'");
                }
            } else if (key == "tag") {
                if (value == "core") {
                    current->tag = NodeTag::Core;
                } else if (value == "oracle") {
                    current->tag = NodeTag::Oracle;
                } else if (value == "integer_inverse") {
                    current->tag = NodeTag::IntegerInverse;
                } else {
                    throw TemplateParseError(source_name, key_line, "tag must be core, oracle or integer_inverse");
                }
            } else if (key == "children") {
                current->children = parse_children(value);
            } else if (key == "gates") {
                current->gates = parse_gates(value);
                current->has_gates = true;
            } else if (key == "note") {
                current->note = value;
            } else {
                throw TemplateParseError(source_name, key_line, "unknown key '" + key + "'");
            }
        } catch (const ExprError &e) {
            throw TemplateParseError(source_name, key_line, e.what());
        }
    }
    for (const auto &[name, def] : lib.defs_) {
        if (def.children.empty() && !def.has_gates) {
            throw TemplateParseError(source_name, def.line,
                                     "template '" + name + "' needs children or a gates literal");
        }
    }
    return lib;
}

TemplateLibrary TemplateLibrary::load(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open template file '" + path + "'");
    }
    std::stringstream buf;
    buf << f.rdbuf();
    return parse(buf.str(), path);
}

std::string_view TemplateLibrary::builtin_qlsa_text() {
    return embedded::kQlsaTemplates;
}

const TemplateLibrary &TemplateLibrary::builtin_qlsa() {
    static const TemplateLibrary lib = parse(builtin_qlsa_text(), "qlsa.tmpl");
    return lib;
}

void TemplateLibrary::override_with(const TemplateLibrary &other) {
    for (const auto &[name, def] : other.defs_) {
        defs_.insert_or_assign(name, def);
    }
}

const TemplateDef *TemplateLibrary::find(std::string_view name) const {
    auto it = defs_.find(name);
    return it == defs_.end() ? nullptr : &it->second;
}

TemplateDef *TemplateLibrary::find_mutable(std::string_view name) {
    auto it = defs_.find(name);
    return it == defs_.end() ? nullptr : &it->second;
}

std::vector<std::string> TemplateLibrary::names() const {
    std::vector<std::string> out;
    for (const auto &[name, def] : defs_) {
        out.push_back(name);
    }
    return out;
}

bool is_builtin_leaf(std::string_view name) {
    return leaves().contains(name);
}

ResourceVector builtin_leaf(std::string_view name, const std::vector<std::int64_t> &args,
                            const RotationPolicy &policy) {
    auto it = leaves().find(name);
    if (it == leaves().end()) {
        throw std::invalid_argument("unknown leaf template '" + std::string(name) + "'");
    }
    if (static_cast<int>(args.size()) != it->second.arity) {
        throw std::invalid_argument("leaf template '" + std::string(name) + "' takes " +
                                    std::to_string(it->second.arity) + " argument(s)");
    }
    return it->second.make(args, policy);
}

std::string builtin_formula(std::string_view name) {
    auto it = leaves().find(name);
    return it == leaves().end() ? std::string() : it->second.formula;
}

}  // namespace qlre
