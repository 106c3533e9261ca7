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

#include "qlre/profile.hpp"

#include <iomanip>
#include <set>
#include <sstream>
#include <unordered_map>

namespace qlre {

namespace {

std::string make_label(const std::string &name, const std::vector<BigInt> &args) {
    if (args.empty()) {
        return name;
    }
    std::string out = name + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        out += (i ? "," : "") + args[i].str();
    }
    return out + ")";
}

BigInt require_integer(const Rational &v, const std::string &what) {
    if (boost::multiprecision::denominator(v) != 1) {
        throw ProfileError(what + " is not an integer (" + v.str() + ")");
    }
    return boost::multiprecision::numerator(v);
}

class Builder {
   public:
    Builder(const ProfileInputs &in, CallTree &tree) : in_(in), tree_(tree) {}

    std::shared_ptr<const CallNode> instantiate(const std::string &name, const std::vector<BigInt> &args,
                                                const std::string &context) {
        const std::string label = make_label(name, args);
        if (auto it = tree_.nodes.find(label); it != tree_.nodes.end()) {
            return it->second;
        }
        if (active_.contains(label)) {
            throw ProfileError("template cycle through '" + label + "'");
        }
        active_.insert(label);
        auto node = std::make_shared<CallNode>();
        node->name = name;
        node->args = args;
        if (const TemplateDef *def = tree_.library->find(name)) {
            build_composite(*node, *def);
        } else if (name == "integer_inverse" && args.empty()) {
            node->kind = CallNode::Kind::Oracle;
            node->tag = NodeTag::IntegerInverse;
            node->own = integer_inverse_profile(in_.oracles, true, in_.integer_inverse_factor).vector;
        } else if (is_builtin_leaf(name)) {
            std::vector<std::int64_t> small;
            for (const BigInt &a : args) {
                if (a < 0 || a > 1'000'000) {
                    throw ProfileError("argument " + a.str() + " of '" + label + "' out of range");
                }
                small.push_back(a.convert_to<std::int64_t>());
            }
            node->kind = CallNode::Kind::Leaf;
            try {
                node->own = builtin_leaf(name, small, in_.policy);
            } catch (const std::invalid_argument &e) {
                throw ProfileError(label + ": " + e.what());
            }
        } else if (auto it = in_.oracles.find(name); it != in_.oracles.end() && args.empty()) {
            node->kind = CallNode::Kind::Oracle;
            node->tag = NodeTag::Oracle;
            node->own = it->second.vector;
        } else {
            throw ProfileError("unresolved template reference '" + label + "'" +
                               (context.empty() ? "" : " in '" + context + "'"));
        }
        active_.erase(label);
        tree_.nodes.emplace(label, node);
        return node;
    }

   private:
    void build_composite(CallNode &node, const TemplateDef &def) {
        const std::string label = make_label(node.name, node.args);
        if (def.params.size() != node.args.size()) {
            throw ProfileError("template '" + def.name + "' takes " + std::to_string(def.params.size()) +
                               " argument(s), got " + std::to_string(node.args.size()));
        }
        node.def = &def;
        node.compose = def.compose;
        node.tag = def.tag;
        Env env = tree_.globals;
        for (std::size_t i = 0; i < def.params.size(); ++i) {
            env.insert_or_assign(def.params[i], Rational(node.args[i]));
        }
        const auto eval = [&](const Expr &e, const std::string &what) {
            try {
                return require_integer(e.eval(env), what);
            } catch (const ExprError &err) {
                throw ProfileError(label + ": " + what + ": " + err.what());
            }
        };
        for (const auto &[kind, count] : def.gates) {
            BigInt n = eval(count, "gate count '" + count.text() + "'");
            if (n < 0) {
                throw ProfileError(label + ": negative gate count");
            }
            node.own = seq(node.own, repeat(ResourceVector::gate(kind), n));
        }
        for (const ChildRef &ref : def.children) {
            BigInt m = eval(ref.multiplicity, "multiplicity of '" + ref.name + "'");
            if (m < 0) {
                throw ProfileError(label + ": negative multiplicity " + m.str() + " for '" + ref.name + "'");
            }
            if (m == 0) {
                continue;
            }
            std::vector<BigInt> args;
            for (const Expr &a : ref.args) {
                args.push_back(eval(a, "argument '" + a.text() + "' of '" + ref.name + "'"));
            }
            node.children.push_back({instantiate(ref.name, args, label), m});
        }
    }

    const ProfileInputs &in_;
    CallTree &tree_;
    std::set<std::string, std::less<>> active_;
};

bool matches(const std::string &name, const std::string &pattern) {
    if (!pattern.empty() && pattern.back() == '*') {
        return name.compare(0, pattern.size() - 1, pattern, 0, pattern.size() - 1) == 0;
    }
    return name == pattern;
}

}  // namespace

std::string CallNode::label() const {
    return make_label(name, args);
}

Env profile_globals(const ProblemParams &p, std::int64_t mix_true) {
    return Env{
        {"n0", Rational(p.n0)}, {"n1", Rational(p.n1)}, {"n2", Rational(p.n2)},
        {"n4", Rational(p.n4)}, {"Nb", Rational(p.Nb)}, {"k", Rational(p.k)},
        {"r", Rational(p.r)},   {"M", Rational(p.M)},   {"mix_true", Rational(mix_true)},
    };
}

CallTree build_profile(const ProfileInputs &inputs, const std::string &root, const std::vector<BigInt> &root_args) {
    if (inputs.mix_true < 0 || inputs.mix_true > 6) {
        throw ProfileError("oracles.mix_true must be in [0, 6]");
    }
    CallTree tree;
    auto lib = std::make_shared<TemplateLibrary>(TemplateLibrary::builtin_qlsa());
    if (inputs.overrides) {
        lib->override_with(*inputs.overrides);
    }
    tree.library = lib;
    tree.globals = profile_globals(inputs.params, inputs.mix_true);
    Builder builder(inputs, tree);
    auto node = builder.instantiate(root, root_args, "");
    if (inputs.parallel_ampest && node->kind == CallNode::Kind::Composite) {
        auto copy = std::make_shared<CallNode>(*node);
        copy->compose = Compose::Par;
        tree.nodes.insert_or_assign(copy->label(), copy);
        node = copy;
    }
    tree.root = node;
    return tree;
}

ResourceVector evaluate(const CallTree &tree, bool include_oracles) {
    std::unordered_map<const CallNode *, ResourceVector> memo;
    const auto eval = [&](const auto &self, const CallNode &n) -> ResourceVector {
        if (!include_oracles && n.tag != NodeTag::Core) {
            return {};
        }
        if (auto it = memo.find(&n); it != memo.end()) {
            return it->second;
        }
        ResourceVector v = n.own;
        if (n.kind == CallNode::Kind::Composite) {
            ResourceVector body;
            for (const CallEdge &e : n.children) {
                ResourceVector c = self(self, *e.node);
                body = n.compose == Compose::Seq ? seq(body, repeat(c, e.multiplicity))
                                                 : par(body, par_repeat(c, e.multiplicity));
            }
            v = seq(v, body);
        }
        memo.emplace(&n, v);
        return v;
    };
    return tree.root ? eval(eval, *tree.root) : ResourceVector{};
}

BigInt occurrences(const CallTree &tree, const std::string &within, const std::string &name) {
    auto start = tree.nodes.find(within);
    if (start == tree.nodes.end()) {
        return 0;
    }
    std::unordered_map<const CallNode *, BigInt> memo;
    const auto count = [&](const auto &self, const CallNode &n) -> BigInt {
        if (auto it = memo.find(&n); it != memo.end()) {
            return it->second;
        }
        BigInt c = matches(n.name, name) ? 1 : 0;
        for (const CallEdge &e : n.children) {
            c += e.multiplicity * self(self, *e.node);
        }
        memo.emplace(&n, c);
        return c;
    };
    return count(count, *start->second);
}

std::map<std::string, BigInt, std::less<>> anchors(const CallTree &tree) {
    const std::string root = tree.root ? tree.root->label() : std::string();
    std::map<std::string, BigInt, std::less<>> a;
    a["ampest_calls"] = occurrences(tree, root, "ampest_*");
    a["grover_per_ampest"] = occurrences(tree, "ampest_b", "grover_b");
    a["hs_calls"] = occurrences(tree, root, "u_hs");
    a["suzuki_slices"] = occurrences(tree, root, "suzuki_slice");
    a["suzuki_exponentials"] = occurrences(tree, root, "uz");
    a["hsimkernel_calls"] = occurrences(tree, root, "hsim_kernel");
    a["oracle_A_queries"] = occurrences(tree, root, "oracle_A*");
    a["hmag_calls"] = occurrences(tree, root, "hmag");
    a["oracle_b_queries"] = occurrences(tree, root, "oracle_b");
    a["oracle_R_queries"] = occurrences(tree, root, "oracle_R");
    a["integer_inverse_calls"] = occurrences(tree, root, "integer_inverse");
    return a;
}

Report estimate(ProfileInputs inputs) {
    inputs.params = resolve(inputs.params);
    inputs.policy.validate();
    CallTree tree = build_profile(inputs);
    Report r;
    r.params = inputs.params;
    r.parallel_ampest = inputs.parallel_ampest;
    r.persistent_qubits = persistent_qubits(inputs.params);
    r.incl_oracles = evaluate(tree, true);
    r.excl_oracles = evaluate(tree, false);
    r.anchors = anchors(tree);
    if (inputs.parallel_ampest) {
        // Each concurrently running child needs its own register set.
        r.copies = 0;
        for (const CallEdge &e : tree.root->children) {
            CallTree sub;
            sub.root = e.node;
            if (!evaluate(sub, false).is_zero()) {
                r.copies += e.multiplicity;
            }
        }
        if (r.copies == 0) {
            r.copies = 1;
        }
    }
    const BigInt persistent = BigInt(r.persistent_qubits) * r.copies;
    r.incl_oracles.width = persistent + r.incl_oracles.ancilla_max;
    r.excl_oracles.width = persistent + r.excl_oracles.ancilla_max;
    return r;
}

nlohmann::json to_json(const Report &r) {
    nlohmann::json j;
    j["params"] = to_json(r.params);
    j["params"]["parallel_ampest"] = r.parallel_ampest;
    j["incl_oracles"] = to_json(r.incl_oracles);
    j["excl_oracles"] = to_json(r.excl_oracles);
    nlohmann::json a = nlohmann::json::object();
    for (const auto &[k, v] : r.anchors) {
        a[k] = v.str();
    }
    j["anchors"] = a;
    j["persistent_qubits"] = r.persistent_qubits;
    return j;
}

std::string to_csv(const Report &r, bool incl, bool excl) {
    std::ostringstream out;
    out << "mode";
    for (std::string_view f : kFieldNames) {
        out << ',' << f;
    }
    out << ",total_gates\n";
    const auto row = [&out](const char *mode, const ResourceVector &v) {
        out << mode;
        for (std::string_view f : kFieldNames) {
            out << ',' << get_field(v, f);
        }
        out << ',' << v.total_gates() << '\n';
    };
    if (incl) row("incl_oracles", r.incl_oracles);
    if (excl) row("excl_oracles", r.excl_oracles);
    return out.str();
}

std::string to_table(const Report &r, bool incl, bool excl) {
    std::ostringstream out;
    const auto line = [&](const std::string &label, const BigInt &i, const BigInt &e) {
        out << "  " << std::left << std::setw(18) << label << std::right;
        if (excl) out << std::setw(14) << sci(e);
        if (incl) out << std::setw(14) << sci(i);
        out << '\n';
    };
    out << "QLSA resource estimate (N = " << r.params.N << ", r = " << sci(r.params.r) << ", "
        << (r.parallel_ampest ? "parallel" : "sequential") << " amplitude estimation)\n";
    out << "  " << std::left << std::setw(18) << "" << std::right;
    if (excl) out << std::setw(14) << "excl oracles";
    if (incl) out << std::setw(14) << "incl oracles";
    out << '\n';
    const ResourceVector &I = r.incl_oracles;
    const ResourceVector &E = r.excl_oracles;
    line("total gates", I.total_gates(), E.total_gates());
    for (std::string_view f : {"x", "y", "z", "h", "s", "t", "cnot"}) {
        line(std::string(f), get_field(I, f), get_field(E, f));
    }
    line("depth", I.depth, E.depth);
    line("t_depth", I.t_depth, E.t_depth);
    line("width", I.width, E.width);
    line("ancilla max", I.ancilla_max, E.ancilla_max);
    line("ancilla cycles", I.ancilla_cycles, E.ancilla_cycles);
    line("measurements", I.measurements, E.measurements);
    out << "anchors\n";
    for (const auto &[k, v] : r.anchors) {
        out << "  " << std::left << std::setw(24) << k << std::right << std::setw(24) << v.str() << '\n';
    }
    constexpr double kSecondsPerYear = 365.25 * 24 * 3600;
    out << "run time at 1 ns per layer:";
    if (excl) out << " excl " << std::setprecision(3) << to_double(E.depth) * 1e-9 / kSecondsPerYear << " years";
    if (incl) out << (excl ? "," : "") << " incl " << std::setprecision(3)
                  << to_double(I.depth) * 1e-9 / kSecondsPerYear << " years";
    out << '\n';
    return out.str();
}

}  // namespace qlre
