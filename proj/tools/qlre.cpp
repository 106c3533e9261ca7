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

// qlre: resource estimates for the QLSA call tree.

#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qlre/config.hpp"
#include "qlre/profile.hpp"
#include "qlre/reversibilizer.hpp"
#include "qlre/templates.hpp"
#include "qlre/verifier.hpp"

namespace {

using namespace qlre;

struct GlobalOptions {
    std::string config_path;
    std::string format;
    bool include_oracles = false;
    bool exclude_oracles = false;
    bool parallel_ampest = false;
};

Config load(const GlobalOptions &g) {
    Config cfg = g.config_path.empty() ? Config{} : load_config(g.config_path);
    if (!g.format.empty()) {
        cfg.format = g.format;
    }
    return cfg;
}

// With neither flag both modes are reported.
std::pair<bool, bool> modes(const GlobalOptions &g) {
    if (!g.include_oracles && !g.exclude_oracles) {
        return {true, true};
    }
    return {g.include_oracles, g.exclude_oracles};
}

int cmd_estimate(const GlobalOptions &g) {
    Config cfg = load(g);
    ProfileInputs in = cfg.to_inputs();
    in.parallel_ampest = g.parallel_ampest;
    Report r = estimate(in);
    auto [incl, excl] = modes(g);
    if (cfg.format == "json") {
        nlohmann::json j = to_json(r);
        if (!incl) j.erase("incl_oracles");
        if (!excl) j.erase("excl_oracles");
        std::cout << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << to_csv(r, incl, excl);
    } else {
        std::cout << to_table(r, incl, excl);
    }
    return 0;
}

void set_sweep_param(ProblemParams &p, const std::string &name, const std::string &value) {
    if (name == "epsilon") {
        p.epsilon = std::stod(value);
    } else if (name == "kappa") {
        p.kappa = std::stod(value);
    } else if (name == "N") {
        p.nx.reset();
        p.ny.reset();
        p.N = boost::multiprecision::numerator(parse_decimal(value));
    } else if (name == "r_override") {
        if (value == "auto") {
            p.r_override.reset();
        } else {
            p.r_override = boost::multiprecision::numerator(parse_decimal(value));
        }
    } else if (name == "Nb") {
        p.Nb = std::stoll(value);
    } else {
        throw CLI::ValidationError("--param", "'" + name + "' is not sweepable (epsilon, N, kappa, r_override, Nb)");
    }
}

int cmd_sweep(const GlobalOptions &g, const std::string &param, const std::vector<std::string> &values) {
    Config cfg = load(g);
    ProfileInputs base = cfg.to_inputs();
    base.parallel_ampest = g.parallel_ampest;
    std::vector<ProfileInputs> runs;
    for (const std::string &v : values) {
        ProfileInputs in = base;
        set_sweep_param(in.params, param, v);
        runs.push_back(std::move(in));
    }
    std::vector<std::future<Report>> jobs;
    for (const ProfileInputs &in : runs) {
        jobs.push_back(std::async(std::launch::async, [in] { return estimate(in); }));
    }
    auto [incl, excl] = modes(g);
    std::cout << "param,value,n0,n2,r,mode";
    for (std::string_view f : kFieldNames) std::cout << ',' << f;
    std::cout << ",total_gates\n";
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        Report r = jobs[i].get();
        const auto row = [&](const char *mode, const ResourceVector &v) {
            std::cout << param << ',' << values[i] << ',' << r.params.n0 << ',' << r.params.n2 << ',' << r.params.r
                      << ',' << mode;
            for (std::string_view f : kFieldNames) std::cout << ',' << get_field(v, f);
            std::cout << ',' << v.total_gates() << '\n';
        };
        if (incl) row("incl_oracles", r.incl_oracles);
        if (excl) row("excl_oracles", r.excl_oracles);
    }
    return 0;
}

void print_vector(const ResourceVector &v, const std::string &format) {
    if (format == "json") {
        std::cout << to_json(v).dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        for (std::size_t i = 0; i < kFieldNames.size(); ++i) std::cout << (i ? "," : "") << kFieldNames[i];
        std::cout << ",total_gates\n";
        for (std::size_t i = 0; i < kFieldNames.size(); ++i) std::cout << (i ? "," : "") << get_field(v, kFieldNames[i]);
        std::cout << ',' << v.total_gates() << "\n";
        return;
    }
    std::cout << "  " << std::left << std::setw(16) << "total gates" << v.total_gates() << "\n";
    for (std::string_view f : kFieldNames) {
        std::cout << "  " << std::left << std::setw(16) << std::string(f) << get_field(v, f) << "\n";
    }
}

int cmd_template(const GlobalOptions &g, const std::string &name, const std::vector<long long> &raw_args) {
    Config cfg = load(g);
    std::vector<BigInt> args(raw_args.begin(), raw_args.end());
    std::string label = name;
    if (!args.empty()) {
        label += "(";
        for (std::size_t i = 0; i < args.size(); ++i) label += (i ? "," : "") + args[i].str();
        label += ")";
    }
    ProfileInputs in = cfg.to_inputs();
    in.params = resolve(in.params);
    const TemplateDef *def = nullptr;
    TemplateLibrary lib = TemplateLibrary::builtin_qlsa();
    if (in.overrides) lib.override_with(*in.overrides);
    def = lib.find(name);
    if (!def && !is_builtin_leaf(name) && !in.oracles.contains(name) && name != "integer_inverse") {
        std::cerr << "qlre: unknown template '" << name << "'\n";
        return 2;
    }
    CallTree tree = build_profile(in, name, args);
    auto [incl, excl] = modes(g);
    if (cfg.format == "table") {
        std::cout << label << "\n";
        if (std::string f = builtin_formula(name); !f.empty()) std::cout << "  closed form: " << f << "\n";
        if (def && !def->note.empty()) std::cout << "  note: " << def->note << "\n";
    }
    if (tree.root->tag == NodeTag::Core || !excl) {
        print_vector(evaluate(tree, incl), cfg.format);
    } else {
        if (excl && cfg.format == "table") std::cout << "excl oracles: zero (tagged " << tag_name(tree.root->tag) << ")\n";
        if (incl) print_vector(evaluate(tree, true), cfg.format);
    }
    return 0;
}

int cmd_verify(const std::string &suite) {
    std::vector<Check> checks = run_suite(suite);
    int failed = 0;
    for (const Check &c : checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " [" << c.detail << "]\n";
        failed += c.pass ? 0 : 1;
    }
    std::cout << checks.size() - static_cast<std::size_t>(failed) << "/" << checks.size() << " checks passed\n";
    return failed == 0 ? 0 : 1;
}

int cmd_reversibilize(const GlobalOptions &g, const std::string &path, bool tf_only) {
    std::ifstream f(path);
    if (!f) {
        std::cerr << "qlre: cannot open '" << path << "'\n";
        return 2;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    BoolCircuit c = BoolCircuit::parse(buf.str());
    ReversibleCircuit tf = compile_tf(c);
    ReversibleCircuit out = tf_only ? tf : make_uf(tf);
    const std::string format = g.format.empty() ? "table" : g.format;
    if (format == "json") {
        nlohmann::json j;
        j["circuit"] = out.to_text();
        j["resources"] = to_json(resources(out));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << out.to_text();
    std::cout << "resources\n";
    print_vector(resources(out), format);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qlre: logical resource estimates for the quantum linear-system algorithm"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--config", g.config_path, "YAML run configuration")->check(CLI::ExistingFile);
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    auto *inc = app.add_flag("--include-oracles", g.include_oracles, "Report the mode with oracle costs");
    auto *exc = app.add_flag("--exclude-oracles", g.exclude_oracles, "Report the mode without oracle costs");
    inc->excludes(exc);
    app.add_flag("--parallel-ampest", g.parallel_ampest, "Run the amplitude estimations in parallel");

    auto *estimate_cmd = app.add_subcommand("estimate", "Evaluate the QLSA call tree");

    std::string sweep_param;
    std::vector<std::string> sweep_values;
    auto *sweep_cmd = app.add_subcommand("sweep", "Evaluate over a list of parameter values (CSV)");
    sweep_cmd->add_option("--param", sweep_param, "epsilon, N, kappa, r_override or Nb")->required();
    sweep_cmd->add_option("--values", sweep_values, "Comma-separated values")->required()->delimiter(',');

    std::string template_name;
    std::vector<long long> template_args;
    long long opt_n = -1, opt_b = -1, opt_f = -1, opt_k = -1;
    auto *template_cmd = app.add_subcommand("template", "Resources of one template");
    template_cmd->add_option("name", template_name, "Template name")->required();
    template_cmd->add_option("--args", template_args, "Positional template arguments")->delimiter(',');
    template_cmd->add_option("--n", opt_n, "Register size");
    template_cmd->add_option("--b", opt_b, "QFT width");
    template_cmd->add_option("--f", opt_f, "Sign flag");
    template_cmd->add_option("--k", opt_k, "Lifecycle count");

    std::string suite;
    auto *verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite, "Suite")->required()->check(CLI::IsMember({"leaf", "reversible", "tables"}));

    std::string bool_path;
    bool tf_only = false;
    auto *rev_cmd = app.add_subcommand("reversibilize", "Compile a boolean circuit to a reversible oracle");
    rev_cmd->add_option("file", bool_path, "Boolean circuit file")->required();
    rev_cmd->add_flag("--tf-only", tf_only, "Emit T_f without the uncompute wrapper");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*estimate_cmd) return cmd_estimate(g);
        if (*sweep_cmd) return cmd_sweep(g, sweep_param, sweep_values);
        if (*template_cmd) {
            std::vector<long long> args = template_args;
            if (args.empty()) {
                for (long long v : {opt_n, opt_b, opt_k}) {
                    if (v >= 0) args.push_back(v);
                }
                if (opt_f >= 0) {
                    args.push_back(opt_f);
                } else if (args.size() == 1 && (template_name == "cphase" || template_name == "ccphase" ||
                                                template_name == "croty")) {
                    args.push_back(0);
                }
            }
            return cmd_template(g, template_name, args);
        }
        if (*verify_cmd) return cmd_verify(suite);
        if (*rev_cmd) return cmd_reversibilize(g, bool_path, tf_only);
    } catch (const std::exception &e) {
        std::cerr << "qlre: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
