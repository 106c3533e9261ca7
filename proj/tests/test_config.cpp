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

#include <gtest/gtest.h>

#include "qlre/config.hpp"

namespace qlre {
namespace {

const std::string kData = QLRE_TEST_DATA;

TEST(Config, EmptyDocumentKeepsDefaults) {
    Config c = parse_config("");
    EXPECT_EQ(c.params.N, BigInt(332'020'680));
    EXPECT_EQ(c.policy, RotationPolicy{});
    EXPECT_EQ(c.mix_true, 4);
    EXPECT_EQ(c.format, "table");
    EXPECT_FALSE(c.oracle_profile);
}

TEST(Config, AllSections) {
    Config c = parse_config(
        "problem:\n"
        "  N: 1000\n"
        "  kappa: 1e3\n"
        "  d: 5\n"
        "  epsilon: 0.05\n"
        "  p_err: 0.02\n"
        "  alpha: 0.5\n"
        "  Nb: 7\n"
        "suzuki:\n"
        "  k: 3\n"
        "trotter:\n"
        "  r_override: 2.5e12\n"
        "  normA_t: 1e6\n"
        "registers:\n"
        "  n1: 20\n"
        "  n4: 33\n"
        "rotation:\n"
        "  mode: fowler\n"
        "  distance: 1e-4\n"
        "oracles:\n"
        "  mix_true: 3\n"
        "  integer_inverse_factor: 0.5\n"
        "output:\n"
        "  format: json\n");
    EXPECT_EQ(c.params.N, 1000);
    EXPECT_DOUBLE_EQ(c.params.kappa, 1e3);
    EXPECT_DOUBLE_EQ(c.params.alpha, 0.5);
    EXPECT_EQ(c.params.Nb, 7);
    EXPECT_EQ(c.params.k, 3);
    EXPECT_EQ(*c.params.r_override, BigInt("2500000000000"));
    EXPECT_DOUBLE_EQ(*c.params.normA_t, 1e6);
    EXPECT_EQ(c.params.n1, 20);
    EXPECT_EQ(c.params.n4, 33);
    EXPECT_EQ(c.policy.mode, RotationMode::FowlerFit);
    EXPECT_DOUBLE_EQ(c.policy.target_distance, 1e-4);
    EXPECT_EQ(c.mix_true, 3);
    EXPECT_DOUBLE_EQ(c.integer_inverse_factor, 0.5);
    EXPECT_EQ(c.format, "json");
}

TEST(Config, AutoSlices) {
    Config c = parse_config("trotter:\n  r_override: auto\n");
    EXPECT_FALSE(c.params.r_override);
}

TEST(Config, RotationTotalKeepsSplit) {
    Config c = parse_config("rotation:\n  total: 50\n");
    EXPECT_EQ(c.policy.fixed_total, 50);
    EXPECT_EQ(c.policy.mix_t, 20);
    EXPECT_EQ(c.policy.mix_h, 20);
    EXPECT_EQ(c.policy.mix_s, 10);
    Config odd = parse_config("rotation:\n  total: 7\n");
    EXPECT_EQ(odd.policy.mix_t + odd.policy.mix_h + odd.policy.mix_s, 7);
}

struct Failure {
    std::string key;
    int line = -1;
};

Failure failure(const std::string &yaml) {
    try {
        parse_config(yaml, "test.yaml");
    } catch (const ConfigError &e) {
        return {e.key(), e.line()};
    }
    return {};
}

TEST(Config, UnknownSectionAndKey) {
    Failure s = failure("problem:\n  N: 10\nwidget:\n  a: 1\n");
    EXPECT_EQ(s.key, "widget");
    EXPECT_EQ(s.line, 3);
    Failure k = failure("problem:\n  kappa: 1e4\n  epsilom: 0.01\n");
    EXPECT_EQ(k.key, "problem.epsilom");
    EXPECT_EQ(k.line, 3);
}

TEST(Config, BadValues) {
    EXPECT_EQ(failure("problem:\n  kappa: lots\n").key, "problem.kappa");
    EXPECT_EQ(failure("problem:\n  kappa: .inf\n").key, "problem.kappa");
    EXPECT_EQ(failure("problem:\n  N: 1.5\n").key, "problem.N");
    EXPECT_EQ(failure("problem:\n  N: [1, 2]\n").key, "problem.N");
    EXPECT_EQ(failure("rotation:\n  mode: exact\n").key, "rotation.mode");
    EXPECT_EQ(failure("oracles:\n  mix_true: 9\n").key, "oracles.mix_true");
    EXPECT_EQ(failure("oracles:\n  integer_inverse_factor: -1\n").key, "oracles.integer_inverse_factor");
    EXPECT_EQ(failure("output:\n  format: xml\n").key, "output.format");
    EXPECT_EQ(failure("problem: 3\n").key, "problem");
    EXPECT_EQ(failure("- a\n- b\n").key, "<document>");
    EXPECT_EQ(failure("problem:\n  N: [\n").key, "<document>");
}

TEST(Config, DomainChecks) {
    Failure f = failure("problem:\n  epsilon: 1.5\n");
    EXPECT_EQ(f.key, "<values>");
    EXPECT_EQ(failure("rotation:\n  mode: fowler\n  distance: 0.5\n").key, "<values>");
}

TEST(Config, LoadsFilesRelativeToConfig) {
    Config c = load_config(kData + "/small.yaml");
    EXPECT_EQ(*c.params.nx, 4);
    ProfileInputs in = c.to_inputs();
    Report r = estimate(in);
    EXPECT_EQ(r.params.N, 24);
    EXPECT_EQ(r.params.n2, 6);
}

TEST(Config, ReferencedProfilesAndTemplates) {
    Config c = parse_config("oracles:\n  profile: ../../core/data/oracles_default.profile\n"
                            "templates:\n  override: ../../core/data/qlsa.tmpl\n",
                            "inline", kData);
    ProfileInputs in = c.to_inputs();
    EXPECT_EQ(in.oracles, default_profiles());
    ASSERT_TRUE(in.overrides);
    EXPECT_EQ(estimate(in).excl_oracles, estimate(ProfileInputs{}).excl_oracles);
}

TEST(Config, MissingFile) {
    EXPECT_THROW(load_config(kData + "/nope.yaml"), ConfigError);
}

}  // namespace
}  // namespace qlre
