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

#include <cmath>

#include <gtest/gtest.h>

#include "qlre/oracles.hpp"

namespace qlre {
namespace {

TEST(DefaultProfiles, Present) {
    const OracleSet &set = default_profiles();
    for (const char *name : {"oracle_A_false", "oracle_A_false_band3", "oracle_A_false_band5", "oracle_A_true",
                             "oracle_b", "oracle_R"}) {
        EXPECT_TRUE(set.contains(name)) << name;
    }
}

TEST(DefaultProfiles, OracleAFalseBandOne) {
    const ResourceVector &v = require_profile(default_profiles(), "oracle_A_false").vector;
    EXPECT_EQ(v.t_count(), 126'722'316);
    EXPECT_EQ(v.ancilla_max, 4'779'020);
    EXPECT_EQ(v.depth, 248'096'178);
    EXPECT_EQ(v.t_depth, 108'619'128);
}

TEST(DefaultProfiles, RepresentativeValues) {
    const OracleSet &set = default_profiles();
    const auto near = [](const BigInt &v, double want) { return std::abs(to_double(v) / want - 1.0) < 0.005; };
    EXPECT_TRUE(near(require_profile(set, "oracle_A_true").vector.t_count(), 4.66e8));
    EXPECT_TRUE(near(require_profile(set, "oracle_A_true").vector.depth, 8.87e8));
    EXPECT_TRUE(near(require_profile(set, "oracle_A_true").vector.ancilla_max, 1.29e7));
    EXPECT_TRUE(near(require_profile(set, "oracle_b").vector.t_count(), 5.75e9));
    EXPECT_TRUE(near(require_profile(set, "oracle_b").vector.depth, 1.12e10));
    EXPECT_TRUE(near(require_profile(set, "oracle_b").vector.ancilla_max, 2.05e8));
    EXPECT_TRUE(near(require_profile(set, "oracle_R").vector.t_count(), 3.11e9));
    EXPECT_TRUE(near(require_profile(set, "oracle_R").vector.depth, 6.06e9));
    EXPECT_TRUE(near(require_profile(set, "oracle_R").vector.ancilla_max, 1.11e8));
}

TEST(DefaultProfiles, OracleBGateSum) {
    const ResourceVector &v = require_profile(default_profiles(), "oracle_b").vector;
    EXPECT_EQ(v.total_gates(), BigInt("14525927206"));
    EXPECT_NEAR(to_double(v.total_gates()) / 1.45e10, 1.0, 0.01);
}

TEST(DefaultProfiles, BandsAgreeBelowOnePercent) {
    const OracleSet &set = default_profiles();
    const ResourceVector &b1 = require_profile(set, "oracle_A_false").vector;
    for (const char *other : {"oracle_A_false_band3", "oracle_A_false_band5"}) {
        const ResourceVector &b = require_profile(set, other).vector;
        for (std::string_view f : kFieldNames) {
            double x = to_double(get_field(b1, f)), y = to_double(get_field(b, f));
            if (x == 0) {
                EXPECT_EQ(y, 0) << other << " " << f;
            } else {
                EXPECT_LT(std::abs(y / x - 1.0), 0.01) << other << " " << f;
            }
        }
    }
}

TEST(DefaultProfiles, Invariants) {
    for (const auto &[name, p] : default_profiles()) {
        EXPECT_EQ(p.vector.measurements, p.vector.ancilla_cycles) << name;
        EXPECT_EQ(p.vector.ancilla_max, p.vector.ancilla_cycles) << name;
        EXPECT_FALSE(check_invariants(p.vector)) << name;
    }
}

TEST(Serialize, RoundTripsBitExactly) {
    const OracleSet &set = default_profiles();
    std::string text = serialize_profiles(set);
    OracleSet again = parse_profiles(text);
    EXPECT_EQ(again, set);
    EXPECT_EQ(serialize_profiles(again), text);
}

TEST(Parse, EmptyProfile) {
    OracleSet set = parse_profiles("[oracle nothing]\n");
    ASSERT_TRUE(set.contains("nothing"));
    EXPECT_TRUE(set.at("nothing").vector.is_zero());
}

TEST(Parse, CommentsAndFields) {
    OracleSet set = parse_profiles(
        "# header\n"
        "[oracle q]\n"
        "source = hand written\n"
        "t = 10\n"
        "measurements = 3\n"
        "ancilla_cycles = 3\n"
        "ancilla_max = 3\n"
        "width = 3\n");
    const OracleCostProfile &p = set.at("q");
    EXPECT_EQ(p.source, "hand written");
    EXPECT_EQ(p.vector.t_count(), 10);
}

int parse_error_line(const std::string &text) {
    try {
        parse_profiles(text);
    } catch (const ProfileParseError &e) {
        return e.line();
    }
    return -1;
}

TEST(Parse, ErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line("[oracle a]\nt = x\n"), 2);
    EXPECT_EQ(parse_error_line("t = 1\n"), 1);
    EXPECT_EQ(parse_error_line("[oracle a]\nbogus = 1\n"), 2);
    EXPECT_EQ(parse_error_line("[oracle a]\nt = 1\nt = 2\n"), 3);
    EXPECT_EQ(parse_error_line("[oracle a]\n\n[oracle a]\n"), 3);
    EXPECT_EQ(parse_error_line("[oracle a]\nt = -4\n"), 2);
    EXPECT_EQ(parse_error_line("[oracle]\n"), 1);
}

TEST(Parse, RejectsMeasurementCycleMismatch) {
    EXPECT_EQ(parse_error_line("\n[oracle a]\nmeasurements = 2\nancilla_cycles = 3\n"), 2);
}

TEST(Load, MissingFile) {
    EXPECT_THROW(load_profiles("/nonexistent/oracles.profile"), std::runtime_error);
}

TEST(Load, BundledFileMatchesEmbedded) {
    EXPECT_EQ(load_profiles(std::string(QLRE_SOURCE_DATA) + "/oracles_default.profile"), default_profiles());
}

TEST(IntegerInverse, ExclIsZero) {
    OracleCostProfile p = integer_inverse_profile(default_profiles(), false);
    EXPECT_TRUE(p.vector.is_zero());
}

TEST(IntegerInverse, FactorZero) {
    EXPECT_TRUE(integer_inverse_profile(default_profiles(), true, 0.0).vector.is_zero());
}

TEST(IntegerInverse, FactorOneClonesOracleA) {
    OracleCostProfile p = integer_inverse_profile(default_profiles(), true, 1.0);
    EXPECT_EQ(p.vector, require_profile(default_profiles(), "oracle_A_false").vector);
}

TEST(IntegerInverse, FactorScales) {
    OracleCostProfile p = integer_inverse_profile(default_profiles(), true, 0.5);
    EXPECT_EQ(p.vector.t_count(), 63'361'158);
    EXPECT_EQ(p.vector.measurements, p.vector.ancilla_cycles);
    EXPECT_THROW(integer_inverse_profile(default_profiles(), true, -1.0), std::invalid_argument);
}

TEST(RequireProfile, Missing) {
    EXPECT_THROW(require_profile(default_profiles(), "oracle_Z"), std::out_of_range);
}

}  // namespace
}  // namespace qlre
