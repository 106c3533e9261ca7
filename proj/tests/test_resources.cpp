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

#include <random>

#include <gtest/gtest.h>

#include "qlre/circuit.hpp"
#include "qlre/resources.hpp"
#include "qlre/templates.hpp"

namespace qlre {
namespace {

constexpr int kPropertyCases = 10'000;

ResourceVector random_vector(std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::uint64_t> small(0, 1000);
    std::uniform_int_distribution<std::uint64_t> big(0, ~0ull);
    ResourceVector v;
    for (GateKind k : kAllGateKinds) {
        v.count(k) = BigInt(big(rng)) * small(rng);
    }
    v.depth = BigInt(big(rng)) * 7;
    v.t_depth = v.depth / 3;
    v.width = small(rng);
    v.ancilla_max = v.width / 2;
    v.ancilla_cycles = big(rng);
    v.measurements = v.ancilla_cycles;
    return v;
}

TEST(ResourceVector, ZeroIsZero) {
    ResourceVector z;
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.total_gates(), 0);
    EXPECT_FALSE(check_invariants(z));
}

TEST(ResourceVector, GateBlock) {
    ResourceVector c = ResourceVector::gate(GateKind::CNOT);
    EXPECT_EQ(c.count(GateKind::CNOT), 1);
    EXPECT_EQ(c.depth, 1);
    EXPECT_EQ(c.width, 2);
    ResourceVector m = ResourceVector::gate(GateKind::Measure);
    EXPECT_EQ(m.depth, 0);
    EXPECT_EQ(m.total_gates(), 0);
}

TEST(ResourceVector, TotalMergesDaggers) {
    ResourceVector v;
    v.count(GateKind::S) = 3;
    v.count(GateKind::Sdag) = 2;
    v.count(GateKind::T) = 5;
    v.count(GateKind::Tdag) = 1;
    v.count(GateKind::Measure) = 100;
    EXPECT_EQ(v.s_count(), 5);
    EXPECT_EQ(v.t_count(), 6);
    EXPECT_EQ(v.total_gates(), 11);
    EXPECT_EQ(get_field(v, "s"), 5);
    EXPECT_EQ(get_field(v, "t"), 6);
}

TEST(Seq, IdentityElement) {
    ResourceVector t = toffoli();
    EXPECT_EQ(seq(t, ResourceVector{}), t);
    EXPECT_EQ(seq(ResourceVector{}, t), t);
}

TEST(Seq, ToffoliPair) {
    ResourceVector v = seq(toffoli(), toffoli());
    EXPECT_EQ(v.depth, 24);
    EXPECT_EQ(v.t_count(), 14);
    EXPECT_EQ(v.width, 3);
}

TEST(Seq, WidthIsMax) {
    ResourceVector a, b;
    a.width = 4;
    b.width = 66;
    EXPECT_EQ(seq(a, b).width, 66);
}

TEST(Par, ZeroKeepsWidth) {
    ResourceVector t = toffoli();
    EXPECT_EQ(par(t, ResourceVector{}), t);
}

TEST(Par, FourCopies) {
    ResourceVector a = toffoli();
    a.ancilla_max = 1;
    a.width = 4;
    ResourceVector four = par(par(a, a), par(a, a));
    EXPECT_EQ(four.width, 16);
    EXPECT_EQ(four.ancilla_max, 4);
    EXPECT_EQ(four.depth, a.depth);
    EXPECT_EQ(four.t_depth, a.t_depth);
    EXPECT_EQ(four.count(GateKind::T), 4 * a.count(GateKind::T));
    EXPECT_EQ(par_repeat(a, 4), four);
}

TEST(Repeat, Basics) {
    ResourceVector t = toffoli();
    EXPECT_EQ(repeat(t, 1), t);
    EXPECT_TRUE(repeat(t, 0).is_zero());
    EXPECT_EQ(repeat(t, 3), seq(seq(t, t), t));
    EXPECT_THROW(repeat(t, -1), std::invalid_argument);
}

TEST(Repeat, HugeCount) {
    ResourceVector slice;
    slice.depth = 12345;
    slice.width = 7;
    BigInt r("2500000000000");
    ResourceVector v = repeat(slice, r);
    EXPECT_EQ(v.depth, r * 12345);
    EXPECT_EQ(v.width, 7);
}

TEST(Properties, MonoidLaws) {
    std::mt19937_64 rng(42);
    const ResourceVector zero;
    for (int i = 0; i < kPropertyCases; ++i) {
        ResourceVector a = random_vector(rng), b = random_vector(rng), c = random_vector(rng);
        ASSERT_EQ(seq(seq(a, b), c), seq(a, seq(b, c)));
        ASSERT_EQ(par(par(a, b), c), par(a, par(b, c)));
        ASSERT_EQ(seq(a, zero), a);
        ASSERT_EQ(par(zero, a), a);
        ASSERT_EQ(par(a, b), par(b, a));
        ASSERT_EQ(seq(a, b).measurements, a.measurements + b.measurements);
        ASSERT_EQ(seq(a, b).ancilla_cycles, par(a, b).ancilla_cycles);
    }
}

TEST(Properties, RepeatSplits) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> count(0, 50);
    for (int i = 0; i < kPropertyCases; ++i) {
        ResourceVector a = random_vector(rng);
        int n = count(rng), m = count(rng);
        ASSERT_EQ(repeat(a, n + m), seq(repeat(a, n), repeat(a, m)));
    }
}

TEST(Properties, ParenthesizationOfGateList) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> kind(0, static_cast<int>(kNumGateKinds) - 1);
    for (int i = 0; i < kPropertyCases; ++i) {
        std::vector<ResourceVector> blocks(12);
        for (auto &b : blocks) b = ResourceVector::gate(kAllGateKinds[kind(rng)]);
        ResourceVector left;
        for (const auto &b : blocks) left = seq(left, b);
        std::uniform_int_distribution<std::size_t> split(0, blocks.size());
        std::size_t s = split(rng);
        ResourceVector x, y;
        for (std::size_t j = 0; j < s; ++j) x = seq(x, blocks[j]);
        for (std::size_t j = s; j < blocks.size(); ++j) y = seq(y, blocks[j]);
        ASSERT_EQ(seq(x, y), left);
    }
}

TEST(Properties, CensusMatchesSeqFold) {
    ExplicitCircuit c = expand_toffoli();
    ResourceVector v = census(c);
    EXPECT_EQ(v.total_gates(), 16);
    EXPECT_LE(v.depth, v.total_gates());
}

TEST(Invariants, Violations) {
    ResourceVector v;
    v.depth = 1;
    v.t_depth = 2;
    EXPECT_TRUE(check_invariants(v));
    ResourceVector w;
    w.t_depth = 1;
    w.depth = 1;
    EXPECT_TRUE(check_invariants(w));
    w.count(GateKind::Tdag) = 1;
    EXPECT_FALSE(check_invariants(w));
    ResourceVector a;
    a.ancilla_max = 3;
    a.width = 2;
    EXPECT_TRUE(check_invariants(a));
}

TEST(Json, FieldNamesAndRoundTrip) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        ResourceVector v = random_vector(rng);
        v.count(GateKind::Sdag) = 0;
        v.count(GateKind::Tdag) = 0;
        v.count(GateKind::AncillaInit) = v.ancilla_cycles;
        v.count(GateKind::AncillaTerm) = v.ancilla_cycles;
        nlohmann::json j = to_json(v);
        ASSERT_EQ(j.size(), kFieldNames.size());
        for (std::string_view f : kFieldNames) ASSERT_TRUE(j.contains(std::string(f))) << f;
        ASSERT_EQ(resource_vector_from_json(j), v);
    }
}

TEST(Json, BigValuesAreStrings) {
    ResourceVector v;
    v.depth = BigInt("48158549352000016930773713");
    EXPECT_EQ(to_json(v)["depth"], "48158549352000016930773713");
}

TEST(Json, Rejects) {
    EXPECT_THROW(resource_vector_from_json(nlohmann::json::array()), std::invalid_argument);
    EXPECT_THROW(resource_vector_from_json({{"bogus", "1"}}), std::invalid_argument);
    EXPECT_THROW(resource_vector_from_json({{"x", "-1"}}), std::invalid_argument);
}

TEST(ParseCount, LeadingZerosAreDecimal) {
    EXPECT_EQ(parse_count("010"), 10);
    EXPECT_EQ(parse_count("000"), 0);
    EXPECT_THROW(parse_count("0x10"), std::invalid_argument);
    EXPECT_THROW(parse_count(""), std::invalid_argument);
    EXPECT_EQ(resource_vector_from_json({{"t", "0100"}}).t_count(), 100);
}

TEST(Format, Sci) {
    EXPECT_EQ(sci(BigInt("48418734328200025171000389")), "4.84e+25");
    EXPECT_EQ(sci(BigInt(0)), "0");
    EXPECT_EQ(sci(BigInt(999)), "999");
}

TEST(GateKind, Names) {
    for (GateKind k : kAllGateKinds) {
        auto parsed = parse_gate_kind(gate_name(k));
        ASSERT_TRUE(parsed);
        EXPECT_EQ(*parsed, k);
    }
    EXPECT_FALSE(parse_gate_kind("toffoli"));
    EXPECT_TRUE(is_bookkeeping(GateKind::Measure));
    EXPECT_TRUE(is_t_like(GateKind::Tdag));
}

}  // namespace
}  // namespace qlre
