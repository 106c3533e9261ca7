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

// Reference values come from tests/oracles/sizing_oracle.py (40-digit mpmath).

#include <gtest/gtest.h>

#include "qlre/sizing.hpp"

namespace qlre {
namespace {

TEST(FemEdges, Values) {
    EXPECT_EQ(fem_edges(12885, 12885), BigInt(332'020'680));
    EXPECT_EQ(fem_edges(1, 1), 0);
    EXPECT_EQ(fem_edges(4, 4), 24);
    EXPECT_THROW(fem_edges(0, 3), std::invalid_argument);
}

TEST(FemEdges, Symmetric) {
    for (int nx = 1; nx < 40; ++nx) {
        for (int ny = 1; ny < 40; ++ny) ASSERT_EQ(fem_edges(nx, ny), fem_edges(ny, nx));
    }
}

TEST(DataRegister, Values) {
    EXPECT_EQ(data_register_size(BigInt(332'020'680)), 30);
    EXPECT_EQ(data_register_size(BigInt(1)), 1);
    EXPECT_EQ(data_register_size(BigInt(24)), 6);
    EXPECT_THROW(data_register_size(BigInt(0)), std::invalid_argument);
}

TEST(DataRegister, StepsAtPowersOfTwo) {
    for (int e = 1; e < 80; ++e) {
        BigInt p = BigInt(1) << e;
        ASSERT_EQ(data_register_size(p), e + 1);
        ASSERT_EQ(data_register_size(p + 1), e + 2);
    }
}

TEST(QaeM, PaperInputs) {
    QaeSize q = qae_M(0.01, 0.01, 1.0);
    EXPECT_EQ(q.M, 16384);
    EXPECT_EQ(q.n0, 14);
    // ceil(pi * 102 / 0.01) = ceil(32044.25...)
    EXPECT_EQ(q.M_bound, 32045);
}

TEST(QaeM, Domain) {
    EXPECT_THROW(qae_M(1.0, 0.01, 1.0), std::invalid_argument);
    EXPECT_THROW(qae_M(0.01, 0.0, 1.0), std::invalid_argument);
    EXPECT_THROW(qae_M(0.01, 0.01, 1.5), std::invalid_argument);
    EXPECT_EQ(qae_M(0.1, 0.01, 1.0).n0, 7);
}

TEST(Trotter, PaperBound) {
    BigInt r = trotter_slices(2, 9, 7e6, 0.01);
    EXPECT_EQ(r, BigInt("471974122725"));
    EXPECT_LE(r, BigInt("800000000000"));
}

TEST(Trotter, SharedErrorBudget) {
    BigInt r = trotter_slices(2, 9, 7e6, 0.01 / 32767);
    EXPECT_EQ(r, BigInt("6350053118281"));
    EXPECT_NEAR(to_double(r) / 6.35e12, 1.0, 0.02);
}

TEST(Trotter, Monotone) {
    double prev_nb = 0, prev_t = 0, prev_e = 0;
    for (int i = 1; i <= 50; ++i) {
        double by_nb = to_double(trotter_slices(2, i, 1e5, 0.01));
        double by_t = to_double(trotter_slices(2, 9, 1e3 * i, 0.01));
        double by_e = to_double(trotter_slices(2, 9, 1e5, 0.5 / i));
        ASSERT_GT(by_nb, prev_nb);
        ASSERT_GT(by_t, prev_t);
        ASSERT_GT(by_e, prev_e);
        prev_nb = by_nb;
        prev_t = by_t;
        prev_e = by_e;
    }
    EXPECT_THROW(trotter_slices(0, 9, 1.0, 0.1), std::invalid_argument);
}

TEST(TimeConstant, Values) {
    EXPECT_DOUBLE_EQ(hs_time_constant(1e4, 0.01), 7e6);
    EXPECT_DOUBLE_EQ(hs_time_constant(1e4, 0.01) / 2, 3.5e6);
    EXPECT_THROW(hs_time_constant(1.0, 7.0), std::invalid_argument);
}

TEST(Crossover, HhlModel) {
    Crossover c = crossover_size(1e4, 10, 0.01, ComplexityModel::HHL);
    EXPECT_NEAR(c.N, 37892782.3, 1.0);
    EXPECT_NEAR(c.N / 4e7, 1.0, 0.25);
}

TEST(Crossover, CjsModelIsLarger) {
    Crossover c = crossover_size(1e4, 10, 0.01, ComplexityModel::CJS);
    EXPECT_NEAR(c.N / 53647757290.4, 1.0, 1e-6);
}

TEST(Crossover, DegenerateInputsGiveSmallN) {
    Crossover c = crossover_size(1, 1, 0.5, ComplexityModel::HHL);
    EXPECT_LT(c.N, 100);
}

TEST(Resolve, PaperRegisters) {
    ProblemParams p = resolve(ProblemParams{});
    EXPECT_EQ(p.n0, 14);
    EXPECT_EQ(p.n1, 24);
    EXPECT_EQ(p.n2, 30);
    EXPECT_EQ(p.n4, 65);
    EXPECT_EQ(p.M, 16384);
    EXPECT_EQ(p.r, BigInt("2500000000000"));
    EXPECT_EQ(persistent_qubits(p), 287);
}

TEST(Resolve, FormulaSlicesAtAverageTime) {
    ProblemParams in;
    in.r_override.reset();
    ProblemParams p = resolve(in);
    EXPECT_EQ(p.r, BigInt("2669868451917"));
}

TEST(Resolve, GridInput) {
    ProblemParams in;
    in.nx = 4;
    in.ny = 4;
    ProblemParams p = resolve(in);
    EXPECT_EQ(p.N, 24);
    EXPECT_EQ(p.n2, 6);
    ProblemParams half;
    half.nx = 4;
    EXPECT_THROW(resolve(half), std::invalid_argument);
}

TEST(Resolve, Validation) {
    ProblemParams p;
    p.epsilon = 1.0;
    EXPECT_THROW(resolve(p), std::invalid_argument);
    p = {};
    p.kappa = 0.5;
    EXPECT_THROW(resolve(p), std::invalid_argument);
    p = {};
    p.r_override = BigInt(-1);
    EXPECT_THROW(resolve(p), std::invalid_argument);
}

TEST(Resolve, Json) {
    nlohmann::json j = to_json(resolve(ProblemParams{}));
    EXPECT_EQ(j["n0"], 14);
    EXPECT_EQ(j["r"], "2500000000000");
    EXPECT_EQ(j["N"], "332020680");
}

}  // namespace
}  // namespace qlre
