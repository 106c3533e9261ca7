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

// Golden rows for the composite-gate tables, written out field by field.

#include <gtest/gtest.h>

#include "qlre/templates.hpp"

namespace qlre {
namespace {

struct Row {
    long long x = 0, z = 0, h = 0, s = 0, t = 0, cnot = 0;
    long long width = 0, depth = 0, t_depth = 0, ancilla = 0, meas = 0;
};

void expect_row(const ResourceVector &v, const Row &r, const std::string &label) {
    SCOPED_TRACE(label);
    EXPECT_EQ(v.count(GateKind::X), r.x);
    EXPECT_EQ(v.count(GateKind::Y), 0);
    EXPECT_EQ(v.count(GateKind::Z), r.z);
    EXPECT_EQ(v.count(GateKind::H), r.h);
    EXPECT_EQ(v.s_count(), r.s);
    EXPECT_EQ(v.t_count(), r.t);
    EXPECT_EQ(v.count(GateKind::CNOT), r.cnot);
    EXPECT_EQ(v.width, r.width);
    EXPECT_EQ(v.depth, r.depth);
    EXPECT_EQ(v.t_depth, r.t_depth);
    EXPECT_EQ(v.ancilla_max, r.ancilla);
    EXPECT_EQ(v.measurements, r.meas);
    EXPECT_EQ(v.ancilla_cycles, v.measurements);
}

TEST(Toffoli, Vector) {
    expect_row(toffoli(), {.h = 2, .s = 1, .t = 7, .cnot = 6, .width = 3, .depth = 12, .t_depth = 6}, "toffoli");
    EXPECT_EQ(toffoli().total_gates(), 16);
}

TEST(Mcnot, Degenerate) {
    expect_row(mcnot(1), {.cnot = 1, .width = 2, .depth = 1}, "n=1");
    EXPECT_EQ(mcnot(2), toffoli());
    EXPECT_THROW(mcnot(0), std::invalid_argument);
}

TEST(Mcnot, ThreeControls) {
    expect_row(mcnot(3), {.h = 6, .s = 3, .t = 21, .cnot = 18, .width = 4, .depth = 36, .t_depth = 18, .ancilla = 1,
                          .meas = 1},
               "n=3");
}

TEST(Mcnot, TableFormulas) {
    for (long long n = 3; n <= 64; ++n) {
        const long long m = 2 * n - 3;
        expect_row(mcnot(static_cast<int>(n)),
                   {.h = 2 * m, .s = m, .t = 7 * m, .cnot = 6 * m, .width = n + 1, .depth = 12 * m, .t_depth = 6 * m,
                    .ancilla = n - 2, .meas = n - 2},
                   "mcnot n=" + std::to_string(n));
    }
}

TEST(Qft, SingleQubit) {
    expect_row(qft(1), {.h = 1, .width = 1, .depth = 1}, "b=1");
    EXPECT_THROW(qft(0), std::invalid_argument);
}

TEST(Qft, TwoQubits) {
    ResourceVector v = qft(2);
    // 3 rotations at 40 T / 40 H / 20 S each.
    EXPECT_EQ(v.count(GateKind::H), 2 + 3 * 40);
    EXPECT_EQ(v.t_count(), 3 * 40);
    EXPECT_EQ(v.count(GateKind::CNOT), 2);
}

TEST(Qft, TableFormulas) {
    for (long long b = 2; b <= 30; ++b) {
        long long rotations = 0;
        long long rot_depth = 0;
        for (long long k = 3; k <= b + 1; ++k) rotations += 3 * (b - k + 2);
        for (long long j = 3; j <= b + 1; ++j) {
            for (long long k = 3; k <= j; ++k) rot_depth += 100;
        }
        ASSERT_EQ(rotations, 3 * b * (b - 1) / 2);
        expect_row(qft(static_cast<int>(b)),
                   {.h = b + 40 * rotations, .s = 20 * rotations, .t = 40 * rotations, .cnot = b * (b - 1),
                    .width = b, .depth = b * b + 2 * rot_depth, .t_depth = 2 * rot_depth * 40 / 100},
                   "qft b=" + std::to_string(b));
    }
}

TEST(Cphase, TableFormulas) {
    for (long long n = 2; n <= 65; ++n) {
        for (long long f : {0, 1}) {
            expect_row(cphase(static_cast<int>(n), static_cast<int>(f)),
                       {.x = 4 + 2 * f, .h = 80 * (n - 1), .s = 40 * (n - 1), .t = 80 * (n - 1), .cnot = 2 * n,
                        .width = n + 1, .depth = 202 * (n - 1) + 6, .t_depth = 80 * (n - 1), .ancilla = 1, .meas = 1},
                       "cphase n=" + std::to_string(n) + " f=" + std::to_string(f));
        }
    }
}

TEST(Cphase, Examples) {
    ResourceVector v = cphase(65, 0);
    EXPECT_EQ(v.count(GateKind::H), 5120);
    EXPECT_EQ(v.s_count(), 2560);
    EXPECT_EQ(v.t_count(), 5120);
    EXPECT_EQ(v.count(GateKind::X), 4);
    EXPECT_EQ(v.count(GateKind::CNOT), 130);
    EXPECT_EQ(v.depth, 12934);
    EXPECT_EQ(cphase(2, 1).count(GateKind::X), 6);
    EXPECT_THROW(cphase(1, 0), std::invalid_argument);
    EXPECT_THROW(cphase(4, 2), std::invalid_argument);
}

TEST(Ccphase, TableFormulas) {
    for (long long n = 2; n <= 65; ++n) {
        for (long long f : {0, 1}) {
            expect_row(ccphase(static_cast<int>(n), static_cast<int>(f)),
                       {.x = 4 + 2 * f, .h = 164 * (n - 1), .s = 82 * (n - 1), .t = 174 * (n - 1),
                        .cnot = 16 * (n - 1) + 2, .width = n + 2, .depth = 436 * (n - 1) + 6,
                        .t_depth = 174 * (n - 1), .ancilla = 1, .meas = 1},
                       "ccphase n=" + std::to_string(n) + " f=" + std::to_string(f));
        }
    }
}

TEST(Ccphase, Examples) {
    EXPECT_EQ(ccphase(65, 0).t_count(), 11136);
    EXPECT_EQ(ccphase(65, 0).depth, 27910);
    EXPECT_EQ(ccphase(2, 0).count(GateKind::H), 164);
    EXPECT_EQ(ccphase(2, 0).count(GateKind::CNOT), 18);
}

TEST(Croty, TableFormulas) {
    for (long long n = 2; n <= 65; ++n) {
        for (long long f : {0, 1}) {
            expect_row(croty(static_cast<int>(n), static_cast<int>(f)),
                       {.x = 2 * f, .h = 84 * (n - 1), .s = 42 * (n - 1), .t = 80 * (n - 1), .cnot = 2 * n,
                        .width = n + 1, .depth = 202 * (n - 1) + 2 * f, .t_depth = 80 * (n - 1), .ancilla = 0,
                        .meas = 1},
                       "croty n=" + std::to_string(n) + " f=" + std::to_string(f));
        }
    }
}

TEST(Croty, Examples) {
    ResourceVector v = croty(24, 0);
    EXPECT_EQ(v.count(GateKind::H), 1932);
    EXPECT_EQ(v.t_count(), 1840);
    EXPECT_EQ(v.count(GateKind::CNOT), 48);
    ResourceVector w = croty(24, 1);
    EXPECT_EQ(w.count(GateKind::X) - v.count(GateKind::X), 2);
    EXPECT_EQ(w.depth - v.depth, 2);
}

TEST(Templates, AffineAndMonotone) {
    for (int n = 3; n < 64; ++n) {
        for (const auto &[a, b, c] : {std::tuple{mcnot(n), mcnot(n + 1), mcnot(n + 2)},
                                      std::tuple{cphase(n, 0), cphase(n + 1, 0), cphase(n + 2, 0)},
                                      std::tuple{ccphase(n, 1), ccphase(n + 1, 1), ccphase(n + 2, 1)},
                                      std::tuple{croty(n, 0), croty(n + 1, 0), croty(n + 2, 0)}}) {
            for (std::string_view f : kFieldNames) {
                BigInt d1 = get_field(b, f) - get_field(a, f);
                BigInt d2 = get_field(c, f) - get_field(b, f);
                ASSERT_GE(d1, 0) << f << " n=" << n;
                ASSERT_EQ(d1, d2) << f << " n=" << n;
            }
        }
    }
}

TEST(Templates, PolicyRescalesRotations) {
    RotationPolicy p = RotationPolicy::fowler_fit(7.5e-4);
    ResourceVector a = cphase(10, 0), b = cphase(10, 0, p);
    EXPECT_EQ(a.count(GateKind::CNOT), b.count(GateKind::CNOT));
    EXPECT_EQ(b.t_count(), 2 * 9 * 26);
    EXPECT_EQ(b.depth, 2 * 9 * 67 + 6);
}

TEST(SmallGates, ClosedForms) {
    expect_row(small_gate(SmallGate::CZ), {.h = 2, .cnot = 1, .width = 2, .depth = 3}, "cz");
    ResourceVector crz = small_gate(SmallGate::CRz);
    EXPECT_EQ(crz.count(GateKind::CNOT), 2);
    EXPECT_EQ(crz.t_count(), 80);
    EXPECT_EQ(crz.depth, 202);
    ResourceVector w = small_gate(SmallGate::W);
    EXPECT_EQ(w.count(GateKind::CNOT), 3);
    EXPECT_EQ(w.total_gates(), small_gate(SmallGate::CH).total_gates() + 2);
    EXPECT_EQ(w.total_gates(), 21);
    EXPECT_EQ(small_gate(SmallGate::CCRz).t_count(), 160);
}

TEST(SmallGates, Names) {
    EXPECT_EQ(parse_small_gate("w"), SmallGate::W);
    EXPECT_EQ(parse_small_gate("CCRZ"), SmallGate::CCRz);
    EXPECT_FALSE(parse_small_gate("ccz"));
}

TEST(SmallGates, RyQuarterSequence) {
    ExplicitCircuit c(1);
    append_ry_quarter(c, true, 0);
    const std::vector<GateKind> want = {GateKind::S, GateKind::H, GateKind::T, GateKind::S,
                                        GateKind::H, GateKind::X, GateKind::Z, GateKind::S};
    ASSERT_EQ(c.ops.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(c.ops[i].kind, want[i]);
}

TEST(Expansion, ToffoliCensus) {
    for (ToffoliVariant v : {ToffoliVariant::Compute, ToffoliVariant::Middle, ToffoliVariant::Uncompute}) {
        ResourceVector c = census(expand_toffoli(v));
        EXPECT_EQ(c.total_gates(), 16);
        EXPECT_EQ(c.depth, 12);
        EXPECT_EQ(c.t_depth, 6);
    }
}

TEST(Expansion, DepthNeverExceedsGateCount) {
    for (int n = 1; n <= 8; ++n) {
        ResourceVector c = census(expand_mcnot(n));
        EXPECT_LE(c.depth, c.total_gates());
    }
    for (int b = 1; b <= 6; ++b) {
        ResourceVector c = census(expand_qft(b));
        EXPECT_LE(c.depth, c.total_gates());
    }
}

}  // namespace
}  // namespace qlre
