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
#include <optional>

#include <nlohmann/json.hpp>

#include "qlre/resources.hpp"

namespace qlre {

/// Problem inputs plus the register sizes and slice count derived from them.
struct ProblemParams {
    std::optional<std::int64_t> nx;
    std::optional<std::int64_t> ny;
    BigInt N = 332'020'680;
    double kappa = 1e4;
    double d = 7;
    double epsilon = 0.01;
    double p_err = 0.01;
    double alpha = 1.0;
    std::int64_t Nb = 9;
    std::int64_t k = 2;
    /// Dimensionless ||A|| t. Unset means t0 / 2.
    std::optional<double> normA_t;
    /// Trotter slices. Unset means the slice formula.
    std::optional<BigInt> r_override = BigInt(2'500'000'000'000);
    std::int64_t n1 = 24;
    std::int64_t n4 = 65;

    // Filled by resolve().
    std::int64_t n0 = 0;
    std::int64_t n2 = 0;
    BigInt M;
    BigInt r;

    /// Throws std::invalid_argument on out-of-domain inputs.
    void validate() const;
};

BigInt fem_edges(std::int64_t nx, std::int64_t ny);
/// ceil(log2(2N)).
std::int64_t data_register_size(const BigInt &N);

struct QaeSize {
    BigInt M_bound;
    BigInt M;
    std::int64_t n0 = 0;
};

QaeSize qae_M(double epsilon, double p_err, double alpha);

BigInt trotter_slices(std::int64_t k, std::int64_t Nb, double normA_t, double epsilon);
double hs_time_constant(double kappa, double epsilon);

enum class ComplexityModel { HHL, CJS };

struct Crossover {
    double N = 0;
    int iterations = 0;
};

/// Fixed point of N d kappa log10(1/eps) = Q(N). Throws std::runtime_error
/// when the iteration does not converge.
Crossover crossover_size(double kappa, double d, double epsilon, ComplexityModel model);

/// Validates and fills N (from nx, ny), n0, M, n2 and r.
ProblemParams resolve(ProblemParams p);

/// Sum of the persistent logical registers R0..R12.
std::int64_t persistent_qubits(const ProblemParams &p);

nlohmann::json to_json(const ProblemParams &p);

}  // namespace qlre
