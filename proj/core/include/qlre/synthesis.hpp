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
#include <vector>

#include "qlre/resources.hpp"

namespace qlre {

enum class RotationMode { FixedBudget, FowlerFit };

/// Cost model for one arbitrary single-qubit rotation.
struct RotationPolicy {
    RotationMode mode = RotationMode::FixedBudget;
    std::int64_t fixed_total = 100;
    std::int64_t mix_t = 40;
    std::int64_t mix_h = 40;
    std::int64_t mix_s = 20;
    double fit_a = 0.292;
    double fit_b = 0.0511;
    double target_distance = 7.5e-4;

    /// Throws std::invalid_argument when the mix does not sum to the total or
    /// the target distance is outside (0, fit_a].
    void validate() const;

    static RotationPolicy fixed_budget();
    static RotationPolicy fowler_fit(double target_distance);

    bool operator==(const RotationPolicy &) const = default;
};

/// Average sequence length l = log10(delta / a) / (-b). Throws std::domain_error
/// unless 0 < delta <= a.
double fowler_length(double delta, double fit_a = 0.292, double fit_b = 0.0511);

ResourceVector rotation_cost(const RotationPolicy &policy);

double per_rotation_budget(double epsilon, const BigInt &n_rotations);

/// A serial single-qubit gate sequence whose census equals rotation_cost(policy).
std::vector<GateKind> rotation_sequence(const RotationPolicy &policy);

}  // namespace qlre
