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

#include "qlre/synthesis.hpp"

#include <cmath>
#include <stdexcept>

namespace qlre {

namespace {

struct Mix {
    std::int64_t t = 0;
    std::int64_t h = 0;
    std::int64_t s = 0;
};

std::int64_t round_half_up(double x) {
    return static_cast<std::int64_t>(std::floor(x + 0.5));
}

Mix mix_for(const RotationPolicy &policy) {
    policy.validate();
    if (policy.mode == RotationMode::FixedBudget) {
        return {policy.mix_t, policy.mix_h, policy.mix_s};
    }
    double l = std::ceil(fowler_length(policy.target_distance, policy.fit_a, policy.fit_b));
    // G-gate length to elementary-gate length.
    std::int64_t total = round_half_up(l * 100.0 / 77.0);
    Mix m;
    m.t = round_half_up(0.4 * static_cast<double>(total));
    m.h = round_half_up(0.4 * static_cast<double>(total));
    m.s = total - m.t - m.h;
    return m;
}

}  // namespace

void RotationPolicy::validate() const {
    if (mode == RotationMode::FixedBudget) {
        if (mix_t < 0 || mix_h < 0 || mix_s < 0) {
            throw std::invalid_argument("rotation mix must be non-negative");
        }
        if (mix_t + mix_h + mix_s != fixed_total) {
            throw std::invalid_argument("rotation mix does not sum to rotation.total");
        }
    } else {
        if (!(target_distance > 0.0) || target_distance > fit_a) {
            throw std::invalid_argument("rotation.distance must lie in (0, fit_a]");
        }
    }
}

RotationPolicy RotationPolicy::fixed_budget() {
    return RotationPolicy{};
}

RotationPolicy RotationPolicy::fowler_fit(double target_distance) {
    RotationPolicy p;
    p.mode = RotationMode::FowlerFit;
    p.target_distance = target_distance;
    return p;
}

double fowler_length(double delta, double fit_a, double fit_b) {
    if (!(delta > 0.0) || delta > fit_a) {
        throw std::domain_error("fowler_length: distance outside (0, fit_a]");
    }
    return std::log10(delta / fit_a) / (-fit_b);
}

ResourceVector rotation_cost(const RotationPolicy &policy) {
    Mix m = mix_for(policy);
    ResourceVector v;
    v.count(GateKind::T) = m.t;
    v.count(GateKind::H) = m.h;
    v.count(GateKind::S) = m.s;
    v.depth = m.t + m.h + m.s;
    v.t_depth = m.t;
    v.width = v.depth == 0 ? 0 : 1;
    return v;
}

double per_rotation_budget(double epsilon, const BigInt &n_rotations) {
    if (!(epsilon > 0.0) || n_rotations < 1) {
        throw std::invalid_argument("per_rotation_budget: need epsilon > 0 and n_rotations >= 1");
    }
    return epsilon / to_double(n_rotations);
}

std::vector<GateKind> rotation_sequence(const RotationPolicy &policy) {
    Mix m = mix_for(policy);
    std::vector<GateKind> out;
    out.reserve(static_cast<std::size_t>(m.t + m.h + m.s));
    static constexpr GateKind kPattern[] = {GateKind::T, GateKind::H, GateKind::T, GateKind::H, GateKind::S};
    while (m.t + m.h + m.s > 0) {
        for (GateKind k : kPattern) {
            std::int64_t &left = k == GateKind::T ? m.t : k == GateKind::H ? m.h : m.s;
            if (left > 0) {
                out.push_back(k);
                --left;
            }
        }
    }
    return out;
}

}  // namespace qlre
