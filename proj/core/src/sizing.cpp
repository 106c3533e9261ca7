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

#include "qlre/sizing.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace qlre {

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

BigInt ceil_to_int(const Float &x) {
    return static_cast<BigInt>(boost::multiprecision::ceil(x));
}

std::int64_t ceil_log2(const BigInt &x) {
    // Smallest e with 2^e >= x.
    std::int64_t e = 0;
    BigInt p = 1;
    while (p < x) {
        p <<= 1;
        ++e;
    }
    return e;
}

}  // namespace

void ProblemParams::validate() const {
    if (N < 1) throw std::invalid_argument("problem.N must be >= 1");
    if (!(kappa >= 1)) throw std::invalid_argument("problem.kappa must be >= 1");
    if (!(d >= 1)) throw std::invalid_argument("problem.d must be >= 1");
    if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("problem.epsilon must lie in (0, 1)");
    if (!(p_err > 0 && p_err < 1)) throw std::invalid_argument("problem.p_err must lie in (0, 1)");
    if (!(alpha > 0 && alpha <= 1)) throw std::invalid_argument("problem.alpha must lie in (0, 1]");
    if (Nb < 1) throw std::invalid_argument("problem.Nb must be >= 1");
    if (k < 1) throw std::invalid_argument("suzuki.k must be >= 1");
    if (n1 < 1 || n4 < 2) throw std::invalid_argument("registers.n1 must be >= 1 and registers.n4 >= 2");
    if (normA_t && !(*normA_t > 0)) throw std::invalid_argument("trotter.normA_t must be positive");
    if (r_override && *r_override < 0) throw std::invalid_argument("trotter.r_override must be >= 0");
}

BigInt fem_edges(std::int64_t nx, std::int64_t ny) {
    if (nx < 1 || ny < 1) {
        throw std::invalid_argument("fem_edges: nx and ny must be >= 1");
    }
    return BigInt(nx) * (ny - 1) + BigInt(ny) * (nx - 1);
}

std::int64_t data_register_size(const BigInt &N) {
    if (N < 1) {
        throw std::invalid_argument("data_register_size: N must be >= 1");
    }
    return ceil_log2(2 * N);
}

QaeSize qae_M(double epsilon, double p_err, double alpha) {
    if (!(epsilon > 0 && epsilon < 1) || !(p_err > 0 && p_err < 1) || !(alpha > 0 && alpha <= 1)) {
        throw std::invalid_argument("qae_M: parameters out of range");
    }
    QaeSize q;
    Float pi = boost::math::constants::pi<Float>();
    Float eps(epsilon);
    q.M_bound = ceil_to_int(pi / (eps * boost::multiprecision::sqrt(Float(alpha))) * (2 + 1 / Float(p_err)));
    BigInt inv_sq = ceil_to_int(1 / (eps * eps));
    q.n0 = ceil_log2(inv_sq);
    q.M = BigInt(1) << q.n0;
    return q;
}

BigInt trotter_slices(std::int64_t k, std::int64_t Nb, double normA_t, double epsilon) {
    if (k < 1 || Nb < 1 || !(normA_t > 0) || !(epsilon > 0)) {
        throw std::invalid_argument("trotter_slices: all parameters must be positive");
    }
    Float kk(k);
    Float base = boost::multiprecision::pow(Float(5), kk - Float(0.5));
    Float scale = boost::multiprecision::pow(2 * Float(Nb) * Float(normA_t), 1 + 1 / (2 * kk));
    Float err = boost::multiprecision::pow(Float(epsilon), 1 / (2 * kk));
    return ceil_to_int(base * scale / err);
}

double hs_time_constant(double kappa, double epsilon) {
    if (!(kappa > 0) || !(epsilon > 0) || !(epsilon < 1)) {
        throw std::invalid_argument("hs_time_constant: need kappa > 0 and 0 < epsilon < 1");
    }
    return 7.0 * kappa / epsilon;
}

Crossover crossover_size(double kappa, double d, double epsilon, ComplexityModel model) {
    if (!(kappa >= 1) || !(d >= 1) || !(epsilon > 0 && epsilon < 1)) {
        throw std::invalid_argument("crossover_size: parameters out of range");
    }
    const double classical_per_n = d * kappa * std::log10(1.0 / epsilon);
    auto quantum = [&](double n) {
        return model == ComplexityModel::HHL ? kappa * kappa * d * d * std::log10(n) / epsilon
                                             : kappa * std::pow(d, 7) * std::log10(n) / (epsilon * epsilon);
    };
    double n = 10.0;
    for (int i = 1; i <= 1'000'000; ++i) {
        double next = quantum(n) / classical_per_n;
        if (!(next > 1.0) || !std::isfinite(next)) {
            throw std::runtime_error("crossover_size: iteration left the domain");
        }
        if (std::abs(next - n) <= 1e-6 * std::abs(next)) {
            return {next, i};
        }
        n = next;
    }
    throw std::runtime_error("crossover_size: no convergence");
}

ProblemParams resolve(ProblemParams p) {
    if (p.nx || p.ny) {
        if (!p.nx || !p.ny) {
            throw std::invalid_argument("problem.nx and problem.ny must be given together");
        }
        p.N = fem_edges(*p.nx, *p.ny);
    }
    p.validate();
    QaeSize q = qae_M(p.epsilon, p.p_err, p.alpha);
    p.n0 = q.n0;
    p.M = q.M;
    p.n2 = data_register_size(p.N);
    if (p.r_override) {
        p.r = *p.r_override;
    } else {
        double t = p.normA_t ? *p.normA_t : hs_time_constant(p.kappa, p.epsilon) / 2;
        // The error budget is shared by the 2^(n0+1) - 1 controlled evolutions.
        double eps = p.epsilon / (std::ldexp(1.0, static_cast<int>(p.n0) + 1) - 1);
        p.r = trotter_slices(p.k, p.Nb, t, eps);
    }
    return p;
}

std::int64_t persistent_qubits(const ProblemParams &p) {
    // R0: n0, R1: n1, R2/R3: n2, R4/R5: n4, R6..R10: 1 each, R11: n1, R12: n2.
    return p.n0 + p.n1 + 2 * p.n2 + 2 * p.n4 + 5 + p.n1 + p.n2;
}

nlohmann::json to_json(const ProblemParams &p) {
    nlohmann::json j;
    if (p.nx) j["nx"] = *p.nx;
    if (p.ny) j["ny"] = *p.ny;
    j["N"] = p.N.str();
    j["kappa"] = p.kappa;
    j["d"] = p.d;
    j["epsilon"] = p.epsilon;
    j["p_err"] = p.p_err;
    j["alpha"] = p.alpha;
    j["Nb"] = p.Nb;
    j["k"] = p.k;
    if (p.normA_t) j["normA_t"] = *p.normA_t;
    j["r_override"] = p.r_override ? nlohmann::json(p.r_override->str()) : nlohmann::json("auto");
    j["n0"] = p.n0;
    j["n1"] = p.n1;
    j["n2"] = p.n2;
    j["n4"] = p.n4;
    j["M"] = p.M.str();
    j["r"] = p.r.str();
    return j;
}

}  // namespace qlre
