// Copyright 2026 The mixschur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Brute-force reference implementations. They share no code paths with the
// closed forms they check beyond apply_kernel and mixed_norm.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "kernel.hpp"
#include "mixed_norm.hpp"
#include "schur.hpp"
#include "sum_norm.hpp"

namespace mixschur {

/// min over lambda = 0, step, 2 step, ..., >= max f of ||min(f,lambda)||_inf + ||(f-lambda)_+||_1.
inline double brute_rho(const FactorFunction& f, double grid_step) {
    if (!(grid_step > 0.0)) throw input_error("grid step must be positive");
    const double top = *std::max_element(f.values.begin(), f.values.end());
    if (top == kInfinity) return kInfinity;
    const auto steps = static_cast<std::size_t>(std::ceil(top / grid_step));
    double best = kInfinity;
    for (std::size_t s = 0; s <= steps; ++s) {
        const double lambda = std::min(static_cast<double>(s) * grid_step, top);
        double g = 0.0, h = 0.0;
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            g = std::max(g, std::min(f.values[i], lambda));
            h += f.space.mass(i) * std::max(f.values[i] - lambda, 0.0);
        }
        best = std::min(best, g + h);
    }
    return best;
}

/// Operator norm of Phi_K on L^{p,q}, p, q in {1, inf}, for nonnegative K, by
/// evaluating Phi_K on every extreme point of the nonnegative unit ball.
template <Scalar T>
double brute_corner_opnorm(const Kernel<T>& Kc, Exponent p, Exponent q) {
    if (!(p.is_one() || p.is_infinite()) || !(q.is_one() || q.is_infinite()))
        throw input_error("brute_corner_opnorm needs p, q in {1, inf}");
    if (!Kc.is_nonnegative_real()) throw input_error("brute_corner_opnorm needs a nonnegative real kernel");
    const Kernel<double> K = Kc.abs();
    const auto& Y = K.domain();
    const auto& nu1 = Y.factor1().masses();
    const auto& nu2 = Y.factor2().masses();
    double best = 0.0;
    auto eval = [&](const GridFunction<double>& f) { best = std::max(best, mixed_norm(apply_kernel(K, f), p, q)); };

    // Inner profile per slice: a single atom at height 1/nu1 (inner 1) or the constant 1 (inner inf).
    // Outer: every slice active (outer inf), or one slice scaled by 1/nu2 (outer 1).
    const std::size_t inner_choices = p.is_one() ? Y.n1() : 1;
    auto fill_slice = [&](GridFunction<double>& f, std::size_t y2, std::size_t choice, double scale) {
        if (p.is_one()) {
            f(choice, y2) = scale / nu1[choice];
        } else {
            for (std::size_t y1 = 0; y1 < Y.n1(); ++y1) f(y1, y2) = scale;
        }
    };

    if (q.is_one()) {
        for (std::size_t y2 = 0; y2 < Y.n2(); ++y2)
            for (std::size_t c = 0; c < inner_choices; ++c) {
                GridFunction<double> f(Y);
                fill_slice(f, y2, c, 1.0 / nu2[y2]);
                eval(f);
            }
        return best;
    }

    double count = 1.0;
    for (std::size_t y2 = 0; y2 < Y.n2(); ++y2) count *= static_cast<double>(inner_choices);
    if (count > static_cast<double>(kVertexCap)) throw input_error("vertex enumeration exceeds the 10^6 cap");
    std::vector<std::size_t> choice(Y.n2(), 0);
    for (;;) {
        GridFunction<double> f(Y);
        for (std::size_t y2 = 0; y2 < Y.n2(); ++y2) fill_slice(f, y2, choice[y2], 1.0);
        eval(f);
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == inner_choices) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    return best;
}

/// An upper bound for the L^1 + L^inf + L^{1,inf} + L^{inf,1} sum norm of F:
/// the least norm sum over split_four, the four single-part decompositions,
/// and `trials` seeded random point-wise and fractional splits.
template <Scalar T>
double brute_sum_norm_upper(const GridFunction<T>& F, std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw input_error("brute_sum_norm_upper needs at least one trial");
    double best = split_four(F).norm_sum();
    const auto& sp = F.space();
    auto norm_sum = [](const std::vector<GridFunction<T>>& parts) {
        return mixed_norm(parts[0], 1.0, 1.0) + mixed_norm(parts[1], Exponent::infinity(), Exponent::infinity()) +
               mixed_norm(parts[2], 1.0, Exponent::infinity()) + mixed_norm(parts[3], Exponent::infinity(), 1.0);
    };
    for (std::size_t k = 0; k < 4; ++k) {
        std::vector<GridFunction<T>> parts(4, GridFunction<T>(sp));
        parts[k] = F;
        best = std::min(best, norm_sum(parts));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<GridFunction<T>> parts(4, GridFunction<T>(sp));
        const bool fractional = t % 2 == 1;
        for (std::size_t x = 0; x < sp.size(); ++x) {
            if (fractional) {
                double w[4], s = 0.0;
                for (double& a : w) s += (a = unit(rng));
                for (std::size_t k = 0; k < 4; ++k) parts[k][x] = F[x] * (w[k] / s);
            } else {
                parts[static_cast<std::size_t>(pick(rng))][x] = F[x];
            }
        }
        best = std::min(best, norm_sum(parts));
    }
    return best;
}

}  // namespace mixschur
