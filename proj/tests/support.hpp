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

// Seeded random instances shared by the unit tests and the acceptance suite.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "mixschur/mixschur.hpp"

namespace mixschur::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Masses drawn log-uniformly from [lo, hi].
inline FiniteMeasureSpace random_space(Rng& rng, std::size_t n, double lo = 0.2, double hi = 2.0) {
    std::vector<double> m(n);
    for (auto& x : m) x = std::exp(uniform(rng, std::log(lo), std::log(hi)));
    return FiniteMeasureSpace::with_masses(std::move(m));
}

inline ProductSpace random_product(Rng& rng, std::size_t max1 = 3, std::size_t max2 = 3, double lo = 0.2,
                                   double hi = 2.0) {
    return ProductSpace(random_space(rng, uniform_size(rng, 1, max1), lo, hi),
                        random_space(rng, uniform_size(rng, 1, max2), lo, hi));
}

inline Kernel<double> random_nonneg_kernel(Rng& rng, const ProductSpace& X, const ProductSpace& Y,
                                           double zero_prob = 0.2) {
    Kernel<double> K(X, Y);
    for (auto& v : K.values()) v = uniform(rng, 0.0, 1.0) < zero_prob ? 0.0 : uniform(rng, 0.0, 1.0);
    return K;
}

inline Kernel<complex> random_complex_kernel(Rng& rng, const ProductSpace& X, const ProductSpace& Y,
                                             double zero_prob = 0.2) {
    Kernel<complex> K(X, Y);
    for (auto& v : K.values())
        v = uniform(rng, 0.0, 1.0) < zero_prob ? complex{} : complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
    return K;
}

inline GridFunction<double> random_nonneg_function(Rng& rng, const ProductSpace& X, double zero_prob = 0.2,
                                                   double scale = 1.0) {
    GridFunction<double> f(X);
    for (auto& v : f.values()) v = uniform(rng, 0.0, 1.0) < zero_prob ? 0.0 : scale * uniform(rng, 0.0, 1.0);
    return f;
}

inline GridFunction<complex> random_complex_function(Rng& rng, const ProductSpace& X, double zero_prob = 0.2) {
    GridFunction<complex> f(X);
    for (auto& v : f.values())
        v = uniform(rng, 0.0, 1.0) < zero_prob ? complex{} : complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
    return f;
}

inline WeightFunction random_weight(Rng& rng, const ProductSpace& X, double lo = 0.5, double hi = 2.0) {
    std::vector<double> v(X.size());
    for (auto& x : v) x = uniform(rng, lo, hi);
    return WeightFunction(X, std::move(v));
}

inline WeightGrid random_weight_grid(Rng& rng, const ProductSpace& X, const ProductSpace& Y, double lo = 0.5,
                                     double hi = 2.0) {
    Kernel<double> m(X, Y);
    for (auto& v : m.values()) v = uniform(rng, lo, hi);
    return WeightGrid(std::move(m));
}

/// A few random rectangles, topped up with random rectangles through
/// uncovered points until the space is covered.
inline RectCovering random_covering(Rng& rng, const ProductSpace& X, std::size_t initial = 2) {
    auto random_subset_with = [&](std::size_t n, std::size_t must) {
        std::vector<std::size_t> s{must};
        for (std::size_t i = 0; i < n; ++i)
            if (i != must && uniform(rng, 0.0, 1.0) < 0.4) s.push_back(i);
        return s;
    };
    std::vector<Patch> patches;
    for (std::size_t k = 0; k < initial; ++k)
        patches.push_back({random_subset_with(X.n1(), uniform_size(rng, 0, X.n1() - 1)),
                           random_subset_with(X.n2(), uniform_size(rng, 0, X.n2() - 1))});
    for (;;) {
        RectCovering cov(X, patches);
        std::size_t hole = X.size();
        for (std::size_t x = 0; x < X.size() && hole == X.size(); ++x) {
            bool in = false;
            for (std::size_t j = 0; j < cov.size(); ++j) in = in || cov.contains(j, x);
            if (!in) hole = x;
        }
        if (hole == X.size()) return cov;
        const auto [i1, i2] = X.split(hole);
        patches.push_back({random_subset_with(X.n1(), i1), random_subset_with(X.n2(), i2)});
    }
}

inline std::vector<Exponent> exponent_grid() {
    return {Exponent(1.0), Exponent(1.5), Exponent(2.0), Exponent(3.0), Exponent::infinity()};
}

inline double rel_diff(double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

}  // namespace mixschur::testing
