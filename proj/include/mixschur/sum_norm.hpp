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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "measure.hpp"
#include "mixed_norm.hpp"

namespace mixschur {

/// A nonnegative, possibly infinite, function on a single factor space.
struct FactorFunction {
    FiniteMeasureSpace space;
    std::vector<double> values;

    FactorFunction(FiniteMeasureSpace s, std::vector<double> v) : space(std::move(s)), values(std::move(v)) {
        if (values.size() != space.size()) throw input_error("factor function shape mismatch");
        for (double x : values)
            if (!(x >= 0.0)) throw input_error("factor function values must be nonnegative");
    }
};

/// Psi_f(lambda) = lambda + || 1_{f > lambda} (f - lambda) ||_{L^1}.
inline double rho_objective(const FactorFunction& f, double lambda) {
    std::vector<double> t(f.values.size(), 0.0);
    for (std::size_t i = 0; i < t.size(); ++i)
        if (f.values[i] > lambda) t[i] = f.space.mass(i) * (f.values[i] - lambda);
    return lambda + detail::pairwise_sum(t);
}

/// The L^1 + L^inf function norm
///   rho(f) = min_lambda [ lambda + ||(f - lambda)_+||_1 ].
/// Psi_f is piecewise linear with slope 1 - mu({f > lambda}) and kinks only
/// at values of f, so minimizing over {0} and the distinct values is exact.
inline double rho(const FactorFunction& f) {
    for (double v : f.values)
        if (v == kInfinity) return kInfinity;
    std::vector<std::size_t> order(f.values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return f.values[a] < f.values[b]; });

    // Suffix sums over points strictly above the current candidate.
    const std::size_t n = order.size();
    std::vector<double> tail_mass(n + 1, 0.0), tail_int(n + 1, 0.0);
    for (std::size_t k = n; k-- > 0;) {
        const std::size_t i = order[k];
        tail_mass[k] = tail_mass[k + 1] + f.space.mass(i);
        tail_int[k] = tail_int[k + 1] + f.space.mass(i) * f.values[i];
    }
    double best = tail_int[0];  // lambda = 0
    std::size_t k = 0;
    while (k < n) {
        const double lambda = f.values[order[k]];
        std::size_t j = k;
        while (j < n && f.values[order[j]] == lambda) ++j;
        const double value = lambda + std::max(0.0, tail_int[j] - lambda * tail_mass[j]);
        best = std::min(best, value);
        k = j;
    }
    return best;
}

/// F = bounded + integrable with ||bounded||_inf <= 2 rho(F) and
/// ||integrable||_1 <= 2 rho(F); the cut is at the level 2 rho(F).
inline std::pair<FactorFunction, FactorFunction> rho_split(const FactorFunction& F) {
    const double alpha = rho(F);
    std::vector<double> bounded(F.values.size(), 0.0), integrable(F.values.size(), 0.0);
    for (std::size_t i = 0; i < F.values.size(); ++i)
        (F.values[i] > 2.0 * alpha ? integrable : bounded)[i] = F.values[i];
    return {FactorFunction(F.space, std::move(bounded)), FactorFunction(F.space, std::move(integrable))};
}

/// G(x2) = rho over factor 1 of |F(., x2)|.
template <Scalar T>
std::vector<double> rho_profile(const GridFunction<T>& F) {
    const auto& sp = F.space();
    std::vector<double> G(sp.n2());
    for (std::size_t i2 = 0; i2 < sp.n2(); ++i2) {
        std::vector<double> col(sp.n1());
        for (std::size_t i1 = 0; i1 < sp.n1(); ++i1) col[i1] = std::abs(F(i1, i2));
        G[i2] = rho(FactorFunction(sp.factor1(), std::move(col)));
    }
    return G;
}

/// rho applied over factor 2 to the profile of inner rho-norms over factor 1.
inline double rho_tensor(const GridFunction<double>& F) {
    for (double v : F.values())
        if (!(v >= 0.0)) throw input_error("rho_tensor needs a nonnegative function");
    return rho(FactorFunction(F.space().factor2(), rho_profile(F)));
}

template <Scalar T>
double rho_tensor_abs(const GridFunction<T>& F) {
    return rho(FactorFunction(F.space().factor2(), rho_profile(F)));
}

/// ||F||_G = max of the L^1, L^inf, L^{1,inf} and L^{inf,1} norms of (w F).
template <Scalar T>
double intersection_norm(const GridFunction<T>& F, const std::optional<WeightFunction>& w = std::nullopt) {
    const auto c = w ? corner_norms(F.weighted(*w)) : corner_norms(F);
    return std::max({c.l1, c.linf, c.l1inf, c.linf1});
}

/// F = f1 + f2 + f3 + f4 with f1 in L^1, f2 in L^inf, f3 in L^{1,inf}, f4 in L^{inf,1}.
template <Scalar T>
struct FourSplit {
    GridFunction<T> f1, f2, f3, f4;

    CornerNorms norms() const {
        return {mixed_norm(f1, 1.0, 1.0), mixed_norm(f2, Exponent::infinity(), Exponent::infinity()),
                mixed_norm(f3, 1.0, Exponent::infinity()), mixed_norm(f4, Exponent::infinity(), 1.0)};
    }
    double norm_sum() const {
        const auto n = norms();
        return n.l1 + n.linf + n.l1inf + n.linf1;
    }
    GridFunction<T> sum() const { return f1 + f2 + f3 + f4; }
};

/// Constructive decomposition with each part bounded by 4 rho_tensor(|F|):
/// A = {x2 : G(x2) > 2 alpha}, B = {(x1,x2) : |F| > 2 G(x2)}, and
/// f1 = F 1_A 1_B, f2 = F 1_Ac 1_Bc, f3 = F 1_Ac 1_B, f4 = F 1_A 1_Bc.
template <Scalar T>
FourSplit<T> split_four(const GridFunction<T>& F) {
    const auto& sp = F.space();
    const auto G = rho_profile(F);
    const double alpha = rho(FactorFunction(sp.factor2(), G));
    FourSplit<T> s{GridFunction<T>(sp), GridFunction<T>(sp), GridFunction<T>(sp), GridFunction<T>(sp)};
    for (std::size_t i1 = 0; i1 < sp.n1(); ++i1)
        for (std::size_t i2 = 0; i2 < sp.n2(); ++i2) {
            const bool in_a = G[i2] > 2.0 * alpha;
            const bool in_b = std::abs(F(i1, i2)) > 2.0 * G[i2];
            auto& part = in_a ? (in_b ? s.f1 : s.f4) : (in_b ? s.f3 : s.f2);
            part(i1, i2) = F(i1, i2);
        }
    return s;
}

/// min{1, mu1(V), mu2(W), mu(V x W)}.
inline double rectangle_lower_bound(const ProductSpace& space, std::span<const std::size_t> V,
                                    std::span<const std::size_t> W) {
    const double a = subset_mass(space.factor1(), V);
    const double b = subset_mass(space.factor2(), W);
    return std::min({1.0, a, b, a * b});
}

inline double rectangle_lower_bound(const ProductSpace& space, const std::vector<std::string>& V,
                                    const std::vector<std::string>& W) {
    const auto v = space.factor1().indices_of(V);
    const auto w = space.factor2().indices_of(W);
    return rectangle_lower_bound(space, std::span<const std::size_t>(v), std::span<const std::size_t>(w));
}

/// Rectangle enumeration stops when (2^n1 - 1)(2^n2 - 1) exceeds this.
inline constexpr std::size_t kRectangleCap = 1u << 16;

/// Certified lower bound for sup{ int |F G| : ||G||_G <= 1 }.
///
/// Candidates: every rectangle indicator (below the size cap), every point
/// mass, the constant function, |F| itself, and `trials` seeded random
/// nonnegative functions; each is rescaled to unit intersection norm.
template <Scalar T>
double associate_pairing_sup(const GridFunction<T>& F, std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw input_error("associate_pairing_sup needs at least one trial");
    const auto& sp = F.space();
    double best = 0.0;
    auto consider = [&](const GridFunction<double>& G) {
        const double n = intersection_norm(G);
        if (n > 0.0) best = std::max(best, pairing(F, G) / n);
    };

    const std::size_t n1 = sp.n1(), n2 = sp.n2();
    const bool rectangles = n1 < 16 && n2 < 16 && ((std::size_t{1} << n1) - 1) * ((std::size_t{1} << n2) - 1) <= kRectangleCap;
    if (rectangles) {
        for (std::size_t a = 1; a < (std::size_t{1} << n1); ++a)
            for (std::size_t b = 1; b < (std::size_t{1} << n2); ++b) {
                GridFunction<double> G(sp);
                for (std::size_t i1 = 0; i1 < n1; ++i1)
                    for (std::size_t i2 = 0; i2 < n2; ++i2)
                        if (((a >> i1) & 1) && ((b >> i2) & 1)) G(i1, i2) = 1.0;
                consider(G);
            }
    } else {
        for (std::size_t i1 = 0; i1 < n1; ++i1)
            for (std::size_t i2 = 0; i2 < n2; ++i2) consider(point_indicator(sp, i1, i2));
    }
    consider(GridFunction<double>(sp, std::vector<double>(sp.size(), 1.0)));
    consider(F.abs());

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t t = 0; t < trials; ++t) {
        GridFunction<double> G(sp);
        for (auto& v : G.values()) v = unit(rng) < 0.5 ? unit(rng) : 0.0;
        consider(G);
    }
    return best;
}

}  // namespace mixschur
