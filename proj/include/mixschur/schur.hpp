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
#include <random>
#include <vector>

#include "kernel.hpp"
#include "mixed_norm.hpp"

namespace mixschur {

/// The four iterated sup/integral quantities of the mixed-norm Schur test.
///  c1: sup_x  int_Y |K(x,.)| dnu
///  c2: sup_y  int_X |K(.,y)| dmu
///  c3: sup_x2 int_Y2 sup_y1 int_X1 |K| dmu1 dnu2
///  c4: sup_y2 int_X2 sup_x1 int_Y1 |K| dnu1 dmu2
struct SchurConstants {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c4 = 0.0;

    friend bool operator==(const SchurConstants&, const SchurConstants&) = default;
};

template <Scalar T>
SchurConstants schur_constants(const Kernel<T>& K) {
    const auto& X = K.codomain();
    const auto& Y = K.domain();
    const auto mu = X.masses();
    const auto nu = Y.masses();
    SchurConstants c;
    std::vector<double> terms;

    terms.resize(K.cols());
    for (std::size_t x = 0; x < K.rows(); ++x) {
        for (std::size_t y = 0; y < K.cols(); ++y) terms[y] = nu[y] * std::abs(K(x, y));
        c.c1 = std::max(c.c1, detail::pairwise_sum(terms));
    }
    terms.resize(K.rows());
    for (std::size_t y = 0; y < K.cols(); ++y) {
        for (std::size_t x = 0; x < K.rows(); ++x) terms[x] = mu[x] * std::abs(K(x, y));
        c.c2 = std::max(c.c2, detail::pairwise_sum(terms));
    }

    const auto& mu1 = X.factor1().masses();
    const auto& mu2 = X.factor2().masses();
    const auto& nu1 = Y.factor1().masses();
    const auto& nu2 = Y.factor2().masses();
    std::vector<double> inner, outer;

    for (std::size_t x2 = 0; x2 < X.n2(); ++x2) {
        outer.assign(Y.n2(), 0.0);
        for (std::size_t y2 = 0; y2 < Y.n2(); ++y2) {
            double best = 0.0;
            for (std::size_t y1 = 0; y1 < Y.n1(); ++y1) {
                inner.assign(X.n1(), 0.0);
                for (std::size_t x1 = 0; x1 < X.n1(); ++x1) inner[x1] = mu1[x1] * std::abs(K.at(x1, x2, y1, y2));
                best = std::max(best, detail::pairwise_sum(inner));
            }
            outer[y2] = nu2[y2] * best;
        }
        c.c3 = std::max(c.c3, detail::pairwise_sum(outer));
    }

    for (std::size_t y2 = 0; y2 < Y.n2(); ++y2) {
        outer.assign(X.n2(), 0.0);
        for (std::size_t x2 = 0; x2 < X.n2(); ++x2) {
            double best = 0.0;
            for (std::size_t x1 = 0; x1 < X.n1(); ++x1) {
                inner.assign(Y.n1(), 0.0);
                for (std::size_t y1 = 0; y1 < Y.n1(); ++y1) inner[y1] = nu1[y1] * std::abs(K.at(x1, x2, y1, y2));
                best = std::max(best, detail::pairwise_sum(inner));
            }
            outer[x2] = mu2[x2] * best;
        }
        c.c4 = std::max(c.c4, detail::pairwise_sum(outer));
    }
    return c;
}

/// Upper bound for ||Phi_K||_{L^{p,q} -> L^{p,q}}: max{c1,c2,c3} if p <= q,
/// max{c1,c2,c4} otherwise.
inline double schur_bound(const SchurConstants& c, Exponent p, Exponent q) {
    const double base = std::max(c.c1, c.c2);
    return p <= q ? std::max(base, c.c3) : std::max(base, c.c4);
}

/// Largest number of choice tuples corner_opnorm will enumerate.
inline constexpr std::uint64_t kVertexCap = 1'000'000;

/// Exact operator norm of Phi_K on L^{p,q} for a nonnegative kernel and
/// p, q in {1, inf}.
///
/// (1,1) and (inf,inf) use column and row mass sums. For (1,inf) the extreme
/// points of the nonnegative unit ball are the functions that pick one atom
/// y1 per slice y2 at height 1/nu1(y1); all |Y1|^|Y2| of them are visited.
/// For (inf,1) they are the normalized slice indicators 1_{Y1 x {y2}}/nu2(y2).
template <Scalar T>
double corner_opnorm(const Kernel<T>& Kc, Exponent p, Exponent q) {
    if (!(p.is_one() || p.is_infinite()) || !(q.is_one() || q.is_infinite()))
        throw input_error("corner_opnorm needs p, q in {1, inf}");
    if (!Kc.is_nonnegative_real()) throw input_error("corner_opnorm needs a nonnegative real kernel");
    const Kernel<double> K = Kc.abs();
    const auto& X = K.codomain();
    const auto& Y = K.domain();
    const auto mu = X.masses();
    const auto nu = Y.masses();

    if (p.is_one() && q.is_one()) {
        double best = 0.0;
        std::vector<double> t(K.rows());
        for (std::size_t y = 0; y < K.cols(); ++y) {
            for (std::size_t x = 0; x < K.rows(); ++x) t[x] = mu[x] * K(x, y);
            best = std::max(best, detail::pairwise_sum(t));
        }
        return best;
    }
    if (p.is_infinite() && q.is_infinite()) {
        double best = 0.0;
        std::vector<double> t(K.cols());
        for (std::size_t x = 0; x < K.rows(); ++x) {
            for (std::size_t y = 0; y < K.cols(); ++y) t[y] = nu[y] * K(x, y);
            best = std::max(best, detail::pairwise_sum(t));
        }
        return best;
    }

    const auto& mu1 = X.factor1().masses();
    const auto& mu2 = X.factor2().masses();
    const auto& nu1 = Y.factor1().masses();
    const auto& nu2 = Y.factor2().masses();
    std::vector<double> h(K.rows());
    std::vector<double> t;

    if (p.is_infinite()) {  // (inf, 1)
        double best = 0.0;
        for (std::size_t y2 = 0; y2 < Y.n2(); ++y2) {
            for (std::size_t x = 0; x < K.rows(); ++x) {
                t.assign(Y.n1(), 0.0);
                for (std::size_t y1 = 0; y1 < Y.n1(); ++y1) t[y1] = nu1[y1] * K(x, Y.flat(y1, y2));
                h[x] = detail::pairwise_sum(t);
            }
            t.assign(X.n2(), 0.0);
            for (std::size_t x2 = 0; x2 < X.n2(); ++x2) {
                double m = 0.0;
                for (std::size_t x1 = 0; x1 < X.n1(); ++x1) m = std::max(m, h[X.flat(x1, x2)]);
                t[x2] = mu2[x2] * m;
            }
            best = std::max(best, detail::pairwise_sum(t));
        }
        return best;
    }

    // (1, inf): odometer over choice tuples (c(y2))_{y2}.
    double count = 1.0;
    for (std::size_t y2 = 0; y2 < Y.n2(); ++y2) count *= static_cast<double>(Y.n1());
    if (count > static_cast<double>(kVertexCap)) throw input_error("vertex enumeration exceeds the 10^6 cap");
    std::vector<std::size_t> choice(Y.n2(), 0);
    double best = 0.0;
    for (;;) {
        for (std::size_t x = 0; x < K.rows(); ++x) {
            t.assign(Y.n2(), 0.0);
            for (std::size_t y2 = 0; y2 < Y.n2(); ++y2) t[y2] = nu2[y2] * K(x, Y.flat(choice[y2], y2));
            h[x] = detail::pairwise_sum(t);
        }
        double norm = 0.0;
        for (std::size_t x2 = 0; x2 < X.n2(); ++x2) {
            t.assign(X.n1(), 0.0);
            for (std::size_t x1 = 0; x1 < X.n1(); ++x1) t[x1] = mu1[x1] * h[X.flat(x1, x2)];
            norm = std::max(norm, detail::pairwise_sum(t));
        }
        best = std::max(best, norm);
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == Y.n1()) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    (void)nu;
    return best;
}

/// Deterministic lower bound for ||Phi_K||_{L^{p,q} -> L^{p,q}}: the best
/// ratio ||Phi_K f|| / ||f|| over all point masses, the constant function and
/// seeded random draws. Random draws fill the trial budget left over after
/// the structured witnesses (at least one random draw is always made).
template <Scalar T>
double opnorm_lower_search(const Kernel<T>& K, Exponent p, Exponent q, std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw input_error("opnorm_lower_search needs at least one trial");
    const auto& X = K.codomain();
    const auto& Y = K.domain();
    double best = 0.0;

    // Point masses: Phi_K 1_{y} = nu({y}) K(., y).
    for (std::size_t y = 0; y < Y.size(); ++y) {
        const auto [y1, y2] = Y.split(y);
        GridFunction<T> col(X);
        for (std::size_t x = 0; x < X.size(); ++x) col[x] = K(x, y) * Y.mass(y);
        const double den = mixed_norm(point_indicator(Y, y1, y2), p, q);
        best = std::max(best, mixed_norm(col, p, q) / den);
    }

    {
        GridFunction<double> one(Y, std::vector<double>(Y.size(), 1.0));
        best = std::max(best, mixed_norm(apply_kernel(K, one), p, q) / mixed_norm(one, p, q));
    }

    const std::size_t structured = Y.size() + 1;
    const std::size_t random_draws = trials > structured ? trials - structured : 1;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t t = 0; t < random_draws; ++t) {
        GridFunction<T> f(Y);
        const double density = 0.25 + 0.75 * unit(rng);
        for (std::size_t y = 0; y < Y.size(); ++y) {
            if (unit(rng) > density) continue;
            const double r = unit(rng);
            if constexpr (std::is_same_v<T, complex>) {
                f[y] = std::polar(r, 2.0 * M_PI * unit(rng));
            } else {
                f[y] = r;
            }
        }
        const double den = mixed_norm(f, p, q);
        if (den == 0.0) continue;
        best = std::max(best, mixed_norm(apply_kernel(K, f), p, q) / den);
    }
    return best;
}

}  // namespace mixschur
