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
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "kernel.hpp"
#include "kernel_module.hpp"
#include "measure.hpp"
#include "mixed_norm.hpp"
#include "sum_norm.hpp"

namespace mixschur {

/// One rectangle V x W, stored as sorted, deduplicated factor indices.
struct Patch {
    std::vector<std::size_t> V;
    std::vector<std::size_t> W;
};

/// A finite list of rectangles V_j x W_j in a product space.
class RectCovering {
public:
    RectCovering(ProductSpace space, std::vector<Patch> patches) : space_(std::move(space)), patches_(std::move(patches)) {
        if (patches_.empty()) throw input_error("covering needs at least one patch");
        for (auto& p : patches_) {
            normalize(p.V, space_.n1());
            normalize(p.W, space_.n2());
        }
        in1_.assign(patches_.size() * space_.n1(), 0);
        in2_.assign(patches_.size() * space_.n2(), 0);
        for (std::size_t j = 0; j < patches_.size(); ++j) {
            for (std::size_t i1 : patches_[j].V) in1_[j * space_.n1() + i1] = 1;
            for (std::size_t i2 : patches_[j].W) in2_[j * space_.n2() + i2] = 1;
        }
    }

    /// Builds patches from point identifiers.
    static RectCovering from_ids(const ProductSpace& space,
                                 const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& rects) {
        std::vector<Patch> patches;
        for (const auto& [v, w] : rects) patches.push_back({space.factor1().indices_of(v), space.factor2().indices_of(w)});
        return RectCovering(space, std::move(patches));
    }

    /// The covering by the whole space as a single patch.
    static RectCovering whole(const ProductSpace& space) {
        Patch p;
        p.V.resize(space.n1());
        p.W.resize(space.n2());
        std::iota(p.V.begin(), p.V.end(), 0);
        std::iota(p.W.begin(), p.W.end(), 0);
        return RectCovering(space, {p});
    }

    /// One singleton patch per product point.
    static RectCovering singletons(const ProductSpace& space) {
        std::vector<Patch> patches;
        for (std::size_t i1 = 0; i1 < space.n1(); ++i1)
            for (std::size_t i2 = 0; i2 < space.n2(); ++i2) patches.push_back({{i1}, {i2}});
        return RectCovering(space, std::move(patches));
    }

    const ProductSpace& space() const { return space_; }
    const std::vector<Patch>& patches() const { return patches_; }
    std::size_t size() const { return patches_.size(); }

    bool contains(std::size_t j, std::size_t x) const {
        const auto [i1, i2] = space_.split(x);
        return in1_[j * space_.n1() + i1] && in2_[j * space_.n2() + i2];
    }

    bool intersects(std::size_t i, std::size_t j) const {
        bool v = false, w = false;
        for (std::size_t a : patches_[i].V) v = v || in1_[j * space_.n1() + a];
        for (std::size_t b : patches_[i].W) w = w || in2_[j * space_.n2() + b];
        return v && w;
    }

    double mass1(std::size_t j) const { return subset_mass(space_.factor1(), std::span<const std::size_t>(patches_[j].V)); }
    double mass2(std::size_t j) const { return subset_mass(space_.factor2(), std::span<const std::size_t>(patches_[j].W)); }
    double mass(std::size_t j) const { return mass1(j) * mass2(j); }

    bool covers() const {
        for (std::size_t x = 0; x < space_.size(); ++x)
            if (!covered(x)) return false;
        return true;
    }

    /// Indicator of the neighbourhood U(x): the union of all patches containing x.
    std::vector<char> neighbourhood(std::size_t x) const {
        std::vector<char> out(space_.size(), 0);
        for (std::size_t j = 0; j < patches_.size(); ++j) {
            if (!contains(j, x)) continue;
            for (std::size_t a : patches_[j].V)
                for (std::size_t b : patches_[j].W) out[space_.flat(a, b)] = 1;
        }
        return out;
    }

    GridFunction<double> indicator(std::size_t j) const {
        GridFunction<double> f(space_);
        for (std::size_t a : patches_[j].V)
            for (std::size_t b : patches_[j].W) f(a, b) = 1.0;
        return f;
    }

    /// The same patches in the order given by `order`.
    RectCovering permuted(const std::vector<std::size_t>& order) const {
        if (order.size() != patches_.size()) throw input_error("permutation length mismatch");
        std::vector<Patch> p;
        for (std::size_t j : order) p.push_back(patches_.at(j));
        return RectCovering(space_, std::move(p));
    }

private:
    bool covered(std::size_t x) const {
        for (std::size_t j = 0; j < patches_.size(); ++j)
            if (contains(j, x)) return true;
        return false;
    }

    static void normalize(std::vector<std::size_t>& idx, std::size_t n) {
        for (std::size_t i : idx)
            if (i >= n) throw input_error("patch index out of range");
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    }

    ProductSpace space_;
    std::vector<Patch> patches_;
    std::vector<char> in1_, in2_;
};

/// (w_U)_j = min{1, mu1(V_j), mu2(W_j), mu(U_j)}.
inline std::vector<double> discrete_covering_weight(const RectCovering& cov) {
    std::vector<double> w(cov.size());
    for (std::size_t j = 0; j < cov.size(); ++j) {
        const double a = cov.mass1(j), b = cov.mass2(j);
        w[j] = std::min({1.0, a, b, a * b});
    }
    return w;
}

struct CoveringReport {
    bool covers = false;
    std::vector<bool> patch_positive;
    bool all_positive = false;
    double weight_constant = 1.0;      // smallest C with w_i <= C w_j on intersecting patches
    std::size_t intersection_number = 0;
    std::optional<double> moderateness;  // smallest C' with u(x) <= C' u(y) on every patch

    bool valid() const { return covers && all_positive; }
};

inline CoveringReport validate_covering(const RectCovering& cov, const std::optional<WeightFunction>& u = std::nullopt) {
    CoveringReport r;
    r.covers = cov.covers();
    r.all_positive = true;
    for (std::size_t j = 0; j < cov.size(); ++j) {
        const bool pos = cov.mass(j) > 0.0;
        r.patch_positive.push_back(pos);
        r.all_positive = r.all_positive && pos;
    }
    const auto w = discrete_covering_weight(cov);
    for (std::size_t i = 0; i < cov.size(); ++i) {
        std::size_t count = 0;
        for (std::size_t j = 0; j < cov.size(); ++j) {
            if (!cov.intersects(i, j)) continue;
            ++count;
            if (w[j] > 0.0) r.weight_constant = std::max(r.weight_constant, w[i] / w[j]);
        }
        r.intersection_number = std::max(r.intersection_number, count);
    }
    if (u) {
        if (!(u->space() == cov.space())) throw input_error("weight lives on a different space");
        double c = 1.0;
        for (std::size_t j = 0; j < cov.size(); ++j) {
            double lo = kInfinity, hi = 0.0;
            for (std::size_t x = 0; x < cov.space().size(); ++x)
                if (cov.contains(j, x)) {
                    lo = std::min(lo, (*u)[x]);
                    hi = std::max(hi, (*u)[x]);
                }
            if (hi > 0.0) c = std::max(c, hi / lo);
        }
        r.moderateness = c;
    }
    return r;
}

struct CoveringWeights {
    std::vector<double> discrete;
    WeightFunction continuous;
    /// sup_j sup_{x in U_j} [ w_j / w^c(x) + w^c(x) / w_j ].
    double condition_constant;
    /// sup_j sup_{x in U_j} w^c(x) / w_j.
    double upper_ratio;
};

/// Discrete covering weight and its continuous version, which takes the
/// value w_j on the part of U_j not already claimed by an earlier patch.
inline CoveringWeights covering_weights(const RectCovering& cov) {
    const auto report = validate_covering(cov);
    if (!report.valid()) throw input_error("covering weights need a covering by positive-mass patches");
    const auto w = discrete_covering_weight(cov);
    const auto& sp = cov.space();
    std::vector<double> wc(sp.size(), 0.0);
    for (std::size_t x = 0; x < sp.size(); ++x)
        for (std::size_t j = 0; j < cov.size(); ++j)
            if (cov.contains(j, x)) {
                wc[x] = w[j];
                break;
            }
    double cond = 0.0, upper = 0.0;
    for (std::size_t j = 0; j < cov.size(); ++j)
        for (std::size_t x = 0; x < sp.size(); ++x)
            if (cov.contains(j, x)) {
                cond = std::max(cond, w[j] / wc[x] + wc[x] / w[j]);
                upper = std::max(upper, wc[x] / w[j]);
            }
    return {w, WeightFunction(sp, std::move(wc)), cond, upper};
}

/// (M_U K)(x, y) = max over z in U(x) of |K(z, y)|.
template <Scalar T>
Kernel<double> maximal_kernel(const Kernel<T>& K, const RectCovering& cov) {
    if (!(K.codomain() == cov.space()) || !(K.domain() == cov.space()))
        throw input_error("maximal kernel needs a kernel on the covered space");
    if (!cov.covers()) throw input_error("covering does not cover the space");
    Kernel<double> out(K.codomain(), K.domain());
    for (std::size_t x = 0; x < K.rows(); ++x) {
        const auto nb = cov.neighbourhood(x);
        for (std::size_t z = 0; z < K.rows(); ++z) {
            if (!nb[z]) continue;
            for (std::size_t y = 0; y < K.cols(); ++y) out(x, y) = std::max(out(x, y), std::abs(K(z, y)));
        }
    }
    return out;
}

/// A unimodular phase function on X x X.
class PhaseGrid {
public:
    explicit PhaseGrid(Kernel<complex> values, double tol = 1e-12) : k_(std::move(values)) {
        for (const auto& v : k_.values())
            if (!(std::abs(std::abs(v) - 1.0) <= tol)) throw input_error("phase entries must have modulus one");
    }
    static PhaseGrid ones(const ProductSpace& X) {
        return PhaseGrid(Kernel<complex>(X, X, std::vector<complex>(X.size() * X.size(), complex(1.0, 0.0))));
    }
    const Kernel<complex>& kernel() const { return k_; }
    complex operator()(std::size_t y, std::size_t z) const { return k_(y, z); }

private:
    Kernel<complex> k_;
};

/// osc(x, y) = max over z in U(y) of |K(x, y) - Gamma(y, z) K(x, z)|.
/// Without a phase, Gamma is identically one.
template <Scalar T>
Kernel<double> oscillation(const Kernel<T>& K, const RectCovering& cov, const std::optional<PhaseGrid>& phase = std::nullopt) {
    if (!(K.codomain() == cov.space()) || !(K.domain() == cov.space()))
        throw input_error("oscillation needs a kernel on the covered space");
    if (phase && (!(phase->kernel().codomain() == cov.space()) || !(phase->kernel().domain() == cov.space())))
        throw input_error("phase grid shape mismatch");
    Kernel<double> out(K.codomain(), K.domain());
    for (std::size_t y = 0; y < K.cols(); ++y) {
        const auto nb = cov.neighbourhood(y);
        for (std::size_t z = 0; z < K.cols(); ++z) {
            if (!nb[z]) continue;
            const complex g = phase ? (*phase)(y, z) : complex(1.0, 0.0);
            for (std::size_t x = 0; x < K.rows(); ++x)
                out(x, y) = std::max(out(x, y), std::abs(complex(K(x, y)) - g * complex(K(x, z))));
        }
    }
    return out;
}

/// v = u / w^c pointwise.
inline WeightFunction special_linfty_weight(const RectCovering& cov, const WeightFunction& u) {
    if (!(u.space() == cov.space())) throw input_error("weight lives on a different space");
    const auto cw = covering_weights(cov);
    std::vector<double> v(u.values().size());
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = u[x] / cw.continuous[x];
    return WeightFunction(cov.space(), std::move(v));
}

/// Constants for Phi_K : L^{p,q}_kappa -> L^inf_{1/v} with v = u / w^c.
///  c1: kappa(x)/kappa(y) <= c1 m(x,y), so ||Phi_L||_{A->A} <= c1 ||L||_{B_m}
///  c2: c1 ||L||_{B_m}
///  c3: ||(1/u) 1_{U_j}||_{L^1+L^inf+L^{1,inf}+L^{inf,1}} <= c3 ||1_{U_j}||_A for all j,
///      with the left side bounded by the norm sum of the four-way split
///  c4: moderateness constant of u
///  c5: sup_j sup_{x in U_j} w^c(x) / w_j
///  c6: c2 c3 c4 c5
struct LinftyBoundConstants {
    double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0, c5 = 0.0, c6 = 0.0;
};

inline LinftyBoundConstants linfty_bound_constants(const RectCovering& cov, const WeightFunction& u,
                                                   const WeightFunction& kappa, Exponent p, Exponent q,
                                                   const WeightGrid& m, const Kernel<double>& L) {
    LinftyBoundConstants c;
    c.c1 = operator_weight_constant(kappa, kappa, m);
    c.c2 = c.c1 * norm_B(L, m);
    for (std::size_t j = 0; j < cov.size(); ++j) {
        const auto ind = cov.indicator(j);
        GridFunction<double> scaled = ind;
        for (std::size_t x = 0; x < scaled.values().size(); ++x) scaled[x] /= u[x];
        const double upper = split_four(scaled).norm_sum();
        c.c3 = std::max(c.c3, upper / mixed_norm(ind, p, q, kappa));
    }
    c.c4 = *validate_covering(cov, u).moderateness;
    c.c5 = covering_weights(cov).upper_ratio;
    c.c6 = c.c2 * c.c3 * c.c4 * c.c5;
    return c;
}

/// max_x |f(x)| / v(x).
template <Scalar T>
double weighted_sup(const GridFunction<T>& f, const WeightFunction& v) {
    double best = 0.0;
    for (std::size_t x = 0; x < f.values().size(); ++x) best = std::max(best, std::abs(f[x]) / v[x]);
    return best;
}

}  // namespace mixschur
