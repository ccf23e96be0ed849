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

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "covering.hpp"
#include "kernel.hpp"
#include "kernel_module.hpp"
#include "mixed_norm.hpp"
#include "schur.hpp"

namespace mixschur {

/// A family of vectors in C^d indexed by the points of a product space.
class FiniteFrame {
public:
    FiniteFrame(ProductSpace index, std::size_t dim, std::vector<std::vector<complex>> vectors)
        : index_(std::move(index)), dim_(dim), vectors_(std::move(vectors)) {
        if (vectors_.size() != index_.size()) throw input_error("one frame vector per index point is required");
        for (const auto& v : vectors_)
            if (v.size() != dim_) throw input_error("frame vector has the wrong dimension");
    }

    const ProductSpace& index() const { return index_; }
    std::size_t dim() const { return dim_; }
    const std::vector<complex>& operator[](std::size_t x) const { return vectors_[x]; }

    double vector_norm(std::size_t x) const {
        double s = 0.0;
        for (const auto& c : vectors_[x]) s += std::norm(c);
        return std::sqrt(s);
    }

private:
    ProductSpace index_;
    std::size_t dim_;
    std::vector<std::vector<complex>> vectors_;
};

/// psi_{k,l}(t) = g(t - k mod N) e^{2 pi i l t / N} / sqrt(N) with g the
/// unit-normalized window, indexed by Z_N x Z_N (shift k, modulation l) with
/// counting measure.
inline FiniteFrame gabor_frame(std::size_t N, const std::vector<complex>& window) {
    if (N == 0) throw input_error("gabor frame needs N >= 1");
    if (window.size() != N) throw input_error("window length must equal N");
    double norm = 0.0;
    for (const auto& c : window) norm += std::norm(c);
    norm = std::sqrt(norm);
    if (!(norm > 0.0)) throw input_error("window must be nonzero");
    const auto Z = FiniteMeasureSpace::counting(N);
    std::vector<std::vector<complex>> vecs(N * N, std::vector<complex>(N));
    const double scale = 1.0 / (norm * std::sqrt(static_cast<double>(N)));
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = 0; l < N; ++l)
            for (std::size_t t = 0; t < N; ++t) {
                const double phase = 2.0 * M_PI * static_cast<double>((l * t) % N) / static_cast<double>(N);
                vecs[k * N + l][t] = window[(t + N - k) % N] * scale * std::polar(1.0, phase);
            }
    return FiniteFrame(ProductSpace(Z, Z), N, std::move(vecs));
}

/// Largest entry of |S - I| for the frame operator S = sum_x mu(x) psi_x psi_x^*.
inline double parseval_defect(const FiniteFrame& frame) {
    const std::size_t d = frame.dim();
    double defect = 0.0;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            complex s{};
            for (std::size_t x = 0; x < frame.index().size(); ++x)
                s += frame.index().mass(x) * frame[x][a] * std::conj(frame[x][b]);
            if (a == b) s -= 1.0;
            defect = std::max(defect, std::abs(s));
        }
    return defect;
}

/// V f(x) = <f, psi_x>.
inline GridFunction<complex> voice_transform(const FiniteFrame& frame, const std::vector<complex>& f) {
    if (f.size() != frame.dim()) throw input_error("vector dimension does not match the frame");
    GridFunction<complex> out(frame.index());
    for (std::size_t x = 0; x < frame.index().size(); ++x) {
        complex s{};
        for (std::size_t t = 0; t < f.size(); ++t) s += f[t] * std::conj(frame[x][t]);
        out[x] = s;
    }
    return out;
}

/// K(x, y) = <psi_y, psi_x>.
inline Kernel<complex> reproducing_kernel(const FiniteFrame& frame) {
    const auto& X = frame.index();
    Kernel<complex> K(X, X);
    for (std::size_t x = 0; x < X.size(); ++x)
        for (std::size_t y = 0; y < X.size(); ++y) {
            complex s{};
            for (std::size_t t = 0; t < frame.dim(); ++t) s += frame[y][t] * std::conj(frame[x][t]);
            K(x, y) = s;
        }
    return K;
}

/// delta (2 kappa + delta).
inline double discretization_margin(double kpsi_norm, double l_norm) {
    if (!(kpsi_norm >= 0.0) || !(l_norm >= 0.0)) throw input_error("margin inputs must be nonnegative");
    return l_norm * (2.0 * kpsi_norm + l_norm);
}

/// Optional discretization data: an admissible covering, a phase (default 1)
/// and a majorant of the oscillation (default: the oscillation itself).
struct DiscretizationInput {
    RectCovering covering;
    std::optional<PhaseGrid> phase;
    std::optional<Kernel<double>> majorant;
};

struct DiscretizationReport {
    bool covers = false;
    std::size_t intersection_number = 0;
    bool majorant_dominates = false;  // osc <= L entrywise
    double kpsi_norm = 0.0;           // ||K_Psi||_{B_m}, m = m_v + m_0
    double l_norm = 0.0;              // ||L||_{B_m}
    double margin = 0.0;
    bool margin_pass = false;
};

struct CoorbitReport {
    // covering and weights
    bool covering_valid = false;
    double weight_constant = 0.0;
    double u_moderateness = 0.0;
    bool v_at_least_one = false;
    double v_constant = 0.0;           // smallest C with max{||psi_x||, u/w^c} <= C v
    bool m0_symmetric = false;
    double m0_u_constant = 0.0;        // smallest C with m0 <= C u(x) u(y)
    // kernel conditions
    double kpsi_a_mv = 0.0;            // ||m_v K_Psi||_A
    double kpsi_b_m0 = 0.0;            // ||K_Psi||_{B_{m0}}
    double l_b_m0 = 0.0;               // ||L||_{B_{m0}}
    bool domination = false;           // M_U K_Psi <= L
    bool norms_finite = false;
    bool all_pass = false;
    std::optional<DiscretizationReport> discretization;
};

/// Evaluates every hypothesis of the well-definedness and (optionally)
/// discretization criteria. Failures are recorded, never thrown.
inline CoorbitReport coorbit_report(const FiniteFrame& frame, const RectCovering& cov, const WeightFunction& u,
                                    const WeightFunction& v, const WeightGrid& m0, const Kernel<double>& L,
                                    const std::optional<DiscretizationInput>& disc = std::nullopt) {
    const auto& X = frame.index();
    if (!(cov.space() == X) || !(u.space() == X) || !(v.space() == X) || !(m0.codomain() == X) ||
        !(m0.domain() == X) || !(L.codomain() == X) || !(L.domain() == X))
        throw input_error("coorbit inputs live on different spaces");
    CoorbitReport r;
    const auto cr = validate_covering(cov, u);
    r.covering_valid = cr.valid();
    r.weight_constant = cr.weight_constant;
    r.u_moderateness = *cr.moderateness;

    r.v_at_least_one = std::all_of(v.values().begin(), v.values().end(), [](double a) { return a >= 1.0; });
    if (r.covering_valid) {
        const auto cw = covering_weights(cov);
        for (std::size_t x = 0; x < X.size(); ++x)
            r.v_constant = std::max(r.v_constant, std::max(frame.vector_norm(x), u[x] / cw.continuous[x]) / v[x]);
    } else {
        r.v_constant = kInfinity;
    }

    r.m0_symmetric = true;
    for (std::size_t x = 0; x < X.size(); ++x)
        for (std::size_t y = 0; y < X.size(); ++y) r.m0_symmetric = r.m0_symmetric && m0(x, y) == m0(y, x);
    r.m0_u_constant = separable_bound_constant(m0, u, u);

    const auto K = reproducing_kernel(frame);
    r.kpsi_a_mv = norm_A(K.times(mv_weight(v).kernel()));
    r.kpsi_b_m0 = norm_B(K, m0);
    r.l_b_m0 = norm_B(L, m0);
    if (r.covering_valid) {
        const auto M = maximal_kernel(K, cov);
        r.domination = true;
        for (std::size_t i = 0; i < M.values().size(); ++i) r.domination = r.domination && M.values()[i] <= L.values()[i];
    }
    r.norms_finite = std::isfinite(r.kpsi_a_mv) && std::isfinite(r.kpsi_b_m0) && std::isfinite(r.l_b_m0) &&
                     std::isfinite(r.v_constant) && std::isfinite(r.m0_u_constant);
    r.all_pass = r.covering_valid && r.v_at_least_one && r.m0_symmetric && r.domination && r.norms_finite;

    if (disc) {
        DiscretizationReport d;
        const auto dr = validate_covering(disc->covering);
        d.covers = dr.covers;
        d.intersection_number = dr.intersection_number;
        const WeightGrid m = mv_weight(v) + m0;
        d.kpsi_norm = norm_B(K, m);
        if (d.covers) {
            const auto osc = oscillation(K, disc->covering, disc->phase);
            const Kernel<double> maj = disc->majorant ? *disc->majorant : osc;
            if (!(maj.codomain() == X) || !(maj.domain() == X)) throw input_error("majorant shape mismatch");
            d.majorant_dominates = true;
            for (std::size_t i = 0; i < osc.values().size(); ++i)
                d.majorant_dominates = d.majorant_dominates && osc.values()[i] <= maj.values()[i];
            d.l_norm = norm_B(maj, m);
            d.margin = discretization_margin(d.kpsi_norm, d.l_norm);
        } else {
            d.l_norm = kInfinity;
            d.margin = kInfinity;
        }
        d.margin_pass = d.covers && d.majorant_dominates && d.margin < 1.0;
        r.discretization = d;
    }
    return r;
}

struct SequenceNorms {
    double flat = 0.0;
    double sharp = 0.0;
};

/// flat = ||sum |l_i| 1_{U_i}||, sharp = ||sum |l_i| / mu(U_i) 1_{U_i}|| in L^{p,q}_w.
inline SequenceNorms sequence_norms(const std::vector<complex>& coeffs, const RectCovering& cov, Exponent p, Exponent q,
                                    const std::optional<WeightFunction>& w = std::nullopt) {
    if (coeffs.size() != cov.size()) throw input_error("one coefficient per patch is required");
    GridFunction<double> flat(cov.space()), sharp(cov.space());
    for (std::size_t j = 0; j < cov.size(); ++j) {
        const double a = std::abs(coeffs[j]);
        if (a == 0.0) continue;
        const double mu = cov.mass(j);
        for (std::size_t x = 0; x < cov.space().size(); ++x)
            if (cov.contains(j, x)) {
                flat[x] += a;
                sharp[x] += a / mu;
            }
    }
    return {mixed_norm(flat, p, q, w), mixed_norm(sharp, p, q, w)};
}

struct CounterexampleDiagnostics {
    std::size_t N = 0, M = 0;
    SchurConstants constants;
    double c3_analytic = 0.0;   // sum_{|m|<=N} (1+|m|)^{-2/3}
    double c1_analytic = 0.0;   // sum_{|n|<=N} (1+n^2)^{-1}
    double l2_truncated = 0.0;  // (sum_{|m|<=N} c_m^2)^{1/2}
    double l2_full = 0.0;       // ||c||_{l^2(Z)}
    double lower_bound = 0.0;   // sampled L^{1,inf} operator-norm lower bound
};

namespace detail {

inline double counterexample_c(long m) { return std::pow(1.0 + std::abs(static_cast<double>(m)), -2.0 / 3.0); }

inline FiniteMeasureSpace symmetric_range(std::size_t N, const std::vector<double>& masses) {
    std::vector<std::string> ids;
    for (long k = -static_cast<long>(N); k <= static_cast<long>(N); ++k) ids.push_back(std::to_string(k));
    return FiniteMeasureSpace(std::move(ids), masses);
}

}  // namespace detail

/// Truncation of the complex kernel K((x,k),(n,m)) = c_m e^{-2 pi i m x}
/// 1_{|m|<=|n|} 1_{|m|<=|k|} with x on an M-point grid of [0,1).
/// Frequencies are X1 = grid (mass 1/M), X2 = {-N..N} (mass e^{-|k|}),
/// Y1 = {-N..N} (mass beta_n), Y2 = {-N..N} (counting).
inline Kernel<complex> counterexample_kernel(std::size_t N, std::size_t M) {
    if (N < 1) throw input_error("counterexample needs N >= 1");
    if (M < 2) throw input_error("counterexample needs M >= 2");
    const long n = static_cast<long>(N);
    std::vector<std::string> grid_ids;
    for (std::size_t j = 0; j < M; ++j) grid_ids.push_back(std::to_string(j) + "/" + std::to_string(M));
    const FiniteMeasureSpace X1(grid_ids, std::vector<double>(M, 1.0 / static_cast<double>(M)));
    std::vector<double> mu2, beta;
    for (long k = -n; k <= n; ++k) {
        mu2.push_back(std::exp(-std::abs(static_cast<double>(k))));
        double s = 0.0;
        for (long m = -std::abs(k); m <= std::abs(k); ++m) s += detail::counterexample_c(m);
        beta.push_back(1.0 / ((1.0 + static_cast<double>(k * k)) * s));
    }
    const auto X2 = detail::symmetric_range(N, mu2);
    const auto Y1 = detail::symmetric_range(N, beta);
    const auto Y2 = detail::symmetric_range(N, std::vector<double>(2 * N + 1, 1.0));
    Kernel<complex> K(ProductSpace(X1, X2), ProductSpace(Y1, Y2));
    for (std::size_t j = 0; j < M; ++j) {
        const double x = static_cast<double>(j) / static_cast<double>(M);
        for (long k = -n; k <= n; ++k)
            for (long nn = -n; nn <= n; ++nn)
                for (long m = -n; m <= n; ++m) {
                    if (std::abs(m) > std::abs(nn) || std::abs(m) > std::abs(k)) continue;
                    K.at(j, static_cast<std::size_t>(k + n), static_cast<std::size_t>(nn + n), static_cast<std::size_t>(m + n)) =
                        detail::counterexample_c(m) * std::polar(1.0, -2.0 * M_PI * static_cast<double>(m) * x);
                }
    }
    return K;
}

inline CounterexampleDiagnostics counterexample_diagnostics(std::size_t N, std::size_t M, std::size_t trials,
                                                             std::uint64_t seed) {
    const auto K = counterexample_kernel(N, M);
    CounterexampleDiagnostics d;
    d.N = N;
    d.M = M;
    d.constants = schur_constants(K);
    const long n = static_cast<long>(N);
    double l2 = 0.0;
    for (long m = -n; m <= n; ++m) {
        d.c3_analytic += detail::counterexample_c(m);
        d.c1_analytic += 1.0 / (1.0 + static_cast<double>(m * m));
        l2 += std::pow(detail::counterexample_c(m), 2.0);
    }
    d.l2_truncated = std::sqrt(l2);
    d.l2_full = std::sqrt(1.0 + 2.0 * (std::riemann_zeta(4.0 / 3.0) - 1.0));
    d.lower_bound = opnorm_lower_search(K, 1.0, Exponent::infinity(), trials, seed);

    // Witnesses with one atom per slice, f(m, m) = e^{i theta_m} / beta_m, so
    // that Phi_K f(., N) is a random-phase trigonometric polynomial with
    // coefficients c_m and ||f||_{1,inf} = 1.
    const auto& Y = K.domain();
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t t = 0; t < trials; ++t) {
        GridFunction<complex> f(Y);
        for (std::size_t j = 0; j < Y.n2(); ++j) f(j, j) = std::polar(1.0 / Y.factor1().mass(j), 2.0 * M_PI * unit(rng));
        const double ratio = mixed_norm(apply_kernel(K, f), 1.0, Exponent::infinity()) / mixed_norm(f, 1.0, Exponent::infinity());
        d.lower_bound = std::max(d.lower_bound, ratio);
    }
    return d;
}

}  // namespace mixschur
