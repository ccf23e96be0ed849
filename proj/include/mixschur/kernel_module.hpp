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
#include <optional>
#include <vector>

#include "kernel.hpp"
#include "mixed_norm.hpp"

namespace mixschur {

/// A strictly positive weight m : X x Y -> (0, inf), shaped like a kernel.
class WeightGrid {
public:
    explicit WeightGrid(Kernel<double> values) : k_(std::move(values)) {
        for (double v : k_.values())
            if (!std::isfinite(v) || !(v > 0.0)) throw input_error("weight grid entries must be positive and finite");
    }
    static WeightGrid constant(const ProductSpace& X, const ProductSpace& Y, double c) {
        return WeightGrid(Kernel<double>(X, Y, std::vector<double>(X.size() * Y.size(), c)));
    }

    const Kernel<double>& kernel() const { return k_; }
    const ProductSpace& codomain() const { return k_.codomain(); }
    const ProductSpace& domain() const { return k_.domain(); }
    double operator()(std::size_t x, std::size_t y) const { return k_(x, y); }

    WeightGrid transposed() const { return WeightGrid(transpose(k_)); }

private:
    Kernel<double> k_;
};

namespace detail {

// A-norm of a |rows| x |cols| block given by an accessor of nonnegative values.
template <class Get>
double a_norm_block(std::size_t rows, std::size_t cols, const std::vector<double>& row_mass,
                    const std::vector<double>& col_mass, Get&& get) {
    double by_rows = 0.0, by_cols = 0.0;
    std::vector<double> t(cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) t[c] = col_mass[c] * get(r, c);
        by_rows = std::max(by_rows, pairwise_sum(t));
    }
    t.resize(rows);
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < rows; ++r) t[r] = row_mass[r] * get(r, c);
        by_cols = std::max(by_cols, pairwise_sum(t));
    }
    return std::max(by_rows, by_cols);
}

}  // namespace detail

/// max{ sup_x ||K(x,.)||_{L^1(nu)}, sup_y ||K(.,y)||_{L^1(mu)} }.
template <Scalar T>
double norm_A(const Kernel<T>& K) {
    const auto mu = K.codomain().masses();
    const auto nu = K.domain().masses();
    return detail::a_norm_block(K.rows(), K.cols(), mu, nu,
                                [&](std::size_t x, std::size_t y) { return std::abs(K(x, y)); });
}

/// The A(X1,Y1)-norms of the partial kernels K^{(x2,y2)}, as an |X2| x |Y2| grid.
template <Scalar T>
std::vector<double> partial_a_norms(const Kernel<T>& K, const std::optional<WeightGrid>& m = std::nullopt) {
    const auto& X = K.codomain();
    const auto& Y = K.domain();
    std::vector<double> gamma(X.n2() * Y.n2());
    for (std::size_t x2 = 0; x2 < X.n2(); ++x2)
        for (std::size_t y2 = 0; y2 < Y.n2(); ++y2)
            gamma[x2 * Y.n2() + y2] = detail::a_norm_block(
                X.n1(), Y.n1(), X.factor1().masses(), Y.factor1().masses(),
                [&](std::size_t x1, std::size_t y1) {
                    const std::size_t x = X.flat(x1, x2), y = Y.flat(y1, y2);
                    const double a = std::abs(K(x, y));
                    return m ? (*m)(x, y) * a : a;
                });
    return gamma;
}

/// ||K||_{B_m}: the A(X2,Y2)-norm of (x2,y2) -> ||(mK)^{(x2,y2)}||_{A(X1,Y1)}.
/// Without a weight no weight grid is materialized.
template <Scalar T>
double norm_B(const Kernel<T>& K, const std::optional<WeightGrid>& m = std::nullopt) {
    if (m && (!(m->codomain() == K.codomain()) || !(m->domain() == K.domain())))
        throw input_error("weight grid shape does not match the kernel");
    const auto& X = K.codomain();
    const auto& Y = K.domain();
    const auto gamma = partial_a_norms(K, m);
    return detail::a_norm_block(X.n2(), Y.n2(), X.factor2().masses(), Y.factor2().masses(),
                                [&](std::size_t x2, std::size_t y2) { return gamma[x2 * Y.n2() + y2]; });
}

/// (K ⊙ L)(x, z) = int_Y K(x, y) L(y, z) dnu(y).
template <Scalar T, Scalar U>
auto compose(const Kernel<T>& K, const Kernel<U>& L) {
    using R = std::conditional_t<std::is_same_v<T, complex> || std::is_same_v<U, complex>, complex, double>;
    if (!(K.domain() == L.codomain())) throw input_error("compose: middle spaces differ");
    const auto nu = K.domain().masses();
    Kernel<R> out(K.codomain(), L.domain());
    for (std::size_t x = 0; x < K.rows(); ++x)
        for (std::size_t y = 0; y < K.cols(); ++y) {
            const R a = R(K(x, y)) * nu[y];
            if (a == R{}) continue;
            for (std::size_t z = 0; z < L.cols(); ++z) out(x, z) += a * R(L(y, z));
        }
    return out;
}

/// (f ⊗ g)(x, y) = f(x) g(y).
template <Scalar T>
Kernel<T> tensor_kernel(const GridFunction<T>& f, const GridFunction<T>& g) {
    Kernel<T> out(f.space(), g.space());
    for (std::size_t x = 0; x < out.rows(); ++x)
        for (std::size_t y = 0; y < out.cols(); ++y) out(x, y) = f[x] * g[y];
    return out;
}

/// m_v(x, y) = max{ v(x)/v(y), v(y)/v(x) } on X x X.
inline WeightGrid mv_weight(const WeightFunction& v) {
    const auto& X = v.space();
    Kernel<double> m(X, X);
    for (std::size_t x = 0; x < X.size(); ++x)
        for (std::size_t y = 0; y < X.size(); ++y) m(x, y) = std::max(v[x] / v[y], v[y] / v[x]);
    return WeightGrid(std::move(m));
}

/// Entrywise sum of two weight grids (m_v + m_0).
inline WeightGrid operator+(const WeightGrid& a, const WeightGrid& b) {
    if (!(a.codomain() == b.codomain()) || !(a.domain() == b.domain())) throw input_error("weight grid shape mismatch");
    Kernel<double> s = a.kernel();
    for (std::size_t i = 0; i < s.values().size(); ++i) s.values()[i] += b.kernel().values()[i];
    return WeightGrid(std::move(s));
}

/// Attaches singleton mass-one second factors to a plain kernel on X1 x Y1
/// (rows indexed by X1, columns by Y1).
template <Scalar T>
Kernel<T> lift_plain_kernel(const FiniteMeasureSpace& X1, const FiniteMeasureSpace& Y1, std::vector<T> rows_major) {
    const auto point = FiniteMeasureSpace({"0"}, {1.0});
    return Kernel<T>(ProductSpace(X1, point), ProductSpace(Y1, point), std::move(rows_major));
}

// Smallest constants for pointwise weight inequalities, by exhaustive scan.

/// Smallest C with tau(x,z) <= C omega(x,y) sigma(y,z) for all x, y, z.
inline double submultiplicativity_constant(const WeightGrid& tau, const WeightGrid& omega, const WeightGrid& sigma) {
    if (!(omega.domain() == sigma.codomain()) || !(tau.codomain() == omega.codomain()) ||
        !(tau.domain() == sigma.domain()))
        throw input_error("weight grids do not chain");
    double c = 0.0;
    const std::size_t nx = tau.kernel().rows(), ny = omega.kernel().cols(), nz = tau.kernel().cols();
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y)
            for (std::size_t z = 0; z < nz; ++z) c = std::max(c, tau(x, z) / (omega(x, y) * sigma(y, z)));
    return c;
}

/// Smallest C with v(x) / w(y) <= C m(x, y).
inline double operator_weight_constant(const WeightFunction& v, const WeightFunction& w, const WeightGrid& m) {
    double c = 0.0;
    for (std::size_t x = 0; x < m.kernel().rows(); ++x)
        for (std::size_t y = 0; y < m.kernel().cols(); ++y) c = std::max(c, v[x] / (w[y] * m(x, y)));
    return c;
}

/// Smallest C with m(x, y) <= C v(x) w(y).
inline double separable_bound_constant(const WeightGrid& m, const WeightFunction& v, const WeightFunction& w) {
    double c = 0.0;
    for (std::size_t x = 0; x < m.kernel().rows(); ++x)
        for (std::size_t y = 0; y < m.kernel().cols(); ++y) c = std::max(c, m(x, y) / (v[x] * w[y]));
    return c;
}

}  // namespace mixschur
