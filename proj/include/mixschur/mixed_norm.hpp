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
#include <complex>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "measure.hpp"

namespace mixschur {

using complex = std::complex<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// An integrability exponent in [1, inf]. Infinity is stored as +inf and every
/// consumer branches on it explicitly; the conjugate of 1 is inf and vice versa.
class Exponent {
public:
    constexpr Exponent(double value = 1.0) : value_(value) {
        if (!(value_ >= 1.0)) throw input_error("exponent must be >= 1");
    }
    static constexpr Exponent infinity() { return Exponent(kInfinity); }

    constexpr double value() const { return value_; }
    constexpr bool is_infinite() const { return value_ == kInfinity; }
    constexpr bool is_one() const { return value_ == 1.0; }

    constexpr Exponent conjugate() const {
        if (is_one()) return infinity();
        if (is_infinite()) return Exponent(1.0);
        return Exponent(value_ / (value_ - 1.0));
    }

    std::string str() const { return is_infinite() ? "inf" : std::to_string(value_); }

    friend constexpr bool operator==(Exponent a, Exponent b) { return a.value_ == b.value_; }
    friend constexpr bool operator<=(Exponent a, Exponent b) { return a.value_ <= b.value_; }
    friend constexpr bool operator<(Exponent a, Exponent b) { return a.value_ < b.value_; }

private:
    double value_;
};

template <class T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, complex>;

/// A function on a product space, stored densely with x1 as the row index
/// and x2 as the column index.
template <Scalar T>
class GridFunction {
public:
    using value_type = T;

    explicit GridFunction(ProductSpace space)
        : space_(std::move(space)), values_(space_.size(), T{}) {}

    GridFunction(ProductSpace space, std::vector<T> values)
        : space_(std::move(space)), values_(std::move(values)) {
        if (values_.size() != space_.size())
            throw input_error("grid function shape does not match its space");
    }

    const ProductSpace& space() const { return space_; }
    const std::vector<T>& values() const { return values_; }
    std::vector<T>& values() { return values_; }

    T& operator()(std::size_t i1, std::size_t i2) { return values_[space_.flat(i1, i2)]; }
    const T& operator()(std::size_t i1, std::size_t i2) const { return values_[space_.flat(i1, i2)]; }
    T& operator[](std::size_t i) { return values_[i]; }
    const T& operator[](std::size_t i) const { return values_[i]; }

    GridFunction<double> abs() const {
        std::vector<double> a(values_.size());
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::abs(values_[i]);
        return GridFunction<double>(space_, std::move(a));
    }

    GridFunction<complex> to_complex() const {
        return GridFunction<complex>(space_, std::vector<complex>(values_.begin(), values_.end()));
    }

    GridFunction scaled(T alpha) const {
        GridFunction out = *this;
        for (auto& v : out.values_) v *= alpha;
        return out;
    }

    GridFunction& operator+=(const GridFunction& other) {
        if (!(other.space_ == space_)) throw input_error("adding grid functions on different spaces");
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
        return *this;
    }
    friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }

    GridFunction weighted(const WeightFunction& w) const {
        if (!(w.space() == space_)) throw input_error("weight lives on a different space");
        GridFunction out = *this;
        for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] *= w[i];
        return out;
    }

private:
    ProductSpace space_;
    std::vector<T> values_;
};

/// The indicator of a single product point.
inline GridFunction<double> point_indicator(const ProductSpace& space, std::size_t i1, std::size_t i2) {
    GridFunction<double> f(space);
    f(i1, i2) = 1.0;
    return f;
}

/// L^p norm of nonnegative values against per-point masses.
inline double lp_norm(std::span<const double> values, std::span<const double> masses, Exponent p) {
    if (values.size() != masses.size()) throw input_error("lp_norm: length mismatch");
    if (p.is_infinite()) {
        double m = 0.0;
        for (double v : values) m = std::max(m, v);
        return m;
    }
    std::vector<double> terms(values.size());
    if (p.is_one()) {
        for (std::size_t i = 0; i < values.size(); ++i) terms[i] = values[i] == 0.0 ? 0.0 : masses[i] * values[i];
        return detail::pairwise_sum(terms);
    }
    const double pv = p.value();
    for (std::size_t i = 0; i < values.size(); ++i)
        terms[i] = values[i] == 0.0 ? 0.0 : masses[i] * std::pow(values[i], pv);
    return std::pow(detail::pairwise_sum(terms), 1.0 / pv);
}

/// Inner L^p(mu1) norms of |f(., x2)| for every column x2.
template <Scalar T>
std::vector<double> slice_norms(const GridFunction<T>& f, Exponent p) {
    const auto& sp = f.space();
    std::vector<double> out(sp.n2());
    std::vector<double> col(sp.n1());
    for (std::size_t i2 = 0; i2 < sp.n2(); ++i2) {
        for (std::size_t i1 = 0; i1 < sp.n1(); ++i1) col[i1] = std::abs(f(i1, i2));
        out[i2] = lp_norm(col, sp.factor1().masses(), p);
    }
    return out;
}

/// || x2 -> || (w f)(., x2) ||_{L^p(mu1)} ||_{L^q(mu2)}.
template <Scalar T>
double mixed_norm(const GridFunction<T>& f, Exponent p, Exponent q,
                  const std::optional<WeightFunction>& w = std::nullopt) {
    if (w) return mixed_norm(f.weighted(*w), p, q);
    const auto inner = slice_norms(f, p);
    return lp_norm(inner, f.space().factor2().masses(), q);
}

/// The four corner norms used by the sum and intersection spaces.
struct CornerNorms {
    double l1 = 0.0;        // L^1
    double linf = 0.0;      // L^inf
    double l1inf = 0.0;     // L^{1,inf}
    double linf1 = 0.0;     // L^{inf,1}
};

template <Scalar T>
CornerNorms corner_norms(const GridFunction<T>& f) {
    const Exponent one(1.0), inf = Exponent::infinity();
    return {mixed_norm(f, one, one), mixed_norm(f, inf, inf), mixed_norm(f, one, inf), mixed_norm(f, inf, one)};
}

/// Integral of |f| * |g| against the product measure.
template <Scalar T, Scalar U>
double pairing(const GridFunction<T>& f, const GridFunction<U>& g) {
    if (!(f.space() == g.space())) throw input_error("pairing of functions on different spaces");
    const auto& sp = f.space();
    std::vector<double> terms(sp.size());
    for (std::size_t i = 0; i < sp.size(); ++i) terms[i] = sp.mass(i) * std::abs(f[i]) * std::abs(g[i]);
    return detail::pairwise_sum(terms);
}

namespace detail {

// Nonnegative h on the atoms with ||h||_{p'} <= 1 and sum mass*a*h = ||a||_p.
inline std::vector<double> dual_profile(std::span<const double> a, std::span<const double> masses, Exponent p) {
    std::vector<double> h(a.size(), 0.0);
    const double norm = lp_norm(a, masses, p);
    if (norm == 0.0) return h;
    if (p.is_one()) {
        std::fill(h.begin(), h.end(), 1.0);
    } else if (p.is_infinite()) {
        // Normalized point mass at the largest value; ties go to the heavier atom.
        std::size_t best = 0;
        for (std::size_t i = 1; i < a.size(); ++i)
            if (a[i] > a[best] || (a[i] == a[best] && masses[i] > masses[best])) best = i;
        h[best] = 1.0 / masses[best];
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) h[i] = std::pow(a[i] / norm, p.value() - 1.0);
    }
    return h;
}

}  // namespace detail

/// The explicit nonnegative extremizer g with ||g||_{p',q'} <= 1 attaining
/// the duality pairing with |f|.
template <Scalar T>
GridFunction<double> dual_extremizer(const GridFunction<T>& f, Exponent p, Exponent q) {
    const auto& sp = f.space();
    const auto inner = slice_norms(f, p);
    const auto outer = detail::dual_profile(inner, sp.factor2().masses(), q);
    GridFunction<double> g(sp);
    std::vector<double> col(sp.n1());
    for (std::size_t i2 = 0; i2 < sp.n2(); ++i2) {
        for (std::size_t i1 = 0; i1 < sp.n1(); ++i1) col[i1] = std::abs(f(i1, i2));
        const auto h = detail::dual_profile(col, sp.factor1().masses(), p);
        for (std::size_t i1 = 0; i1 < sp.n1(); ++i1) g(i1, i2) = h[i1] * outer[i2];
    }
    return g;
}

/// sup { int |f| g : g >= 0, ||g||_{p',q'} <= 1 }, evaluated on the explicit
/// extremizer. Equals mixed_norm(f, p, q).
template <Scalar T>
double dual_pairing_sup(const GridFunction<T>& f, Exponent p, Exponent q) {
    return pairing(f, dual_extremizer(f, p, q));
}

}  // namespace mixschur
