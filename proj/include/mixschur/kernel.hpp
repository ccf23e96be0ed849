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
#include <vector>

#include "measure.hpp"
#include "mixed_norm.hpp"

namespace mixschur {

/// A kernel K : X x Y -> T stored as a dense |X| x |Y| matrix over flat
/// product indices, x = x1 * |X2| + x2 and y = y1 * |Y2| + y2.
template <Scalar T>
class Kernel {
public:
    using value_type = T;

    Kernel(ProductSpace X, ProductSpace Y)
        : X_(std::move(X)), Y_(std::move(Y)), values_(X_.size() * Y_.size(), T{}) {}

    Kernel(ProductSpace X, ProductSpace Y, std::vector<T> values)
        : X_(std::move(X)), Y_(std::move(Y)), values_(std::move(values)) {
        if (values_.size() != X_.size() * Y_.size())
            throw input_error("kernel shape does not match |X| x |Y|");
    }

    const ProductSpace& codomain() const { return X_; }
    const ProductSpace& domain() const { return Y_; }
    std::size_t rows() const { return X_.size(); }
    std::size_t cols() const { return Y_.size(); }

    const std::vector<T>& values() const { return values_; }
    std::vector<T>& values() { return values_; }

    T& operator()(std::size_t x, std::size_t y) { return values_[x * cols() + y]; }
    const T& operator()(std::size_t x, std::size_t y) const { return values_[x * cols() + y]; }

    /// K((x1,x2),(y1,y2)).
    const T& at(std::size_t x1, std::size_t x2, std::size_t y1, std::size_t y2) const {
        return (*this)(X_.flat(x1, x2), Y_.flat(y1, y2));
    }
    T& at(std::size_t x1, std::size_t x2, std::size_t y1, std::size_t y2) {
        return (*this)(X_.flat(x1, x2), Y_.flat(y1, y2));
    }

    Kernel<double> abs() const {
        std::vector<double> a(values_.size());
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::abs(values_[i]);
        return Kernel<double>(X_, Y_, std::move(a));
    }

    bool is_nonnegative_real() const {
        for (const T& v : values_) {
            if constexpr (std::is_same_v<T, complex>) {
                if (v.imag() != 0.0 || !(v.real() >= 0.0)) return false;
            } else {
                if (!(v >= 0.0)) return false;
            }
        }
        return true;
    }

    Kernel scaled(T alpha) const {
        Kernel out = *this;
        for (auto& v : out.values_) v *= alpha;
        return out;
    }

    /// Entrywise product with a real grid of the same shape (e.g. m * K).
    Kernel times(const Kernel<double>& m) const {
        if (!(m.codomain() == X_) || !(m.domain() == Y_)) throw input_error("weight grid shape mismatch");
        Kernel out = *this;
        for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] *= m.values()[i];
        return out;
    }

private:
    ProductSpace X_;
    ProductSpace Y_;
    std::vector<T> values_;
};

/// (Phi_K f)(x) = sum_y K(x, y) f(y) nu({y}).
template <Scalar T, Scalar U>
auto apply_kernel(const Kernel<T>& K, const GridFunction<U>& f) {
    using R = std::conditional_t<std::is_same_v<T, complex> || std::is_same_v<U, complex>, complex, double>;
    if (!(f.space() == K.domain())) throw input_error("function does not live on the kernel's domain");
    const auto nu = K.domain().masses();
    std::vector<R> fy(K.cols());
    for (std::size_t y = 0; y < K.cols(); ++y) fy[y] = R(f[y]) * nu[y];
    std::vector<R> out(K.rows(), R{});
    for (std::size_t x = 0; x < K.rows(); ++x) {
        R acc{};
        const T* row = &K(x, 0);
        for (std::size_t y = 0; y < K.cols(); ++y) acc += R(row[y]) * fy[y];
        out[x] = acc;
    }
    return GridFunction<R>(K.codomain(), std::move(out));
}

/// K^T(y, x) = K(x, y).
template <Scalar T>
Kernel<T> transpose(const Kernel<T>& K) {
    Kernel<T> out(K.domain(), K.codomain());
    for (std::size_t x = 0; x < K.rows(); ++x)
        for (std::size_t y = 0; y < K.cols(); ++y) out(y, x) = K(x, y);
    return out;
}

/// K_{v,w}(x, y) = v(x) / w(y) * K(x, y).
template <Scalar T>
Kernel<T> weighted_kernel(const Kernel<T>& K, const WeightFunction& v, const WeightFunction& w) {
    if (!(v.space() == K.codomain()) || !(w.space() == K.domain()))
        throw input_error("weights do not match the kernel's spaces");
    Kernel<T> out = K;
    for (std::size_t x = 0; x < K.rows(); ++x)
        for (std::size_t y = 0; y < K.cols(); ++y) out(x, y) *= v[x] / w[y];
    return out;
}

/// Diagonal kernel with entries 1 / nu({y}); the unit of the mass-weighted
/// kernel product and the kernel of the identity operator.
inline Kernel<double> identity_kernel(const ProductSpace& Y) {
    Kernel<double> out(Y, Y);
    for (std::size_t y = 0; y < Y.size(); ++y) out(y, y) = 1.0 / Y.mass(y);
    return out;
}

}  // namespace mixschur
