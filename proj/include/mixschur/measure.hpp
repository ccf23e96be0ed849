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
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mixschur {

// Raised for every violated precondition on user-supplied data: shape
// mismatches, nonpositive masses, unknown identifiers.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

inline double safe_ratio(double num, double den) {
    if (num == 0.0) return 0.0;
    return num / den;
}

}  // namespace detail

/// A finite set of labelled atoms, each carrying a strictly positive mass.
///
/// Since every atom has positive mass there are no null sets: an essential
/// supremum over such a space is simply the maximum over its points, and
/// integrals are mass-weighted sums. Every module relies on this.
class FiniteMeasureSpace {
public:
    FiniteMeasureSpace(std::vector<std::string> ids, std::vector<double> masses)
        : ids_(std::move(ids)), masses_(std::move(masses)) {
        if (ids_.empty()) throw input_error("measure space needs at least one point");
        if (ids_.size() != masses_.size())
            throw input_error("point and mass lists differ in length");
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            const double m = masses_[i];
            if (!std::isfinite(m) || !(m > 0.0))
                throw input_error("mass of point '" + ids_[i] + "' must be positive and finite");
            if (!index_.emplace(ids_[i], i).second)
                throw input_error("duplicate point identifier '" + ids_[i] + "'");
        }
    }

    /// Counting measure on `n` points labelled "0", "1", ...
    static FiniteMeasureSpace counting(std::size_t n) {
        return uniform(n, 1.0);
    }

    static FiniteMeasureSpace uniform(std::size_t n, double mass) {
        std::vector<std::string> ids;
        ids.reserve(n);
        for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
        return FiniteMeasureSpace(std::move(ids), std::vector<double>(n, mass));
    }

    static FiniteMeasureSpace with_masses(std::vector<double> masses) {
        std::vector<std::string> ids;
        ids.reserve(masses.size());
        for (std::size_t i = 0; i < masses.size(); ++i) ids.push_back(std::to_string(i));
        return FiniteMeasureSpace(std::move(ids), std::move(masses));
    }

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::vector<double>& masses() const { return masses_; }
    double mass(std::size_t i) const { return masses_[i]; }

    std::size_t index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw input_error("unknown point identifier '" + id + "'");
        return it->second;
    }

    std::vector<std::size_t> indices_of(const std::vector<std::string>& subset) const {
        std::vector<std::size_t> out;
        out.reserve(subset.size());
        for (const auto& id : subset) out.push_back(index_of(id));
        return out;
    }

    double total_mass() const { return detail::pairwise_sum(masses_); }

    friend bool operator==(const FiniteMeasureSpace& a, const FiniteMeasureSpace& b) {
        return a.ids_ == b.ids_ && a.masses_ == b.masses_;
    }

private:
    std::vector<std::string> ids_;
    std::vector<double> masses_;
    std::map<std::string, std::size_t> index_;
};

inline FiniteMeasureSpace build_space(std::vector<std::string> ids, std::vector<double> masses) {
    return FiniteMeasureSpace(std::move(ids), std::move(masses));
}

/// Mass of a subset given by point indices. Repeated indices count once.
inline double subset_mass(const FiniteMeasureSpace& space, std::span<const std::size_t> subset) {
    std::vector<char> seen(space.size(), 0);
    std::vector<double> parts;
    for (std::size_t i : subset) {
        if (i >= space.size()) throw input_error("subset index out of range");
        if (!seen[i]) {
            seen[i] = 1;
            parts.push_back(space.mass(i));
        }
    }
    return detail::pairwise_sum(parts);
}

inline double subset_mass(const FiniteMeasureSpace& space, const std::vector<std::string>& subset) {
    const auto idx = space.indices_of(subset);
    return subset_mass(space, std::span<const std::size_t>(idx));
}

/// X = X1 x X2 with the product measure. Points are addressed either by the
/// pair (i1, i2) or by the flat index i1 * |X2| + i2.
class ProductSpace {
public:
    ProductSpace(FiniteMeasureSpace f1, FiniteMeasureSpace f2)
        : f1_(std::move(f1)), f2_(std::move(f2)) {}

    const FiniteMeasureSpace& factor1() const { return f1_; }
    const FiniteMeasureSpace& factor2() const { return f2_; }
    std::size_t n1() const { return f1_.size(); }
    std::size_t n2() const { return f2_.size(); }
    std::size_t size() const { return n1() * n2(); }

    std::size_t flat(std::size_t i1, std::size_t i2) const { return i1 * n2() + i2; }
    std::pair<std::size_t, std::size_t> split(std::size_t i) const { return {i / n2(), i % n2()}; }

    double mass(std::size_t i1, std::size_t i2) const { return f1_.mass(i1) * f2_.mass(i2); }
    double mass(std::size_t i) const {
        const auto [i1, i2] = split(i);
        return mass(i1, i2);
    }

    /// Flat vector of product masses.
    std::vector<double> masses() const {
        std::vector<double> out(size());
        for (std::size_t i1 = 0; i1 < n1(); ++i1)
            for (std::size_t i2 = 0; i2 < n2(); ++i2) out[flat(i1, i2)] = mass(i1, i2);
        return out;
    }

    double rectangle_mass(std::span<const std::size_t> v, std::span<const std::size_t> w) const {
        return subset_mass(f1_, v) * subset_mass(f2_, w);
    }

    friend bool operator==(const ProductSpace& a, const ProductSpace& b) {
        return a.f1_ == b.f1_ && a.f2_ == b.f2_;
    }

private:
    FiniteMeasureSpace f1_;
    FiniteMeasureSpace f2_;
};

/// A strictly positive, finite function on a product space.
class WeightFunction {
public:
    WeightFunction(ProductSpace space, std::vector<double> values)
        : space_(std::move(space)), values_(std::move(values)) {
        if (values_.size() != space_.size()) throw input_error("weight shape does not match its space");
        for (double v : values_)
            if (!std::isfinite(v) || !(v > 0.0)) throw input_error("weights must be positive and finite");
    }

    static WeightFunction constant(const ProductSpace& space, double c) {
        return WeightFunction(space, std::vector<double>(space.size(), c));
    }

    const ProductSpace& space() const { return space_; }
    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    double operator()(std::size_t i1, std::size_t i2) const { return values_[space_.flat(i1, i2)]; }

    WeightFunction reciprocal() const {
        std::vector<double> r(values_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = 1.0 / values_[i];
        return WeightFunction(space_, std::move(r));
    }

private:
    ProductSpace space_;
    std::vector<double> values_;
};

}  // namespace mixschur
