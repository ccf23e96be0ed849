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
#include <gtest/gtest.h>

#include "mixschur/mixschur.hpp"
#include "support.hpp"

using namespace mixschur;
using namespace mixschur::testing;

namespace {

const Exponent kOne(1.0);
const Exponent kInf = Exponent::infinity();

Kernel<double> plain(std::vector<double> rows_major, std::size_t n = 2) {
    const auto c = FiniteMeasureSpace::counting(n);
    return lift_plain_kernel(c, c, std::move(rows_major));
}

// a (x) b with a = [[1,0],[0,1]] on the first factors and b = [[1,1],[1,1]] on the second.
Kernel<double> tensor_ab() {
    const auto c = FiniteMeasureSpace::counting(2);
    const ProductSpace X(c, c);
    Kernel<double> K(X, X);
    const double a[2][2] = {{1, 0}, {0, 1}};
    for (std::size_t x1 = 0; x1 < 2; ++x1)
        for (std::size_t x2 = 0; x2 < 2; ++x2)
            for (std::size_t y1 = 0; y1 < 2; ++y1)
                for (std::size_t y2 = 0; y2 < 2; ++y2) K.at(x1, x2, y1, y2) = a[x1][y1];
    return K;
}

// The fixed instance of tests/oracle/derive_values.py.
Kernel<double> reference_kernel() {
    const ProductSpace X(FiniteMeasureSpace::with_masses({0.5, 2.0}), FiniteMeasureSpace::with_masses({1.0, 0.25}));
    const ProductSpace Y(FiniteMeasureSpace::with_masses({1.0, 0.5, 3.0}), FiniteMeasureSpace::with_masses({2.0, 0.75}));
    std::vector<double> v(24);
    for (int i = 0; i < 24; ++i) v[i] = ((i + 1) % 7) / 4.0;
    return Kernel<double>(X, Y, v);
}

}  // namespace

TEST(ApplyKernel, IdentityAndRowSums) {
    const auto K = plain({1, 2, 3, 4});
    const auto f = apply_kernel(K, GridFunction<double>(K.domain(), {1.0, 1.0}));
    EXPECT_EQ(f.values(), (std::vector<double>{3.0, 7.0}));
    const auto I = plain({1, 0, 0, 1});
    const GridFunction<double> g(I.domain(), {2.5, -1.0});
    EXPECT_EQ(apply_kernel(I, g).values(), g.values());
    const auto Z = plain({0, 0, 0, 0});
    EXPECT_EQ(apply_kernel(Z, g).values(), (std::vector<double>{0.0, 0.0}));
}

TEST(ApplyKernel, ReferenceInstance) {
    const auto K = reference_kernel();
    const GridFunction<double> f(K.domain(), {1.0, -2.0, 0.5, 3.0, 0.0, 1.5});
    const auto g = apply_kernel(K, f);
    const double expected[] = {6.3125, 4.9375, 7.0625, 3.0625};
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(g[i], expected[i], 1e-14);
    EXPECT_NEAR(mixed_norm(g, 1.5, 3.0), 12.87243286748142, 1e-12);
}

TEST(ApplyKernel, DomainMismatchThrows) {
    const auto K = plain({1, 2, 3, 4});
    const ProductSpace other(FiniteMeasureSpace::counting(3), FiniteMeasureSpace::counting(1));
    EXPECT_THROW(apply_kernel(K, GridFunction<double>(other)), input_error);
}

TEST(ApplyKernel, Linearity) {
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        const auto X = random_product(rng), Y = random_product(rng);
        const auto K = random_complex_kernel(rng, X, Y);
        const auto f = random_complex_function(rng, Y), g = random_complex_function(rng, Y);
        const complex a(0.3, -1.2);
        const auto lhs = apply_kernel(K, f.scaled(a) + g);
        const auto rhs = apply_kernel(K, f).scaled(a) + apply_kernel(K, g);
        for (std::size_t x = 0; x < X.size(); ++x) EXPECT_NEAR(std::abs(lhs[x] - rhs[x]), 0.0, 1e-12);
    }
}

TEST(SchurConstants, SpecExamples) {
    EXPECT_EQ(schur_constants(plain({1, 2, 3, 4})), (SchurConstants{7, 6, 6, 7}));
    EXPECT_EQ(schur_constants(tensor_ab()), (SchurConstants{2, 2, 2, 2}));
    EXPECT_EQ(schur_constants(plain({0, 0, 0, 0})), (SchurConstants{0, 0, 0, 0}));
}

TEST(SchurConstants, ReferenceInstance) {
    const auto c = schur_constants(reference_kernel());
    EXPECT_NEAR(c.c1, 12.875, 1e-14);
    EXPECT_NEAR(c.c2, 3.75, 1e-14);
    EXPECT_NEAR(c.c3, 8.3125, 1e-14);
    EXPECT_NEAR(c.c4, 6.59375, 1e-14);
}

TEST(SchurConstants, TransposeSwaps) {
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        const auto K = random_complex_kernel(rng, random_product(rng), random_product(rng));
        const auto c = schur_constants(K), d = schur_constants(transpose(K));
        EXPECT_EQ(d.c1, c.c2);
        EXPECT_EQ(d.c2, c.c1);
        EXPECT_EQ(d.c3, c.c4);
        EXPECT_EQ(d.c4, c.c3);
    }
}

TEST(SchurBound, Branches) {
    const SchurConstants c{7, 6, 6, 7};
    EXPECT_EQ(schur_bound(c, 1.0, 2.0), 7.0);
    EXPECT_EQ(schur_bound(c, kInf, 1.0), 7.0);
    EXPECT_EQ(schur_bound(SchurConstants{1, 1, 5, 3}, 2.0, 2.0), 5.0);
    EXPECT_EQ(schur_bound(SchurConstants{1, 1, 5, 3}, 3.0, 2.0), 3.0);
    EXPECT_EQ(schur_bound(SchurConstants{}, 1.0, 1.0), 0.0);
}

TEST(WeightedKernel, ScalingAndRoundTrip) {
    Rng rng(6);
    const auto X = random_product(rng), Y = random_product(rng);
    const auto K = random_complex_kernel(rng, X, Y);
    const auto one_x = WeightFunction::constant(X, 1.0), one_y = WeightFunction::constant(Y, 1.0);
    EXPECT_EQ(weighted_kernel(K, one_x, one_y).values(), K.values());
    const auto K2 = weighted_kernel(K, WeightFunction::constant(X, 2.0), one_y);
    for (std::size_t i = 0; i < K.values().size(); ++i) EXPECT_EQ(K2.values()[i], 2.0 * K.values()[i]);
    const auto v = random_weight(rng, X), w = random_weight(rng, Y);
    const auto back = weighted_kernel(weighted_kernel(K, v, w), v.reciprocal(), w.reciprocal());
    for (std::size_t i = 0; i < K.values().size(); ++i) EXPECT_NEAR(std::abs(back.values()[i] - K.values()[i]), 0.0, 1e-14);
}

TEST(WeightedKernel, WeightedConsistency) {
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        const auto X = random_product(rng), Y = random_product(rng);
        const auto K = random_complex_kernel(rng, X, Y);
        const auto v = random_weight(rng, X), w = random_weight(rng, Y);
        const auto f = random_complex_function(rng, Y);
        // Phi_{K_{v,w}}(w f) = v Phi_K f.
        const auto lhs = apply_kernel(weighted_kernel(K, v, w), f.weighted(w));
        const auto rhs = apply_kernel(K, f).weighted(v);
        for (auto p : exponent_grid())
            for (auto q : exponent_grid()) EXPECT_NEAR(mixed_norm(lhs, p, q), mixed_norm(rhs, p, q), 1e-12 * (1 + mixed_norm(rhs, p, q)));
    }
}

TEST(CornerOpnorm, SpecExamples) {
    const auto K = plain({1, 2, 3, 4});
    EXPECT_EQ(corner_opnorm(K, kOne, kOne), 6.0);
    EXPECT_EQ(corner_opnorm(K, kInf, kInf), 7.0);
    EXPECT_EQ(corner_opnorm(tensor_ab(), kOne, kInf), 2.0);
    const auto Z = plain({0, 0, 0, 0});
    for (auto p : {kOne, kInf})
        for (auto q : {kOne, kInf}) EXPECT_EQ(corner_opnorm(Z, p, q), 0.0);
}

TEST(CornerOpnorm, ReferenceInstance) {
    EXPECT_NEAR(corner_opnorm(reference_kernel(), kOne, kInf), 8.3125, 1e-14);
}

TEST(CornerOpnorm, Errors) {
    EXPECT_THROW(corner_opnorm(plain({1, -2, 3, 4}), kOne, kOne), input_error);
    EXPECT_THROW(corner_opnorm(plain({1, 2, 3, 4}), 2.0, kOne), input_error);
}
