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

FiniteFrame gabor4() { return gabor_frame(4, {1.0, 2.0, 1.0, 0.0}); }

std::vector<complex> random_vector(Rng& rng, std::size_t d) {
    std::vector<complex> f(d);
    for (auto& c : f) c = complex(uniform(rng, -1, 1), uniform(rng, -1, 1));
    return f;
}

struct GaborSetup {
    FiniteFrame frame = gabor4();
    RectCovering cov = RectCovering::whole(frame.index());
    WeightFunction u = WeightFunction::constant(frame.index(), 1.0);
    WeightFunction v = [this] {
        const auto wc = covering_weights(cov).continuous;
        std::vector<double> out(frame.index().size());
        for (std::size_t x = 0; x < out.size(); ++x) out[x] = std::max({1.0, frame.vector_norm(x), u[x] / wc[x]});
        return WeightFunction(frame.index(), out);
    }();
    WeightGrid m0 = WeightGrid::constant(frame.index(), frame.index(), 1.0);
    Kernel<double> L = maximal_kernel(reproducing_kernel(frame), cov);
};

}  // namespace

TEST(GaborFrame, Examples) {
    const auto F = gabor4();
    EXPECT_EQ(F.index().size(), 16u);
    for (std::size_t x = 0; x < 16; ++x) EXPECT_NEAR(F.vector_norm(x), 0.5, 1e-15);
    EXPECT_LT(parseval_defect(F), 1e-10);
    const auto one = gabor_frame(1, {complex(0.0, -3.0)});
    EXPECT_NEAR(std::abs(one[0][0] - complex(0.0, -1.0)), 0.0, 1e-15);
    EXPECT_THROW(gabor_frame(3, {0.0, 0.0, 0.0}), input_error);
    EXPECT_THROW(gabor_frame(3, {1.0, 0.0}), input_error);
}

TEST(VoiceTransform, ParsevalLinearityAndZero) {
    Rng rng(40);
    for (std::size_t N : {2u, 3u, 5u}) {
        std::vector<complex> g = random_vector(rng, N);
        const auto F = gabor_frame(N, g);
        const auto f = random_vector(rng, N), h = random_vector(rng, N);
        double e = 0.0;
        for (auto c : f) e += std::norm(c);
        EXPECT_NEAR(std::pow(mixed_norm(voice_transform(F, f), 2.0, 2.0), 2), e, 1e-10);
        std::vector<complex> sum(N);
        for (std::size_t i = 0; i < N; ++i) sum[i] = 2.0 * f[i] + h[i];
        const auto a = voice_transform(F, sum), b = voice_transform(F, f), c = voice_transform(F, h);
        for (std::size_t x = 0; x < a.values().size(); ++x) EXPECT_NEAR(std::abs(a[x] - 2.0 * b[x] - c[x]), 0.0, 1e-12);
        EXPECT_EQ(mixed_norm(voice_transform(F, std::vector<complex>(N)), 2.0, 2.0), 0.0);
    }
    EXPECT_THROW(voice_transform(gabor4(), {1.0}), input_error);
}

TEST(ReproducingKernel, Examples) {
    const auto F = gabor4();
    const auto K = reproducing_kernel(F);
    for (std::size_t x = 0; x < 16; ++x) EXPECT_NEAR(std::abs(K(x, x) - 0.25), 0.0, 1e-15);
    for (std::size_t x = 0; x < 16; ++x)
        for (std::size_t y = 0; y < 16; ++y) EXPECT_NEAR(std::abs(K(x, y) - std::conj(K(y, x))), 0.0, 1e-15);
    const auto KK = compose(K, K);
    for (std::size_t i = 0; i < K.values().size(); ++i) EXPECT_NEAR(std::abs(KK.values()[i] - K.values()[i]), 0.0, 1e-10);

    const ProductSpace idx(FiniteMeasureSpace::counting(3), FiniteMeasureSpace({"0"}, {1.0}));
    const FiniteFrame onb(idx, 3, {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}});
    const auto I = reproducing_kernel(onb);
    const auto expected = identity_kernel(idx);
    for (std::size_t i = 0; i < I.values().size(); ++i) EXPECT_EQ(I.values()[i], complex(expected.values()[i]));
}

TEST(ReproducingKernel, ReproducesVoiceTransforms) {
    Rng rng(41);
    const auto F = gabor_frame(5, random_vector(rng, 5));
    const auto K = reproducing_kernel(F);
    for (int t = 0; t < 10; ++t) {
        const auto V = voice_transform(F, random_vector(rng, 5));
        const auto KV = apply_kernel(K, V);
        for (std::size_t x = 0; x < V.values().size(); ++x) EXPECT_NEAR(std::abs(KV[x] - V[x]), 0.0, 1e-10);
    }
}

TEST(CoorbitReport, SinglePatchPasses) {
    const GaborSetup s;
    const auto r = coorbit_report(s.frame, s.cov, s.u, s.v, s.m0, s.L);
    EXPECT_TRUE(r.covering_valid);
    EXPECT_TRUE(r.v_at_least_one);
    EXPECT_TRUE(r.m0_symmetric);
    EXPECT_TRUE(r.domination);
    EXPECT_TRUE(r.norms_finite);
    EXPECT_TRUE(r.all_pass);
    EXPECT_EQ(r.v_constant, 1.0);
    EXPECT_EQ(r.m0_u_constant, 1.0);
    EXPECT_EQ(r.u_moderateness, 1.0);
    EXPECT_NEAR(r.kpsi_b_m0, norm_B(reproducing_kernel(s.frame)), 1e-15);
    EXPECT_FALSE(r.discretization.has_value());
}

TEST(CoorbitReport, FlagsFailedHypotheses) {
    const GaborSetup s;
    auto small = s.L;
    small.values()[5] *= 0.5;
    EXPECT_FALSE(coorbit_report(s.frame, s.cov, s.u, s.v, s.m0, small).domination);
    EXPECT_FALSE(coorbit_report(s.frame, s.cov, s.u, s.v, s.m0, small).all_pass);

    auto asym = s.m0.kernel();
    asym(0, 1) = 2.0;
    const auto r = coorbit_report(s.frame, s.cov, s.u, s.v, WeightGrid(asym), s.L);
    EXPECT_FALSE(r.m0_symmetric);
    EXPECT_FALSE(r.all_pass);
    EXPECT_EQ(r.m0_u_constant, 2.0);

    const auto low_v = WeightFunction::constant(s.frame.index(), 0.5);
    EXPECT_FALSE(coorbit_report(s.frame, s.cov, s.u, low_v, s.m0, s.L).v_at_least_one);

    const ProductSpace other(FiniteMeasureSpace::counting(2), FiniteMeasureSpace::counting(2));
    EXPECT_THROW(coorbit_report(s.frame, RectCovering::whole(other), s.u, s.v, s.m0, s.L), input_error);
}

TEST(CoorbitReport, DiscretizationMargin) {
    const GaborSetup s;
    const auto whole = coorbit_report(s.frame, s.cov, s.u, s.v, s.m0, s.L, DiscretizationInput{s.cov, std::nullopt, std::nullopt});
    ASSERT_TRUE(whole.discretization.has_value());
    const auto& d = *whole.discretization;
    EXPECT_TRUE(d.covers);
    EXPECT_TRUE(d.majorant_dominates);
    EXPECT_NEAR(d.margin, discretization_margin(d.kpsi_norm, d.l_norm), 1e-12);
    EXPECT_FALSE(d.margin_pass);

    // Singleton patches make the oscillation vanish, so the margin is zero.
    const auto fine = coorbit_report(s.frame, s.cov, s.u, s.v, s.m0, s.L,
                                     DiscretizationInput{RectCovering::singletons(s.frame.index()), std::nullopt, std::nullopt});
    EXPECT_EQ(fine.discretization->margin, 0.0);
    EXPECT_TRUE(fine.discretization->margin_pass);

    // A majorant that does not dominate the oscillation is flagged.
    const Kernel<double> zero(s.frame.index(), s.frame.index());
    const auto bad = coorbit_report(s.frame, s.cov, s.u, s.v, s.m0, s.L, DiscretizationInput{s.cov, std::nullopt, zero});
    EXPECT_FALSE(bad.discretization->majorant_dominates);
    EXPECT_FALSE(bad.discretization->margin_pass);
}

TEST(DiscretizationMargin, Examples) {
    EXPECT_EQ(discretization_margin(1.0, 0.0), 0.0);
    EXPECT_NEAR(discretization_margin(1.0, 0.1), 0.21, 1e-15);
    EXPECT_EQ(discretization_margin(1.0, 0.5), 1.25);
    EXPECT_THROW(discretization_margin(-1.0, 0.5), input_error);
    for (double k = 0.0; k < 3.0; k += 0.25)
        for (double d = 0.0; d < 3.0; d += 0.25) {
            EXPECT_LE(discretization_margin(k, d), discretization_margin(k + 0.1, d));
            EXPECT_LE(discretization_margin(k, d), discretization_margin(k, d + 0.1));
        }
}

TEST(SequenceNorms, Examples) {
    const ProductSpace sp(FiniteMeasureSpace::counting(2), FiniteMeasureSpace({"0"}, {1.0}));
    const auto disjoint = sequence_norms({1.0, 1.0}, RectCovering::singletons(sp), 1.0, 1.0);
    EXPECT_EQ(disjoint.flat, 2.0);
    EXPECT_EQ(disjoint.sharp, 2.0);
    const auto zero = sequence_norms({0.0, 0.0}, RectCovering::singletons(sp), 2.0, 3.0);
    EXPECT_EQ(zero.flat, 0.0);
    EXPECT_EQ(zero.sharp, 0.0);
    const auto big = RectCovering::whole(ProductSpace(FiniteMeasureSpace::counting(2), FiniteMeasureSpace::counting(2)));
    const auto one = sequence_norms({1.0}, big, 1.0, 1.0);
    EXPECT_EQ(one.flat, 4.0);
    EXPECT_EQ(one.sharp, 1.0);
    EXPECT_THROW(sequence_norms({1.0, 2.0}, big, 1.0, 1.0), input_error);
}

TEST(Counterexample, ConstantsMatchSeries) {
    const auto d = counterexample_diagnostics(4, 8, 4, 1);
    EXPECT_NEAR(d.constants.c3, 4.699111668087924, 1e-9);
    EXPECT_NEAR(d.constants.c1, 2.717647058823529, 1e-9);
    EXPECT_NEAR(d.c3_analytic, 4.699111668087924, 1e-12);
    EXPECT_NEAR(d.c1_analytic, 2.717647058823529, 1e-12);
    EXPECT_NEAR(d.l2_full, 2.4904, 1e-4);
    EXPECT_LE(d.l2_truncated, d.l2_full);
    EXPECT_GT(d.lower_bound, 1.0);
    EXPECT_LT(d.lower_bound, 2.5);
    EXPECT_THROW(counterexample_kernel(0, 8), input_error);
    EXPECT_THROW(counterexample_kernel(2, 1), input_error);
}

TEST(Counterexample, C3GrowsWithTruncation) {
    const auto a = counterexample_diagnostics(2, 4, 1, 1), b = counterexample_diagnostics(3, 4, 1, 1);
    EXPECT_NEAR(b.constants.c3 - a.constants.c3, 2 * std::pow(4.0, -2.0 / 3.0), 1e-12);
}
