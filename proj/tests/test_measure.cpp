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

#include "mixschur/measure.hpp"

using namespace mixschur;

TEST(FiniteMeasureSpace, CountingAndLookup) {
    const auto s = FiniteMeasureSpace::counting(3);
    EXPECT_EQ(s.size(), 3u);
    EXPECT_EQ(s.index_of("2"), 2u);
    EXPECT_DOUBLE_EQ(s.total_mass(), 3.0);
}

TEST(FiniteMeasureSpace, RejectsBadInput) {
    EXPECT_THROW(FiniteMeasureSpace({}, {}), input_error);
    EXPECT_THROW(FiniteMeasureSpace({"a", "b"}, {1.0}), input_error);
    EXPECT_THROW(FiniteMeasureSpace({"a"}, {0.0}), input_error);
    EXPECT_THROW(FiniteMeasureSpace({"a"}, {-1.0}), input_error);
    EXPECT_THROW(FiniteMeasureSpace({"a"}, {std::nan("")}), input_error);
    EXPECT_THROW(FiniteMeasureSpace({"a", "a"}, {1.0, 2.0}), input_error);
    EXPECT_THROW(FiniteMeasureSpace::counting(2).index_of("x"), input_error);
}

TEST(FiniteMeasureSpace, SubsetMassCountsRepeatsOnce) {
    const FiniteMeasureSpace s({"a", "b", "c"}, {0.5, 2.0, 0.25});
    const std::vector<std::size_t> idx{0, 2, 0};
    EXPECT_DOUBLE_EQ(subset_mass(s, std::span<const std::size_t>(idx)), 0.75);
    EXPECT_DOUBLE_EQ(subset_mass(s, std::vector<std::string>{"b", "c"}), 2.25);
    EXPECT_DOUBLE_EQ(subset_mass(s, std::span<const std::size_t>()), 0.0);
    const std::vector<std::size_t> bad{3};
    EXPECT_THROW(subset_mass(s, std::span<const std::size_t>(bad)), input_error);
}

TEST(ProductSpace, FlatIndexing) {
    const ProductSpace p(FiniteMeasureSpace::with_masses({1.0, 2.0}), FiniteMeasureSpace::with_masses({0.5, 3.0, 1.0}));
    EXPECT_EQ(p.size(), 6u);
    EXPECT_EQ(p.flat(1, 2), 5u);
    EXPECT_EQ(p.split(4), std::make_pair(std::size_t{1}, std::size_t{1}));
    EXPECT_DOUBLE_EQ(p.mass(1, 1), 6.0);
    EXPECT_DOUBLE_EQ(p.mass(4), 6.0);
    const auto m = p.masses();
    EXPECT_DOUBLE_EQ(m[0], 0.5);
    EXPECT_DOUBLE_EQ(m[5], 2.0);
}

TEST(WeightFunction, ValidatesAndInverts) {
    const ProductSpace p(FiniteMeasureSpace::counting(1), FiniteMeasureSpace::counting(2));
    EXPECT_THROW(WeightFunction(p, {1.0}), input_error);
    EXPECT_THROW(WeightFunction(p, {1.0, 0.0}), input_error);
    const WeightFunction w(p, {2.0, 4.0});
    EXPECT_DOUBLE_EQ(w.reciprocal()(0, 1), 0.25);
}

TEST(PairwiseSum, MatchesNaiveOnSmallInput) {
    std::vector<double> v(100);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i);
    EXPECT_DOUBLE_EQ(detail::pairwise_sum(v), 4950.0);
}
