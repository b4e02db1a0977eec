// Copyright 2026 The distnum Authors
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

#include "distnum/constructions.hpp"
#include "distnum/errors.hpp"
#include "distnum/formula.hpp"
#include "oracles.hpp"

namespace distnum {
namespace {

TEST(CeilRoot, MatchesCountingOracle) {
  for (std::uint64_t x = 0; x <= 300; ++x) {
    for (std::uint64_t k = 1; k <= 9; ++k) {
      ASSERT_EQ(ceil_root(x, k), oracle::ceil_root(x, k)) << x << " " << k;
    }
  }
  EXPECT_EQ(ceil_root(UINT64_MAX, 1), UINT64_MAX);
  EXPECT_EQ(ceil_root(UINT64_MAX, 2), 4294967296ULL);
  EXPECT_EQ(ceil_root(1ULL << 62, 62), 2U);
  EXPECT_THROW(ceil_root(5, 0), InputError);
}

TEST(PredictedD, Examples) {
  EXPECT_EQ(predicted_d({5, 1, 0, 1, 0}), 4U);
  EXPECT_EQ(predicted_d({4, 1, 0, 0, 0}), 4U);
  EXPECT_EQ(predicted_d({5, 2, 0, 0, 0}), 3U);
  EXPECT_EQ(predicted_d({6, 0, 1, 0, 0}), 3U);
  EXPECT_EQ(predicted_d({6, 2, 0, 0, 3}), 3U);
  // A 2n-orbit contributes two A_n-orbits to the exponent.
  EXPECT_EQ(predicted_d({5, 1, 1, 0, 0}), 2U);
  EXPECT_THROW(predicted_d({2, 1, 0, 0, 0}), InputError);
  EXPECT_THROW(predicted_d({5, 0, 0, 2, 0}), InputError);
}

TEST(OrbitProfile, Examples) {
  EXPECT_EQ(orbit_profile(parallel_power(symmetric_natural(5), 2), 5),
            (OrbitProfile{5, 2, 0, 0, 0}));
  const PermGroup glued = subdirect_sum(index_two_pairing(
      CosetSpace(symmetric_natural(4), alternating_natural(4)),
      CosetSpace(symmetric_natural(2), PermGroup::trivial(2))));
  EXPECT_EQ(orbit_profile(glued, 4), (OrbitProfile{4, 1, 0, 1, 0}));
  EXPECT_EQ(orbit_profile(formula_group({4, 2, 1, 1, 2}).group, 4),
            (OrbitProfile{4, 2, 1, 1, 2}));
}

TEST(OrbitProfile, LargeOrbitSignal) {
  // S_5 on the cosets of the S_3 fixing 3 and 4: 20 points.
  const PermGroup s5 = symmetric_natural(5);
  const PermGroup s3 = PermGroup::generate(5, {Permutation::from_cycles(5, {{0, 1}}),
                                               Permutation::from_cycles(5, {{0, 1, 2}})});
  const PermGroup g = coset_action(s5, s3).image;
  try {
    orbit_profile(g, 5);
    FAIL() << "expected a large-orbit signal";
  } catch (const LargeOrbit& e) {
    EXPECT_EQ(e.orbit_size(), 20U);
  }
  EXPECT_THROW(orbit_profile(cyclic_natural(6), 3), InputError);
}

TEST(ProductLabeling, Examples) {
  const TupleLabeling t = distinct_tuples(4, 2, 2);
  EXPECT_EQ(t.tuples, (std::vector<std::vector<Label>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  const PermGroup s4s4 = formula_group({4, 2, 0, 0, 0}).group;
  EXPECT_TRUE(is_distinguishing(s4s4, product_labeling(4, 2, 0, 2)));

  const Labeling five = product_labeling(5, 1, 3, 5);
  EXPECT_EQ(five.labels(), (std::vector<Label>{1, 2, 3, 4, 5, 1, 1, 1}));
  EXPECT_TRUE(is_distinguishing(formula_group({5, 1, 0, 0, 3}).group, five));
  EXPECT_THROW(product_labeling(5, 2, 0, 2), Infeasible);
}

TEST(AlternatingLabeling, Examples) {
  const OrbitProfile double6{6, 0, 1, 0, 0};
  const Labeling l6 = alternating_labeling(double6, 3);
  EXPECT_LE(l6.labels_used(), 3U);
  EXPECT_TRUE(is_distinguishing(formula_group(double6).group, l6));

  const OrbitProfile q5{5, 1, 0, 1, 0};
  const Labeling l5 = alternating_labeling(q5, 4);
  EXPECT_TRUE(is_distinguishing(formula_group(q5).group, l5));
  EXPECT_TRUE(alternating_criterion(std::span<const Label>(l5.labels()).first(5)));
  EXPECT_NE(l5[5], l5[6]);

  const OrbitProfile mixed{4, 1, 1, 0, 0};
  const TupleLabeling tuples = alternating_tuples(mixed, 2);
  EXPECT_EQ(tuples.width(), 3U);
  EXPECT_EQ(tuples.tuples.size(), 4U);
  EXPECT_TRUE(is_distinguishing(formula_group(mixed).group, alternating_labeling(mixed, 2)));

  EXPECT_THROW(alternating_labeling({6, 1, 0, 1, 0}, 4), Infeasible);
  EXPECT_THROW(alternating_labeling({6, 2, 0, 0, 0}, 3), InputError);
}

TEST(AlternatingLabeling, RepairsEqualHalves) {
  // n = d^m with a 2n-orbit and no 2-orbit: the lexicographic tuples give
  // both halves the same label multiset, which an odd element could swap.
  const OrbitProfile p{4, 0, 1, 0, 0};
  const TupleLabeling t = alternating_tuples(p, 2);
  std::vector<Label> c0, c1;
  for (const auto& tuple : t.tuples) {
    c0.push_back(tuple[0]);
    c1.push_back(tuple[1]);
  }
  std::sort(c0.begin(), c0.end());
  std::sort(c1.begin(), c1.end());
  EXPECT_NE(c0, c1);
  EXPECT_TRUE(is_distinguishing(formula_group(p).group, alternating_labeling(p, 2)));
  // n = d^m + 1 reuses one tuple.
  const OrbitProfile q{5, 0, 1, 0, 0};
  const TupleLabeling u = alternating_tuples(q, 2);
  EXPECT_EQ(u.tuples.size(), 5U);
  EXPECT_TRUE(is_distinguishing(formula_group(q).group, alternating_labeling(q, 2)));
}

TEST(AlternatingCriterion, Examples) {
  EXPECT_TRUE(alternating_criterion(std::vector<Label>{1, 2, 3, 4}));
  EXPECT_TRUE(alternating_criterion(std::vector<Label>{1, 1, 2, 3}));
  EXPECT_FALSE(alternating_criterion(std::vector<Label>{1, 1, 2, 2}));
  EXPECT_FALSE(alternating_criterion(std::vector<Label>{1, 1, 1, 2}));
}

}  // namespace
}  // namespace distnum
