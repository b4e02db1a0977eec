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

#include <algorithm>

#include "distnum/constructions.hpp"
#include "distnum/errors.hpp"
#include "distnum/graph.hpp"
#include "distnum/perm_group.hpp"
#include "oracles.hpp"

namespace distnum {
namespace {

Permutation cyc(std::size_t m, std::vector<std::vector<std::size_t>> cycles) {
  return Permutation::from_cycles(m, cycles);
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(PermGroup, GenerateSmallGroups) {
  EXPECT_EQ(PermGroup::generate(3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}).order(), 6U);
  EXPECT_EQ(PermGroup::generate(5, {}).order(), 1U);
  EXPECT_EQ(PermGroup::generate(5, {cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})}).order(), 120U);
}

TEST(PermGroup, ElementsMatchNaiveClosure) {
  const std::vector<std::vector<Permutation>> generator_sets{
      {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})},
      {cyc(6, {{0, 1, 2}, {3, 4}}), cyc(6, {{4, 5}})},
      {cyc(5, {{0, 1}, {2, 3}}), cyc(5, {{1, 2, 4}})},
  };
  for (const auto& gens : generator_sets) {
    const PermGroup g = PermGroup::generate(gens.front().degree(), gens);
    const auto expected = oracle::closure(g.degree(), oracle::as_images(gens));
    const auto images = oracle::as_images(g.elements());
    const std::set<oracle::Images> actual(images.begin(), images.end());
    EXPECT_EQ(actual, expected);
    EXPECT_TRUE(std::is_sorted(g.elements().begin(), g.elements().end()));
    EXPECT_TRUE(g.identity().is_identity());
  }
}

TEST(PermGroup, ClosedUnderComposition) {
  const PermGroup g = s4_6d();
  for (const auto& a : g.elements()) {
    for (const auto& b : g.elements()) ASSERT_TRUE(g.contains(a * b));
  }
  for (const auto& gen : g.generators()) EXPECT_TRUE(g.contains(gen));
  EXPECT_EQ(oracle::factorial(6) % g.order(), 0U);
}

TEST(PermGroup, Errors) {
  EXPECT_THROW(PermGroup::generate(3, {cyc(4, {{0, 1}})}), InputError);
  GroupLimits tight;
  tight.max_order = 100;
  EXPECT_THROW(PermGroup::generate(5, {cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})}, tight),
               CapExceeded);
  GroupLimits narrow;
  narrow.max_degree = 4;
  EXPECT_THROW(PermGroup::generate(5, {}, narrow), CapExceeded);
  EXPECT_THROW(PermGroup::from_elements(3, {Permutation(3), cyc(3, {{0, 1, 2}})}),
               ValidationError);
  EXPECT_THROW(PermGroup::from_elements(3, {cyc(3, {{0, 1}})}), ValidationError);
}

TEST(PermGroup, FromElementsRoundTrip) {
  const PermGroup g = symmetric_natural(4);
  const PermGroup h = PermGroup::from_elements(4, g.elements());
  EXPECT_EQ(g, h);
  EXPECT_EQ(PermGroup::generate(4, h.generators()), g);
}

TEST(Orbits, Examples) {
  EXPECT_EQ(orbits(symmetric_natural(3)), (std::vector<PointSet>{{0, 1, 2}}));
  EXPECT_EQ(orbits(PermGroup::trivial(4)).size(), 4U);
  EXPECT_EQ(sorted(orbit_sizes(s4_k4_s3())), (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(sorted(orbit_sizes(s4_k4_s3_on_10())), (std::vector<std::size_t>{4, 6}));
  EXPECT_TRUE(is_transitive(petersen_aut()));
  EXPECT_FALSE(is_transitive(PermGroup::trivial(2)));
}

TEST(Orbits, MatchNaiveSweep) {
  for (const PermGroup& g : {s4_k4_s3(), table1_group(Table1Row::PGL25_PSL_S2, 2, 1),
                             formula_group({4, 1, 1, 1, 1}).group}) {
    EXPECT_EQ(sorted(orbit_sizes(g)),
              sorted(oracle::orbit_sizes(g.degree(), oracle::as_images(g.elements()))));
  }
}

TEST(Stabilizers, SetwiseExamples) {
  const PointSet zero{0};
  const Subgroup st = setwise_stabilizer(symmetric_natural(3), zero);
  EXPECT_EQ(st.order(), 2U);
  EXPECT_TRUE(st.contains(cyc(3, {{1, 2}})));
  const PermGroup g = s4_6c();
  const PointSet all{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(setwise_stabilizer(g, all).group(), g);
  const PointSet one{0};
  EXPECT_EQ(setwise_stabilizer(petersen_aut(), one).order(), 12U);
}

TEST(Stabilizers, OrbitStabilizer) {
  for (const PermGroup& g : {petersen_aut(), s6_on_10(), s4_k4_s3(), pgl25(),
                             formula_group({4, 1, 1, 0, 1}).group}) {
    for (std::size_t x = 0; x < g.degree(); ++x) {
      const auto p = static_cast<Point>(x);
      EXPECT_EQ(orbit(g, p).size() * point_stabilizer(g, p).order(), g.order());
    }
  }
}

TEST(Stabilizers, PointwiseIsInsideSetwise) {
  const PermGroup g = s6_on_10();
  const PointSet s{0, 3, 7};
  const auto pointwise = pointwise_stabilizer(g, s);
  const auto setwise = setwise_stabilizer(g, s);
  EXPECT_TRUE(pointwise.group().is_subgroup_of(setwise.group()));
  for (const auto& e : pointwise.elements()) {
    for (Point x : s) EXPECT_EQ(e[x], x);
  }
}

TEST(Kernel, Examples) {
  const PointSet all4{0, 1, 2, 3};
  EXPECT_TRUE(kernel_on_subset(symmetric_natural(4), all4).is_trivial());
  const PermGroup s3s3 = direct_sum(symmetric_natural(3), symmetric_natural(3));
  const PointSet first{0, 1, 2};
  EXPECT_EQ(kernel_on_subset(s3s3, first).order(), 6U);
  // The S_3 constituent sees S_4 only modulo K_4.
  const PointSet s3_orbit{4, 5, 6};
  EXPECT_EQ(kernel_on_subset(s4_k4_s3(), s3_orbit).order(), 4U);
  const PointSet coset_orbit{4, 5, 6, 7, 8, 9};
  EXPECT_EQ(kernel_on_subset(s4_k4_s3_on_10(), coset_orbit).order(), 4U);
  const PointSet not_invariant{0};
  EXPECT_THROW(kernel_on_subset(s3s3, not_invariant), InputError);
}

TEST(Kernel, IsNormal) {
  const PermGroup g = table1_group(Table1Row::S6_10, 1, 0);
  for (const auto& block : orbits(g)) {
    const Subgroup k = kernel_on_subset(g, block);
    EXPECT_TRUE(k.is_normal());
    for (const auto& x : g.elements()) {
      for (const auto& h : k.elements()) ASSERT_TRUE(k.contains(x.inverse() * h * x));
    }
  }
}

TEST(Restriction, ConstituentOnABlock) {
  const PermGroup g = s4_k4_s3();
  const PointSet block{4, 5, 6};
  const PermGroup r = restrict_to(g, block);
  EXPECT_EQ(r.degree(), 3U);
  EXPECT_EQ(r, symmetric_natural(3));
}

TEST(Conjugation, PreservesOrderAndShape) {
  const PermGroup g = s4_6c();
  const Permutation relabel({5, 3, 1, 0, 2, 4});
  const PermGroup h = conjugate_group(g, relabel);
  EXPECT_EQ(h.order(), g.order());
  EXPECT_TRUE(is_transitive(h));
  EXPECT_TRUE(h.contains(g.generators().front().conjugate(relabel)));
}

TEST(Subgroup, RejectsNonSubgroups) {
  EXPECT_THROW(Subgroup(alternating_natural(4), symmetric_natural(4)), InputError);
  EXPECT_TRUE(Subgroup(symmetric_natural(4), alternating_natural(4)).is_normal());
}

}  // namespace
}  // namespace distnum
