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

#include <set>

#include "distnum/constructions.hpp"
#include "distnum/cosets.hpp"
#include "distnum/errors.hpp"

namespace distnum {
namespace {

PermGroup klein4() {
  return PermGroup::generate(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                 Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
}

PermGroup a_n_minus_1(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i + 1 < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return PermGroup::generate(n, gens);
}

// Intersection of all conjugates of h.
std::set<Permutation> core(const PermGroup& g, const PermGroup& h) {
  std::set<Permutation> out(h.elements().begin(), h.elements().end());
  for (const auto& x : g.elements()) {
    std::set<Permutation> keep;
    for (const auto& e : out) {
      if (h.contains(x * e * x.inverse())) keep.insert(e);
    }
    out = std::move(keep);
  }
  return out;
}

TEST(CosetSpace, PartitionsTheParent) {
  const PermGroup s4 = symmetric_natural(4);
  const CosetSpace space(s4, klein4());
  EXPECT_EQ(space.index(), 6U);
  EXPECT_TRUE(space.representatives().front().is_identity());
  std::set<Permutation> seen;
  for (std::size_t c = 0; c < space.index(); ++c) {
    const auto members = space.members(c);
    EXPECT_EQ(members.size(), 4U);
    // Representatives are the least members.
    EXPECT_EQ(members.front(), space.representatives()[c]);
    for (const auto& m : members) {
      EXPECT_TRUE(seen.insert(m).second);
      EXPECT_EQ(space.coset_of(m), c);
    }
  }
  EXPECT_EQ(seen.size(), 24U);
}

TEST(CosetSpace, RejectsNonSubgroup) {
  EXPECT_THROW(CosetSpace(alternating_natural(4), symmetric_natural(4)), InputError);
}

TEST(CosetAction, Examples) {
  const PermGroup s4 = symmetric_natural(4);
  const auto sign = coset_action(s4, alternating_natural(4));
  EXPECT_EQ(sign.image.degree(), 2U);
  EXPECT_EQ(sign.image.order(), 2U);
  EXPECT_EQ(sign.kernel.group(), alternating_natural(4));

  const auto double_action = coset_action(symmetric_natural(5), a_n_minus_1(5));
  EXPECT_EQ(double_action.image.degree(), 10U);
  EXPECT_TRUE(double_action.is_faithful());
  EXPECT_TRUE(is_transitive(double_action.image));

  const auto quotient = coset_action(s4, klein4());
  EXPECT_EQ(quotient.image.degree(), 6U);
  EXPECT_EQ(quotient.kernel.order(), 4U);
  EXPECT_EQ(quotient.image.order(), 6U);
}

TEST(CosetAction, KernelIsTheCore) {
  const PermGroup s5 = symmetric_natural(5);
  const std::vector<PermGroup> subgroups{
      alternating_natural(5), a_n_minus_1(5),
      PermGroup::generate(5, {Permutation::from_cycles(5, {{0, 1}})}),
      PermGroup::generate(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})}),
      PermGroup::trivial(5)};
  for (const auto& h : subgroups) {
    const auto action = coset_action(s5, h);
    EXPECT_EQ(action.image.degree(), s5.order() / h.order());
    const auto expected = core(s5, h);
    EXPECT_EQ(std::set<Permutation>(action.kernel.elements().begin(),
                                    action.kernel.elements().end()),
              expected);
    EXPECT_EQ(action.image.order() * action.kernel.order(), s5.order());
  }
}

TEST(CosetAction, ImageIsHomomorphic) {
  const auto action = coset_action(symmetric_natural(4), a_n_minus_1(4));
  const PermGroup& g = action.space.parent();
  for (const auto& a : g.elements()) {
    for (const auto& b : g.generators()) {
      EXPECT_EQ(action.image_of(a * b), action.image_of(a) * action.image_of(b));
    }
  }
}

TEST(QuotientIso, ValidatesNormalityAndMultiplicativity) {
  const PermGroup s4 = symmetric_natural(4);
  const PermGroup s3 = symmetric_natural(3);
  const CosetSpace left(s4, klein4());
  const CosetSpace right(s3, PermGroup::trivial(3));
  // A bijection that is not a homomorphism.
  EXPECT_THROW(QuotientIso(left, right, {0, 2, 1, 3, 4, 5}), ValidationError);
  EXPECT_THROW(QuotientIso(left, right, {0, 0, 1, 2, 3, 4}), ValidationError);
  const PermGroup non_normal = PermGroup::generate(4, {Permutation::from_cycles(4, {{0, 1}})});
  EXPECT_THROW(index_two_pairing(CosetSpace(s4, non_normal), CosetSpace(s3, s3)),
               ValidationError);
  EXPECT_THROW(index_two_pairing(left, CosetSpace(s3, alternating_natural(3))), ValidationError);
}

TEST(QuotientIso, EnumeratesFactorIsomorphisms) {
  // S_4/K_4 and S_3 are both S_3, which has six automorphisms.
  const CosetSpace left(symmetric_natural(4), klein4());
  const CosetSpace right(symmetric_natural(3), PermGroup::trivial(3));
  std::size_t count = 0;
  for_each_quotient_iso(left, right, [&](const QuotientIso& phi) {
    EXPECT_EQ(phi.inverse().inverse().pairing(), phi.pairing());
    ++count;
    return true;
  });
  EXPECT_EQ(count, 6U);
  EXPECT_TRUE(find_quotient_iso(left, right).has_value());
  EXPECT_FALSE(find_quotient_iso(left, CosetSpace(symmetric_natural(3), alternating_natural(3)))
                   .has_value());
}

TEST(QuotientIso, IndexTwoPairing) {
  const auto phi = index_two_pairing(CosetSpace(symmetric_natural(4), alternating_natural(4)),
                                     CosetSpace(symmetric_natural(2), PermGroup::trivial(2)));
  EXPECT_EQ(phi.pairing(), (std::vector<std::size_t>{0, 1}));
}

}  // namespace
}  // namespace distnum
