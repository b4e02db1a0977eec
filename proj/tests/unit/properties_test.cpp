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

// Randomized invariants of the distinguishing number.
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "distnum/constructions.hpp"
#include "distnum/cosets.hpp"
#include "distnum/formula.hpp"
#include "distnum/solver.hpp"
#include "oracles.hpp"

namespace distnum {
namespace {

Permutation random_permutation(std::size_t m, std::mt19937_64& rng) {
  std::vector<std::size_t> images(m);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  std::vector<Point> points(images.begin(), images.end());
  return Permutation(points);
}

// Small groups of assorted shapes, all of degree at most 10.
std::vector<PermGroup> sample_groups() {
  return {symmetric_natural(4),
          alternating_natural(5),
          cyclic_natural(7),
          s4_6c(),
          s4_6d(),
          pgl25(),
          petersen_aut(),
          sn_on_2n(4),
          parallel_power(symmetric_natural(3), 3),
          direct_sum(symmetric_natural(3), cyclic_natural(4)),
          formula_group({3, 1, 1, 0, 0}).group};
}

TEST(Properties, RelabelingInvariance) {
  std::mt19937_64 rng(11);
  for (const PermGroup& g : sample_groups()) {
    const std::size_t d = distinguishing_number(g).d;
    for (int trial = 0; trial < 3; ++trial) {
      const PermGroup h = conjugate_group(g, random_permutation(g.degree(), rng));
      EXPECT_EQ(distinguishing_number(h).d, d);
    }
  }
}

TEST(Properties, FixedPointsDoNotChangeD) {
  for (const PermGroup& g : sample_groups()) {
    const std::size_t d = distinguishing_number(g).d;
    for (std::size_t t = 1; t <= 3; ++t) {
      EXPECT_EQ(distinguishing_number(with_fixed_points(g, t)).d, d);
    }
  }
}

TEST(Properties, RestrictionToFaithfulOrbitCanOnlyRaiseD) {
  for (const PermGroup& g : sample_groups()) {
    const std::size_t d = distinguishing_number(g).d;
    for (const PointSet& orbit_points : orbits(g)) {
      const PermGroup restricted = restrict_to(g, orbit_points);
      if (restricted.order() != g.order()) continue;
      EXPECT_LE(d, distinguishing_number(restricted).d);
    }
  }
}

TEST(Properties, SolverMatchesBruteForceOnRandomSubgroups) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 4 + trial % 4;
    std::vector<Permutation> gens;
    const int count = 1 + trial % 2;
    for (int i = 0; i < count; ++i) gens.push_back(random_permutation(m, rng));
    const PermGroup g = PermGroup::generate(m, gens);
    const std::size_t expected =
        oracle::distinguishing_number(m, oracle::as_images(g.elements()));
    const DistinguishingResult r = distinguishing_number(g);
    EXPECT_EQ(r.d, expected) << "order " << g.order();
    EXPECT_TRUE(is_distinguishing(g, r.witness));
  }
}

TEST(Properties, FormulaAgreesWithSolver) {
  std::vector<OrbitProfile> profiles;
  for (std::size_t n = 3; n <= 5; ++n) {
    for (std::size_t k = 0; k <= 3; ++k) {
      for (std::size_t r = 0; r <= 1; ++r) {
        for (std::size_t s = 0; s <= 1; ++s) {
          const OrbitProfile p{n, k, r, s, 1};
          if (p.is_faithful() && p.degree() <= 14) profiles.push_back(p);
        }
      }
    }
  }
  ASSERT_GT(profiles.size(), 10U);
  for (const OrbitProfile& p : profiles) {
    const FormulaGroup f = formula_group(p);
    EXPECT_EQ(orbit_profile(f.group, p.n), p);
    EXPECT_EQ(distinguishing_number(f.group).d, predicted_d(p)) << p.to_string();
  }
}

TEST(Properties, DirectSumMonotone) {
  const std::vector<PermGroup> groups = sample_groups();
  for (std::size_t i = 0; i + 1 < groups.size(); i += 2) {
    const PermGroup& a = groups[i];
    const PermGroup& b = groups[i + 1];
    if (a.degree() + b.degree() > 16 || a.order() * b.order() > 200000) continue;
    const std::size_t da = distinguishing_number(a).d;
    const std::size_t db = distinguishing_number(b).d;
    EXPECT_EQ(distinguishing_number(direct_sum(a, b)).d, std::max(da, db));
  }
}

}  // namespace
}  // namespace distnum
