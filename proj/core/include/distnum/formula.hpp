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

#ifndef DISTNUM_FORMULA_HPP
#define DISTNUM_FORMULA_HPP

#include <cstddef>
#include <cstdint>

#include "distnum/labeling.hpp"
#include "distnum/perm_group.hpp"
#include "distnum/profile.hpp"

namespace distnum {

/// Least d >= 1 with d^k >= x, in integer arithmetic. Requires k >= 1.
std::uint64_t ceil_root(std::uint64_t x, std::uint64_t k);

/// The closed-form distinguishing number of the canonical group with
/// this profile: ceil(n^(1/k)) when there are no orbits of size 2 or 2n,
/// ceil((n-1)^(1/(k+2r))) otherwise. Throws InputError unless n >= 3 and
/// k + r > 0.
std::size_t predicted_d(const OrbitProfile& profile);

/// Counts orbits of g by size into (k, r, s, t). Verifies g is abstractly
/// S_n first (InputError otherwise); throws LargeOrbit when an orbit size
/// lies outside {1, 2, n, 2n}.
OrbitProfile orbit_profile(const PermGroup& g, std::size_t n);

/// n pairwise-distinct k-tuples over 1..d, lexicographically first.
/// Throws Infeasible when d^k < n.
TupleLabeling distinct_tuples(std::size_t n, std::size_t k, std::size_t d);

/// A d-labeling of S_n^(k) + I_t (the formula group with r = s = 0) read
/// off distinct k-tuples; fixed points get label 1. Throws Infeasible when
/// d^k < n.
Labeling product_labeling(std::size_t n, std::size_t k, std::size_t t, std::size_t d);

/// The m-tuples (m = k + 2r) used for a profile with r > 0 or s > 0:
/// at most one value repeated once and none tripled; when s == 0 the two
/// halves of the first 2n-orbit are given different label multisets.
/// Throws Infeasible when d^m < n - 1.
TupleLabeling alternating_tuples(const OrbitProfile& profile, std::size_t d);

/// A d-labeling of formula_group(profile) built from alternating_tuples;
/// each two-point orbit gets labels 1 and 2.
Labeling alternating_labeling(const OrbitProfile& profile, std::size_t d);

/// At most one label value occurs twice and none occurs three times: the
/// condition for a labeling of natural A_n to be distinguishing.
bool alternating_criterion(std::span<const Label> labels);

}  // namespace distnum

#endif  // DISTNUM_FORMULA_HPP
