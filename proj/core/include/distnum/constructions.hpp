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

#ifndef DISTNUM_CONSTRUCTIONS_HPP
#define DISTNUM_CONSTRUCTIONS_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distnum/cosets.hpp"
#include "distnum/isomorphism.hpp"
#include "distnum/perm_group.hpp"
#include "distnum/profile.hpp"

namespace distnum {

// Natural actions. Each requires 1 <= n <= 8.
PermGroup symmetric_natural(std::size_t n);
PermGroup alternating_natural(std::size_t n);
PermGroup cyclic_natural(std::size_t n);

/// G1 and G2 acting independently on the disjoint union, G1's points first.
PermGroup direct_sum(const PermGroup& g1, const PermGroup& g2, const GroupLimits& limits = {});

/// G + I_t.
PermGroup with_fixed_points(const PermGroup& g, std::size_t t, const GroupLimits& limits = {});

/// All (g, h) with phi(H1 g) = H2 h; order |G1| * |H2|.
PermGroup subdirect_sum(const QuotientIso& phi, const GroupLimits& limits = {});

/// G acting identically on r disjoint copies of its points.
PermGroup parallel_power(const PermGroup& g, std::size_t r, const GroupLimits& limits = {});

/// One homomorphic image of a source group, placed on its own block.
struct ActionComponent {
  std::size_t degree;
  std::function<Permutation(const Permutation&)> act;
};

/// The image of `source` acting on all components at once (blocks in
/// order). When `only` is given, only those source elements are mapped.
PermGroup diagonal_image(const PermGroup& source, std::span<const ActionComponent> parts,
                         const std::vector<Permutation>* only = nullptr);

/// An automorphism of S_6 sending transpositions to triple transpositions,
/// found by generator-image search.
GroupIsomorphism outer_automorphism_s6();

/// Constituents, kernels and the factor-group pairing of an intransitive
/// group split along an invariant block.
struct SubdirectDecomposition {
  PointSet block1;
  PointSet block2;
  QuotientIso phi;
};

/// Splits G along `block1` (which must be invariant and proper).
SubdirectDecomposition decompose(const PermGroup& g, std::span<const Point> block1);

/// subdirect_sum of the decomposition, moved back onto the original points.
PermGroup reassemble(const SubdirectDecomposition& d, const GroupLimits& limits = {});

// Named groups.
PermGroup s4_6c();        ///< S_4 on the cosets of a cyclic subgroup of order 4.
PermGroup s4_6d();        ///< S_4 on the cosets of a non-normal Klein subgroup.
PermGroup pgl25();        ///< PGL(2,5) on the projective line over F_5.
PermGroup psl25();        ///< PSL(2,5) on the same six points.
PermGroup s6_on_10();     ///< S_6 on the ten splittings of {1..6} into two 3-sets.
PermGroup sn_on_2n(std::size_t n);  ///< S_n on the cosets of A_{n-1}.
PermGroup petersen_aut();  ///< Automorphism group of the Petersen graph.

/// S_4 on 4 points glued over K_4 to S_3 on 3 points (degree 7).
PermGroup s4_k4_s3();
/// The same gluing with S_3 acting regularly on 6 points (degree 10).
PermGroup s4_k4_s3_on_10();

/// Lookup by name: S4_6c, S4_6d, PGL25, S6_on_10, Sn_on_2n (uses n),
/// petersen_aut. Throws InputError for unknown names.
PermGroup named_group(std::string_view name, std::size_t n = 0);

/// Rows of the exceptional-groups table.
enum class Table1Row {
  S4_6c,
  S4_6d,
  S4_K4_S3,
  PGL25,
  PGL25_PSL_S2,
  AutPetersen,
  S6_10,
  S6_psi_S6,
};

struct Table1Entry {
  Table1Row row;
  std::string_view id;    ///< short identifier used in reports
  std::string_view name;
  std::size_t n;
  std::size_t d;          ///< the tabulated distinguishing number
  bool takes_s;           ///< row carries an S_2^(s) summand
  std::size_t s_min;      ///< smallest admissible s when takes_s
};

std::span<const Table1Entry> table1_entries();
const Table1Entry& table1_entry(Table1Row row);

/// The row's group with s two-point orbits glued over the index-2
/// subgroup and t fixed points.
PermGroup table1_group(Table1Row row, std::size_t s, std::size_t t,
                       const GroupLimits& limits = {});

/// Where a point of the canonical formula group sits.
struct PointRole {
  enum class Kind { Natural, DoubleHalf, Sign, Fixed };
  Kind kind;
  std::size_t orbit;       ///< index among orbits of the same kind
  std::size_t coordinate;  ///< A_n-orbit coordinate (Natural, DoubleHalf)
  Point natural_point;     ///< point of {0..n-1} this point corresponds to
  std::size_t half;        ///< 0 or 1 for DoubleHalf and Sign points
};

/// ((S_n^(k) + (S_n,2n)^(r))[A_n^(k+2r)] +_psi S_2^(s)) + I_t.
///
/// Points: k natural blocks, then r blocks of 2n cosets of A_{n-1}, then s
/// pairs, then t fixed points.
struct FormulaGroup {
  OrbitProfile profile;
  PermGroup group;
  std::vector<PointRole> roles;
};

FormulaGroup formula_group(const OrbitProfile& profile, const GroupLimits& limits = {});
std::vector<PointRole> formula_layout(const OrbitProfile& profile);

}  // namespace distnum

#endif  // DISTNUM_CONSTRUCTIONS_HPP
