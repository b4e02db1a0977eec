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

#ifndef DISTNUM_PERM_GROUP_HPP
#define DISTNUM_PERM_GROUP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "distnum/permutation.hpp"

namespace distnum {

/// Enumeration caps. Exceeding either one raises CapExceeded.
struct GroupLimits {
  std::size_t max_order = 1'000'000;
  std::size_t max_degree = 64;
};

/// A finite permutation group stored by full enumeration of its elements.
///
/// Elements are kept sorted by lexicographic order of their image
/// sequences, so the identity is always element 0 and iteration order is
/// deterministic. Instances are immutable and cheap to copy.
class PermGroup {
 public:
  /// The trivial group on zero points.
  PermGroup();

  static PermGroup trivial(std::size_t degree);

  /// Closure of `generators`. Throws InputError on degree mismatch and
  /// CapExceeded when the closure outgrows `limits`.
  static PermGroup generate(std::size_t degree, std::vector<Permutation> generators,
                            const GroupLimits& limits = {});

  /// Wraps an explicit element set; throws ValidationError if the set is not
  /// a group.
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements,
                                 const GroupLimits& limits = {});

  std::size_t degree() const noexcept;
  std::size_t order() const noexcept;
  bool is_trivial() const noexcept { return order() == 1; }

  /// A generating set. For groups built from element sets this is a small
  /// greedily chosen one.
  const std::vector<Permutation>& generators() const;
  const std::vector<Permutation>& elements() const noexcept;
  const Permutation& element(std::size_t i) const noexcept { return elements()[i]; }
  const Permutation& identity() const noexcept { return elements().front(); }

  std::optional<std::size_t> index_of(const Permutation& g) const;
  bool contains(const Permutation& g) const { return index_of(g).has_value(); }

  /// True if every element of this group lies in `other` (same degree).
  bool is_subgroup_of(const PermGroup& other) const;

  /// Same degree and same element set.
  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  struct Data;
  explicit PermGroup(std::shared_ptr<Data> data);
  static PermGroup from_sorted_unchecked(std::size_t degree, std::vector<Permutation> elements);
  friend class Subgroup;
  friend PermGroup make_subgroup_unchecked(std::size_t, std::vector<Permutation>);

  std::shared_ptr<Data> data_;
};

/// A subgroup together with the group containing it.
class Subgroup {
 public:
  /// Throws InputError unless `group` is contained in `parent`.
  Subgroup(PermGroup parent, PermGroup group);

  const PermGroup& parent() const noexcept { return parent_; }
  const PermGroup& group() const noexcept { return group_; }
  std::size_t order() const noexcept { return group_.order(); }
  const std::vector<Permutation>& elements() const noexcept { return group_.elements(); }
  bool is_trivial() const noexcept { return group_.is_trivial(); }
  bool contains(const Permutation& g) const { return group_.contains(g); }

  /// gNg^-1 = N for every g in the parent.
  bool is_normal() const;

 private:
  PermGroup parent_;
  PermGroup group_;
};

/// Builds a PermGroup from a sorted, duplicate-free list already known to
/// be closed (filters of another group's element list). Not validated.
PermGroup make_subgroup_unchecked(std::size_t degree, std::vector<Permutation> sorted_elements);

/// Greedy small generating set of the group formed by `elements`.
std::vector<Permutation> small_generating_set(std::size_t degree,
                                              std::span<const Permutation> elements);

using PointSet = std::vector<Point>;

/// Orbits as sorted point lists, ordered by least point.
std::vector<PointSet> orbits(const PermGroup& g);
PointSet orbit(const PermGroup& g, Point x);
std::vector<std::size_t> orbit_sizes(const PermGroup& g);
bool is_transitive(const PermGroup& g);

/// True if `points` is mapped onto itself by every element.
bool is_invariant(const PermGroup& g, std::span<const Point> points);

Subgroup point_stabilizer(const PermGroup& g, Point x);
/// {g : Sg = S}.
Subgroup setwise_stabilizer(const PermGroup& g, std::span<const Point> points);
/// {g : xg = x for all x in S}.
Subgroup pointwise_stabilizer(const PermGroup& g, std::span<const Point> points);

/// Kernel of the action on an invariant subset Y. Throws InputError when Y
/// is not a union of orbits.
Subgroup kernel_on_subset(const PermGroup& g, std::span<const Point> points);

/// The constituent on an invariant subset, with points renumbered in
/// increasing order of `points`.
PermGroup restrict_to(const PermGroup& g, std::span<const Point> points);
Permutation restrict_permutation(const Permutation& p, std::span<const Point> points);

bool is_normal(const PermGroup& g, const PermGroup& n);

/// The group with every point x renamed to relabel[x].
PermGroup conjugate_group(const PermGroup& g, const Permutation& relabel);

}  // namespace distnum

#endif  // DISTNUM_PERM_GROUP_HPP
