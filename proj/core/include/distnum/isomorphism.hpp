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

#ifndef DISTNUM_ISOMORPHISM_HPP
#define DISTNUM_ISOMORPHISM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "distnum/perm_group.hpp"

namespace distnum {

/// An abstract group isomorphism between two permutation groups, stored as
/// a table from source element indices to target element indices.
class GroupIsomorphism {
 public:
  GroupIsomorphism(PermGroup source, PermGroup target, std::vector<std::size_t> map);

  const PermGroup& source() const noexcept { return source_; }
  const PermGroup& target() const noexcept { return target_; }
  const std::vector<std::size_t>& map() const noexcept { return map_; }

  /// Image of an element of the source group.
  const Permutation& operator()(const Permutation& g) const;

  /// Bijective and multiplicative on every pair of elements. Quadratic in
  /// the group order; meant for verification.
  bool verify() const;

 private:
  PermGroup source_;
  PermGroup target_;
  std::vector<std::size_t> map_;
};

/// Isomorphism onto the natural action of S_n, or nullopt. Generators of
/// `g` are mapped to elements of matching order, first success in
/// lexicographic order of the images. Requires n <= 8.
std::optional<GroupIsomorphism> find_isomorphism_to_symmetric(const PermGroup& g,
                                                              std::size_t n);

std::optional<GroupIsomorphism> find_isomorphism(const PermGroup& a, const PermGroup& b);

/// Calls `visit` on every isomorphism a -> b until it returns false.
void for_each_isomorphism(const PermGroup& a, const PermGroup& b,
                          const std::function<bool(const GroupIsomorphism&)>& visit);

/// A point relabeling `r` with conjugate_group(a, r) == b, if one exists.
std::optional<Permutation> permutation_isomorphism(const PermGroup& a, const PermGroup& b);

inline bool permutation_isomorphic(const PermGroup& a, const PermGroup& b) {
  return permutation_isomorphism(a, b).has_value();
}

namespace detail {

/// A finite group whose elements are 0..order-1 with 0 the identity.
/// Right-multiplication columns are computed on demand and cached, so an
/// instance is not safe for concurrent use.
class IndexedGroup {
 public:
  using Multiply = std::function<std::size_t(std::size_t, std::size_t)>;

  IndexedGroup(std::size_t order, Multiply multiply);

  std::size_t order() const noexcept { return order_; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  /// column(b)[a] == a * b.
  const std::vector<std::uint32_t>& column(std::size_t b) const;
  std::size_t element_order(std::size_t a) const;

 private:
  std::size_t order_;
  Multiply multiply_;
  mutable std::vector<std::vector<std::uint32_t>> columns_;
  mutable std::vector<std::size_t> orders_;
};

IndexedGroup index_view(const PermGroup& g);

/// Greedy generating set, largest element orders first.
std::vector<std::size_t> generating_indices(const IndexedGroup& g);

/// Enumerates isomorphisms a -> b that send gens[i] into candidates[i],
/// in lexicographic order of the candidate positions. `visit` receives the
/// full element table and returns false to stop.
void for_each_isomorphism(const IndexedGroup& a, std::span<const std::size_t> gens,
                          const IndexedGroup& b,
                          std::span<const std::vector<std::size_t>> candidates,
                          const std::function<bool(std::span<const std::size_t>)>& visit);

/// Candidates of equal element order for each generator.
std::vector<std::vector<std::size_t>> order_matched_candidates(
    const IndexedGroup& a, std::span<const std::size_t> gens, const IndexedGroup& b);

}  // namespace detail

}  // namespace distnum

#endif  // DISTNUM_ISOMORPHISM_HPP
