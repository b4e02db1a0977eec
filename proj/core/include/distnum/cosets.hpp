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

#ifndef DISTNUM_COSETS_HPP
#define DISTNUM_COSETS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "distnum/isomorphism.hpp"
#include "distnum/perm_group.hpp"

namespace distnum {

/// The right coset space G:H = {Hg : g in G}.
///
/// Cosets are numbered by their lexicographically least element, in
/// increasing order, so coset 0 is H itself.
class CosetSpace {
 public:
  /// Throws InputError unless `subgroup` is contained in `parent`.
  CosetSpace(PermGroup parent, PermGroup subgroup);
  explicit CosetSpace(const Subgroup& subgroup);

  const PermGroup& parent() const noexcept;
  const PermGroup& subgroup() const noexcept;
  std::size_t index() const noexcept;
  const std::vector<Permutation>& representatives() const noexcept;

  std::size_t coset_of(const Permutation& g) const;
  std::size_t coset_of_element(std::size_t parent_index) const noexcept;
  /// Elements of coset c, sorted.
  std::vector<Permutation> members(std::size_t c) const;

  bool subgroup_is_normal() const;
  /// (Ha)(Hb) = H(ab). Meaningful only for normal subgroups.
  std::size_t multiply(std::size_t a, std::size_t b) const;
  /// The factor group G/H as an indexed group. Requires normality.
  detail::IndexedGroup quotient() const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// The action of G on G:H by right multiplication.
struct CosetAction {
  CosetSpace space;
  /// The permutation group induced on the cosets.
  PermGroup image;
  /// Elements acting trivially: the core of H in G.
  Subgroup kernel;

  Permutation image_of(const Permutation& g) const;
  bool is_faithful() const noexcept { return kernel.is_trivial(); }
};

CosetAction coset_action(const PermGroup& g, const PermGroup& h);

/// An isomorphism G1/H1 -> G2/H2 given as a pairing of coset indices.
class QuotientIso {
 public:
  /// Validates normality of both subgroups, bijectivity and
  /// multiplicativity of the pairing; throws ValidationError with a
  /// diagnosis otherwise.
  QuotientIso(CosetSpace left, CosetSpace right, std::vector<std::size_t> pairing);

  const CosetSpace& left() const noexcept { return left_; }
  const CosetSpace& right() const noexcept { return right_; }
  const std::vector<std::size_t>& pairing() const noexcept { return pairing_; }
  std::size_t operator()(std::size_t left_coset) const { return pairing_.at(left_coset); }

  QuotientIso inverse() const;

 private:
  CosetSpace left_;
  CosetSpace right_;
  std::vector<std::size_t> pairing_;
};

/// The unique isomorphism between two factor groups of order 2.
QuotientIso index_two_pairing(CosetSpace left, CosetSpace right);

/// Pairing induced by a map f on parent elements with f(H1 g) inside one
/// coset of H2, i.e. H1 g -> H2 f(g).
QuotientIso induced_pairing(CosetSpace left, CosetSpace right,
                            const std::function<Permutation(const Permutation&)>& f);

/// All factor-group isomorphisms, first found first; `visit` returns false
/// to stop.
void for_each_quotient_iso(const CosetSpace& left, const CosetSpace& right,
                           const std::function<bool(const QuotientIso&)>& visit);
std::optional<QuotientIso> find_quotient_iso(const CosetSpace& left, const CosetSpace& right);

}  // namespace distnum

#endif  // DISTNUM_COSETS_HPP
