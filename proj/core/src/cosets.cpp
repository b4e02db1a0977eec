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

#include "distnum/cosets.hpp"

#include <algorithm>
#include <string>

#include "distnum/errors.hpp"

namespace distnum {

struct CosetSpace::Data {
  PermGroup parent;
  PermGroup subgroup;
  std::vector<std::uint32_t> coset_id;  // per parent element index
  std::vector<Permutation> reps;
};

CosetSpace::CosetSpace(PermGroup parent, PermGroup subgroup) {
  if (!subgroup.is_subgroup_of(parent)) {
    throw InputError("coset space needs a subgroup of the parent group");
  }
  auto data = std::make_shared<Data>();
  constexpr std::uint32_t kUnset = UINT32_MAX;
  data->coset_id.assign(parent.order(), kUnset);
  for (std::size_t i = 0; i < parent.order(); ++i) {
    if (data->coset_id[i] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(data->reps.size());
    const Permutation& g = parent.element(i);
    data->reps.push_back(g);
    for (const auto& h : subgroup.elements()) {
      data->coset_id[*parent.index_of(h * g)] = c;
    }
  }
  data->parent = std::move(parent);
  data->subgroup = std::move(subgroup);
  data_ = std::move(data);
}

CosetSpace::CosetSpace(const Subgroup& subgroup)
    : CosetSpace(subgroup.parent(), subgroup.group()) {}

const PermGroup& CosetSpace::parent() const noexcept { return data_->parent; }
const PermGroup& CosetSpace::subgroup() const noexcept { return data_->subgroup; }
std::size_t CosetSpace::index() const noexcept { return data_->reps.size(); }
const std::vector<Permutation>& CosetSpace::representatives() const noexcept {
  return data_->reps;
}

std::size_t CosetSpace::coset_of(const Permutation& g) const {
  auto i = data_->parent.index_of(g);
  if (!i) throw InputError("element " + g.to_string() + " is not in the parent group");
  return data_->coset_id[*i];
}

std::size_t CosetSpace::coset_of_element(std::size_t parent_index) const noexcept {
  return data_->coset_id[parent_index];
}

std::vector<Permutation> CosetSpace::members(std::size_t c) const {
  std::vector<Permutation> out;
  for (const auto& h : data_->subgroup.elements()) out.push_back(h * data_->reps.at(c));
  std::sort(out.begin(), out.end());
  return out;
}

bool CosetSpace::subgroup_is_normal() const { return is_normal(data_->parent, data_->subgroup); }

std::size_t CosetSpace::multiply(std::size_t a, std::size_t b) const {
  return coset_of(data_->reps.at(a) * data_->reps.at(b));
}

detail::IndexedGroup CosetSpace::quotient() const {
  if (!subgroup_is_normal()) throw InputError("factor group needs a normal subgroup");
  CosetSpace self = *this;
  return detail::IndexedGroup(index(),
                              [self](std::size_t a, std::size_t b) { return self.multiply(a, b); });
}

Permutation CosetAction::image_of(const Permutation& g) const {
  const auto& reps = space.representatives();
  std::vector<Point> images(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    images[c] = static_cast<Point>(space.coset_of(reps[c] * g));
  }
  return Permutation(std::move(images));
}

CosetAction coset_action(const PermGroup& g, const PermGroup& h) {
  CosetSpace space(g, h);
  if (space.index() > kMaxPointCount) {
    throw CapExceeded("coset space of index " + std::to_string(space.index()) +
                      " is too large to act on");
  }
  CosetAction partial{space, PermGroup::trivial(space.index()),
                      Subgroup(g, PermGroup::trivial(g.degree()))};
  std::vector<Permutation> gens;
  for (const auto& gen : g.generators()) gens.push_back(partial.image_of(gen));
  PermGroup image = PermGroup::generate(space.index(), std::move(gens),
                                        GroupLimits{g.order(), kMaxPointCount});
  std::vector<Permutation> kernel;
  for (const auto& e : g.elements()) {
    if (partial.image_of(e).is_identity()) kernel.push_back(e);
  }
  return CosetAction{space, std::move(image),
                     Subgroup(g, make_subgroup_unchecked(g.degree(), std::move(kernel)))};
}

QuotientIso::QuotientIso(CosetSpace left, CosetSpace right, std::vector<std::size_t> pairing)
    : left_(std::move(left)), right_(std::move(right)), pairing_(std::move(pairing)) {
  if (!left_.subgroup_is_normal()) {
    throw ValidationError("left subgroup is not normal in its parent");
  }
  if (!right_.subgroup_is_normal()) {
    throw ValidationError("right subgroup is not normal in its parent");
  }
  if (left_.index() != right_.index()) {
    throw ValidationError("factor groups have different orders (" +
                          std::to_string(left_.index()) + " vs " +
                          std::to_string(right_.index()) + ")");
  }
  if (pairing_.size() != left_.index()) {
    throw ValidationError("pairing does not cover every left coset");
  }
  std::vector<bool> hit(right_.index(), false);
  for (std::size_t c : pairing_) {
    if (c >= hit.size() || hit[c]) throw ValidationError("pairing is not a bijection");
    hit[c] = true;
  }
  const std::size_t q = left_.index();
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      if (pairing_[left_.multiply(a, b)] != right_.multiply(pairing_[a], pairing_[b])) {
        throw ValidationError("pairing is not multiplicative on cosets " + std::to_string(a) +
                              " and " + std::to_string(b));
      }
    }
  }
}

QuotientIso QuotientIso::inverse() const {
  std::vector<std::size_t> inv(pairing_.size());
  for (std::size_t c = 0; c < pairing_.size(); ++c) inv[pairing_[c]] = c;
  return QuotientIso(right_, left_, std::move(inv));
}

QuotientIso index_two_pairing(CosetSpace left, CosetSpace right) {
  if (left.index() != 2 || right.index() != 2) {
    throw ValidationError("index-two pairing needs two subgroups of index 2");
  }
  return QuotientIso(std::move(left), std::move(right), {0, 1});
}

QuotientIso induced_pairing(CosetSpace left, CosetSpace right,
                            const std::function<Permutation(const Permutation&)>& f) {
  constexpr std::size_t kUnset = SIZE_MAX;
  std::vector<std::size_t> pairing(left.index(), kUnset);
  for (std::size_t i = 0; i < left.parent().order(); ++i) {
    const std::size_t c = left.coset_of_element(i);
    const std::size_t d = right.coset_of(f(left.parent().element(i)));
    if (pairing[c] == kUnset) {
      pairing[c] = d;
    } else if (pairing[c] != d) {
      throw ValidationError("map does not send cosets to cosets");
    }
  }
  return QuotientIso(std::move(left), std::move(right), std::move(pairing));
}

void for_each_quotient_iso(const CosetSpace& left, const CosetSpace& right,
                           const std::function<bool(const QuotientIso&)>& visit) {
  if (left.index() != right.index()) return;
  const auto a = left.quotient();
  const auto b = right.quotient();
  const auto gens = detail::generating_indices(a);
  const auto cands = detail::order_matched_candidates(a, gens, b);
  detail::for_each_isomorphism(a, gens, b, cands, [&](std::span<const std::size_t> table) {
    return visit(QuotientIso(left, right, std::vector<std::size_t>(table.begin(), table.end())));
  });
}

std::optional<QuotientIso> find_quotient_iso(const CosetSpace& left, const CosetSpace& right) {
  std::optional<QuotientIso> found;
  for_each_quotient_iso(left, right, [&](const QuotientIso& iso) {
    found = iso;
    return false;
  });
  return found;
}

}  // namespace distnum
