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

#include "distnum/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_set>

#include "distnum/errors.hpp"

namespace distnum {

struct PermGroup::Data {
  std::size_t degree = 0;
  std::vector<Permutation> elements;
  mutable std::once_flag generators_once;
  mutable std::vector<Permutation> generators;
};

namespace {

using ElementSet = std::unordered_set<Permutation, PermutationHash>;

// Breadth-first closure starting from `seed` (which must contain the identity).
void close_under(ElementSet& set, std::vector<Permutation>& frontier,
                 std::span<const Permutation> generators, std::size_t cap) {
  std::deque<Permutation> queue(frontier.begin(), frontier.end());
  frontier.clear();
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation y = x * g;
      if (set.insert(y).second) {
        if (set.size() > cap) {
          throw CapExceeded("group order exceeds the enumeration cap of " +
                            std::to_string(cap) + " elements");
        }
        queue.push_back(std::move(y));
      }
    }
  }
}

std::vector<Permutation> sorted(const ElementSet& set) {
  std::vector<Permutation> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

void check_degree(std::size_t degree, const GroupLimits& limits) {
  if (degree > limits.max_degree || degree > kMaxPointCount) {
    throw CapExceeded("degree " + std::to_string(degree) + " exceeds the cap of " +
                      std::to_string(std::min(limits.max_degree, kMaxPointCount)));
  }
}

}  // namespace

PermGroup::PermGroup() : PermGroup(trivial(0)) {}

PermGroup::PermGroup(std::shared_ptr<Data> data) : data_(std::move(data)) {}

PermGroup PermGroup::trivial(std::size_t degree) {
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->elements.emplace_back(degree);
  std::call_once(data->generators_once, [] {});
  return PermGroup(std::move(data));
}

PermGroup PermGroup::generate(std::size_t degree, std::vector<Permutation> generators,
                              const GroupLimits& limits) {
  check_degree(degree, limits);
  std::vector<Permutation> gens;
  for (auto& g : generators) {
    if (g.degree() != degree) {
      throw InputError("generator " + g.to_string() + " has degree " +
                       std::to_string(g.degree()) + ", expected " + std::to_string(degree));
    }
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) {
      gens.push_back(std::move(g));
    }
  }
  ElementSet set;
  Permutation id(degree);
  set.insert(id);
  std::vector<Permutation> frontier{id};
  close_under(set, frontier, gens, limits.max_order);

  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->elements = sorted(set);
  data->generators = std::move(gens);
  std::call_once(data->generators_once, [] {});
  return PermGroup(std::move(data));
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Permutation> elements,
                                   const GroupLimits& limits) {
  check_degree(degree, limits);
  if (elements.size() > limits.max_order) {
    throw CapExceeded("element set exceeds the enumeration cap");
  }
  for (const auto& g : elements) {
    if (g.degree() != degree) throw InputError("element of wrong degree");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity()) {
    throw ValidationError("element set does not contain the identity");
  }
  std::optional<PermGroup> closure;
  try {
    closure = generate(degree, small_generating_set(degree, elements), limits);
  } catch (const CapExceeded&) {
    // The closure outgrew the element set.
  }
  if (!closure || closure->elements() != elements) {
    throw ValidationError("element set is not closed under composition");
  }
  return *closure;
}

PermGroup PermGroup::from_sorted_unchecked(std::size_t degree,
                                           std::vector<Permutation> elements) {
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->elements = std::move(elements);
  return PermGroup(std::move(data));
}

PermGroup make_subgroup_unchecked(std::size_t degree, std::vector<Permutation> sorted_elements) {
  return PermGroup::from_sorted_unchecked(degree, std::move(sorted_elements));
}

std::size_t PermGroup::degree() const noexcept { return data_->degree; }

std::size_t PermGroup::order() const noexcept { return data_->elements.size(); }

const std::vector<Permutation>& PermGroup::generators() const {
  std::call_once(data_->generators_once, [this] {
    data_->generators = small_generating_set(data_->degree, data_->elements);
  });
  return data_->generators;
}

const std::vector<Permutation>& PermGroup::elements() const noexcept {
  return data_->elements;
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& g) const {
  const auto& e = data_->elements;
  auto it = std::lower_bound(e.begin(), e.end(), g);
  if (it == e.end() || *it != g) return std::nullopt;
  return static_cast<std::size_t>(it - e.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree() != other.degree()) return false;
  return std::all_of(elements().begin(), elements().end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.elements() == b.elements();
}

std::vector<Permutation> small_generating_set(std::size_t degree,
                                              std::span<const Permutation> elements) {
  // Prefer elements of large order: they tend to generate quickly.
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!elements[i].is_identity()) candidates.emplace_back(elements[i].order(), i);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  std::vector<Permutation> gens;
  ElementSet span;
  span.insert(Permutation(degree));
  for (const auto& [ord, i] : candidates) {
    if (span.size() >= elements.size()) break;
    const Permutation& c = elements[i];
    if (span.count(c)) continue;
    gens.push_back(c);
    std::vector<Permutation> frontier(span.begin(), span.end());
    close_under(span, frontier, gens, elements.size());
  }
  return gens;
}

Subgroup::Subgroup(PermGroup parent, PermGroup group)
    : parent_(std::move(parent)), group_(std::move(group)) {
  if (!group_.is_subgroup_of(parent_)) {
    throw InputError("subgroup is not contained in its parent group");
  }
}

bool Subgroup::is_normal() const { return distnum::is_normal(parent_, group_); }

namespace {

std::vector<std::size_t> orbit_ids(const PermGroup& g) {
  const std::size_t m = g.degree();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gen : g.generators()) {
    for (std::size_t x = 0; x < m; ++x) {
      std::size_t a = find(x), b = find(gen[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> ids(m);
  for (std::size_t x = 0; x < m; ++x) ids[x] = find(x);
  return ids;
}

Subgroup filter(const PermGroup& g, auto&& keep) {
  std::vector<Permutation> kept;
  for (const auto& e : g.elements()) {
    if (keep(e)) kept.push_back(e);
  }
  return Subgroup(g, make_subgroup_unchecked(g.degree(), std::move(kept)));
}

void check_points(const PermGroup& g, std::span<const Point> points) {
  for (Point x : points) {
    if (x >= g.degree()) {
      throw InputError("point " + std::to_string(x + 1) + " outside the group's domain");
    }
  }
}

}  // namespace

std::vector<PointSet> orbits(const PermGroup& g) {
  const auto ids = orbit_ids(g);
  std::vector<PointSet> out;
  std::vector<std::size_t> slot(g.degree(), SIZE_MAX);
  for (std::size_t x = 0; x < g.degree(); ++x) {
    if (slot[ids[x]] == SIZE_MAX) {
      slot[ids[x]] = out.size();
      out.emplace_back();
    }
    out[slot[ids[x]]].push_back(static_cast<Point>(x));
  }
  return out;
}

PointSet orbit(const PermGroup& g, Point x) {
  for (auto& o : orbits(g)) {
    if (std::binary_search(o.begin(), o.end(), x)) return o;
  }
  throw InputError("point outside the group's domain");
}

std::vector<std::size_t> orbit_sizes(const PermGroup& g) {
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits(g)) sizes.push_back(o.size());
  return sizes;
}

bool is_transitive(const PermGroup& g) { return orbits(g).size() <= 1; }

bool is_invariant(const PermGroup& g, std::span<const Point> points) {
  check_points(g, points);
  std::vector<bool> in(g.degree(), false);
  for (Point x : points) in[x] = true;
  for (const auto& gen : g.generators()) {
    for (Point x : points) {
      if (!in[gen[x]]) return false;
    }
  }
  return true;
}

Subgroup point_stabilizer(const PermGroup& g, Point x) {
  const Point pts[] = {x};
  return pointwise_stabilizer(g, pts);
}

Subgroup setwise_stabilizer(const PermGroup& g, std::span<const Point> points) {
  check_points(g, points);
  std::vector<bool> in(g.degree(), false);
  for (Point x : points) in[x] = true;
  return filter(g, [&](const Permutation& e) {
    for (Point x : points) {
      if (!in[e[x]]) return false;
    }
    return true;
  });
}

Subgroup pointwise_stabilizer(const PermGroup& g, std::span<const Point> points) {
  check_points(g, points);
  return filter(g, [&](const Permutation& e) {
    for (Point x : points) {
      if (e[x] != x) return false;
    }
    return true;
  });
}

Subgroup kernel_on_subset(const PermGroup& g, std::span<const Point> points) {
  if (!is_invariant(g, points)) {
    throw InputError("subset is not invariant under the group");
  }
  return pointwise_stabilizer(g, points);
}

Permutation restrict_permutation(const Permutation& p, std::span<const Point> points) {
  std::vector<int> position(p.degree(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) position[points[i]] = static_cast<int>(i);
  std::vector<Point> images(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int y = position[p[points[i]]];
    if (y < 0) throw InputError("permutation does not preserve the subset");
    images[i] = static_cast<Point>(y);
  }
  return Permutation(std::move(images));
}

PermGroup restrict_to(const PermGroup& g, std::span<const Point> points) {
  if (!is_invariant(g, points)) {
    throw InputError("cannot restrict to a non-invariant subset");
  }
  std::vector<Permutation> gens;
  for (const auto& gen : g.generators()) gens.push_back(restrict_permutation(gen, points));
  return PermGroup::generate(points.size(), std::move(gens),
                             GroupLimits{g.order(), kMaxPointCount});
}

bool is_normal(const PermGroup& g, const PermGroup& n) {
  if (!n.is_subgroup_of(g)) return false;
  for (const auto& x : g.generators()) {
    const Permutation xi = x.inverse();
    for (const auto& h : n.generators()) {
      if (!n.contains(xi * h * x)) return false;
    }
  }
  return true;
}

PermGroup conjugate_group(const PermGroup& g, const Permutation& relabel) {
  std::vector<Permutation> elements;
  elements.reserve(g.order());
  for (const auto& e : g.elements()) elements.push_back(e.conjugate(relabel));
  std::sort(elements.begin(), elements.end());
  return make_subgroup_unchecked(g.degree(), std::move(elements));
}

}  // namespace distnum
