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

#include "distnum/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "distnum/errors.hpp"

namespace distnum {

GroupIsomorphism::GroupIsomorphism(PermGroup source, PermGroup target,
                                   std::vector<std::size_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_.order()) {
    throw InputError("isomorphism table does not cover the source group");
  }
}

const Permutation& GroupIsomorphism::operator()(const Permutation& g) const {
  auto i = source_.index_of(g);
  if (!i) throw InputError("element " + g.to_string() + " is not in the source group");
  return target_.element(map_[*i]);
}

bool GroupIsomorphism::verify() const {
  if (source_.order() != target_.order()) return false;
  std::vector<bool> hit(target_.order(), false);
  for (std::size_t i : map_) {
    if (i >= hit.size() || hit[i]) return false;
    hit[i] = true;
  }
  const auto& s = source_.elements();
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      const auto ab = source_.index_of(s[a] * s[b]);
      if (!ab) return false;
      if (target_.element(map_[*ab]) != target_.element(map_[a]) * target_.element(map_[b])) {
        return false;
      }
    }
  }
  return true;
}

namespace detail {

IndexedGroup::IndexedGroup(std::size_t order, Multiply multiply)
    : order_(order), multiply_(std::move(multiply)), columns_(order), orders_(order, 0) {}

std::size_t IndexedGroup::multiply(std::size_t a, std::size_t b) const {
  if (!columns_[b].empty()) return columns_[b][a];
  return multiply_(a, b);
}

const std::vector<std::uint32_t>& IndexedGroup::column(std::size_t b) const {
  auto& col = columns_[b];
  if (col.empty()) {
    col.resize(order_);
    for (std::size_t a = 0; a < order_; ++a) col[a] = static_cast<std::uint32_t>(multiply_(a, b));
  }
  return col;
}

std::size_t IndexedGroup::element_order(std::size_t a) const {
  if (orders_[a] == 0) {
    std::size_t k = 1;
    for (std::size_t x = a; x != 0; x = multiply(x, a)) ++k;
    orders_[a] = k;
  }
  return orders_[a];
}

IndexedGroup index_view(const PermGroup& g) {
  return IndexedGroup(g.order(), [g](std::size_t a, std::size_t b) {
    return *g.index_of(g.element(a) * g.element(b));
  });
}

std::vector<std::size_t> generating_indices(const IndexedGroup& g) {
  std::vector<std::size_t> candidates(g.order() > 0 ? g.order() - 1 : 0);
  std::iota(candidates.begin(), candidates.end(), 1);
  std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<std::size_t> gens;
  std::vector<bool> in_span(g.order(), false);
  in_span[0] = true;
  std::size_t span_size = 1;
  for (std::size_t c : candidates) {
    if (span_size == g.order()) break;
    if (in_span[c]) continue;
    gens.push_back(c);
    std::vector<std::size_t> queue;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (in_span[x]) queue.push_back(x);
    }
    while (!queue.empty()) {
      std::size_t x = queue.back();
      queue.pop_back();
      for (std::size_t s : gens) {
        std::size_t y = g.multiply(x, s);
        if (!in_span[y]) {
          in_span[y] = true;
          ++span_size;
          queue.push_back(y);
        }
      }
    }
  }
  return gens;
}

std::vector<std::vector<std::size_t>> order_matched_candidates(
    const IndexedGroup& a, std::span<const std::size_t> gens, const IndexedGroup& b) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t g : gens) {
    std::vector<std::size_t> c;
    const std::size_t want = a.element_order(g);
    for (std::size_t y = 0; y < b.order(); ++y) {
      if (b.element_order(y) == want) c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

struct SearchState {
  std::vector<std::int64_t> map;
  std::vector<bool> used;
  std::size_t assigned = 0;
};

// Extends `state` along Cayley-graph edges of the first `level + 1`
// generators; false on a relation violation or a non-injective image.
bool extend(SearchState& state, const IndexedGroup& a, std::span<const std::size_t> gens,
            const IndexedGroup& b, std::span<const std::size_t> images, std::size_t level) {
  std::vector<std::size_t> queue;
  for (std::size_t x = 0; x < a.order(); ++x) {
    if (state.map[x] >= 0) queue.push_back(x);
  }
  while (!queue.empty()) {
    const std::size_t x = queue.back();
    queue.pop_back();
    for (std::size_t j = 0; j <= level; ++j) {
      const std::size_t y = a.column(gens[j])[x];
      const std::size_t img = b.column(images[j])[static_cast<std::size_t>(state.map[x])];
      if (state.map[y] < 0) {
        if (state.used[img]) return false;
        state.map[y] = static_cast<std::int64_t>(img);
        state.used[img] = true;
        ++state.assigned;
        queue.push_back(y);
      } else if (static_cast<std::size_t>(state.map[y]) != img) {
        return false;
      }
    }
  }
  return true;
}

bool search(const SearchState& state, const IndexedGroup& a, std::span<const std::size_t> gens,
            const IndexedGroup& b, std::span<const std::vector<std::size_t>> candidates,
            std::vector<std::size_t>& images, std::size_t level,
            const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (level == gens.size()) {
    if (state.assigned != a.order()) return true;
    std::vector<std::size_t> table(a.order());
    for (std::size_t x = 0; x < a.order(); ++x) table[x] = static_cast<std::size_t>(state.map[x]);
    return visit(table);
  }
  for (std::size_t c : candidates[level]) {
    images[level] = c;
    SearchState next = state;
    if (!extend(next, a, gens, b, images, level)) continue;
    if (!search(next, a, gens, b, candidates, images, level + 1, visit)) return false;
  }
  return true;
}

}  // namespace

void for_each_isomorphism(const IndexedGroup& a, std::span<const std::size_t> gens,
                          const IndexedGroup& b,
                          std::span<const std::vector<std::size_t>> candidates,
                          const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (a.order() != b.order() || candidates.size() != gens.size()) return;
  SearchState state;
  state.map.assign(a.order(), -1);
  state.used.assign(b.order(), false);
  state.map[0] = 0;
  state.used[0] = true;
  state.assigned = 1;
  std::vector<std::size_t> images(gens.size());
  search(state, a, gens, b, candidates, images, 0, visit);
}

}  // namespace detail

namespace {

std::vector<std::size_t> source_generators(const PermGroup& g) {
  std::vector<std::size_t> out;
  for (const auto& gen : g.generators()) out.push_back(*g.index_of(gen));
  return out;
}

// Permutation-isomorphism invariant: degree, order, orbit sizes and the
// histogram of cycle types.
bool same_shape(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  auto sa = orbit_sizes(a), sb = orbit_sizes(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::map<std::vector<std::size_t>, std::size_t> ha, hb;
  for (const auto& e : a.elements()) ++ha[e.cycle_type()];
  for (const auto& e : b.elements()) ++hb[e.cycle_type()];
  return ha == hb;
}

// Point stabilizers as sorted element-index lists.
std::vector<std::vector<std::size_t>> stabilizer_indices(const PermGroup& g) {
  std::vector<std::vector<std::size_t>> out(g.degree());
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto& e = g.element(i);
    for (std::size_t x = 0; x < g.degree(); ++x) {
      if (e[x] == x) out[x].push_back(i);
    }
  }
  return out;
}

// Given an abstract isomorphism, looks for a compatible point bijection.
std::optional<Permutation> match_points(const PermGroup& a, const PermGroup& b,
                                        std::span<const std::size_t> iso,
                                        const std::vector<PointSet>& a_orbits,
                                        const std::vector<std::vector<std::size_t>>& a_stabs,
                                        const std::vector<std::vector<std::size_t>>& b_stabs,
                                        const std::vector<std::size_t>& b_orbit_of) {
  const std::size_t m = a.degree();
  // Candidate images for each orbit representative.
  std::vector<std::vector<Point>> cands(a_orbits.size());
  for (std::size_t o = 0; o < a_orbits.size(); ++o) {
    const Point rep = a_orbits[o].front();
    std::vector<std::size_t> image;
    for (std::size_t i : a_stabs[rep]) image.push_back(iso[i]);
    std::sort(image.begin(), image.end());
    for (std::size_t y = 0; y < m; ++y) {
      if (b_stabs[y] == image) cands[o].push_back(static_cast<Point>(y));
    }
    if (cands[o].empty()) return std::nullopt;
  }

  std::vector<int> relabel(m, -1);
  std::vector<bool> b_orbit_used(m, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t o) -> bool {
    if (o == a_orbits.size()) return true;
    const Point rep = a_orbits[o].front();
    for (Point y : cands[o]) {
      if (b_orbit_used[b_orbit_of[y]]) continue;
      b_orbit_used[b_orbit_of[y]] = true;
      for (std::size_t i = 0; i < a.order(); ++i) {
        relabel[a.element(i)[rep]] = b.element(iso[i])[y];
      }
      if (assign(o + 1)) return true;
      b_orbit_used[b_orbit_of[y]] = false;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  std::vector<Point> images(relabel.begin(), relabel.end());
  return Permutation(std::move(images));
}

}  // namespace

void for_each_isomorphism(const PermGroup& a, const PermGroup& b,
                          const std::function<bool(const GroupIsomorphism&)>& visit) {
  if (a.order() != b.order()) return;
  const auto va = detail::index_view(a);
  const auto vb = detail::index_view(b);
  const auto gens = source_generators(a);
  const auto cands = detail::order_matched_candidates(va, gens, vb);
  detail::for_each_isomorphism(va, gens, vb, cands, [&](std::span<const std::size_t> table) {
    return visit(GroupIsomorphism(a, b, std::vector<std::size_t>(table.begin(), table.end())));
  });
}

std::optional<GroupIsomorphism> find_isomorphism(const PermGroup& a, const PermGroup& b) {
  std::optional<GroupIsomorphism> found;
  for_each_isomorphism(a, b, [&](const GroupIsomorphism& iso) {
    found = iso;
    return false;
  });
  return found;
}

std::optional<GroupIsomorphism> find_isomorphism_to_symmetric(const PermGroup& g,
                                                              std::size_t n) {
  if (n < 1 || n > 8) throw InputError("symmetric-group isomorphism search needs 1 <= n <= 8");
  std::size_t factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) factorial *= i;
  if (g.order() != factorial) return std::nullopt;
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    std::vector<std::size_t> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 0);
    gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return find_isomorphism(g, PermGroup::generate(n, std::move(gens)));
}

std::optional<Permutation> permutation_isomorphism(const PermGroup& a, const PermGroup& b) {
  if (!same_shape(a, b)) return std::nullopt;
  const auto a_orbits = orbits(a);
  const auto a_stabs = stabilizer_indices(a);
  const auto b_stabs = stabilizer_indices(b);
  std::vector<std::size_t> b_orbit_of(b.degree());
  {
    const auto bo = orbits(b);
    for (std::size_t o = 0; o < bo.size(); ++o) {
      for (Point y : bo[o]) b_orbit_of[y] = o;
    }
  }
  std::optional<Permutation> found;
  const auto va = detail::index_view(a);
  const auto vb = detail::index_view(b);
  const auto gens = source_generators(a);
  const auto cands = detail::order_matched_candidates(va, gens, vb);
  detail::for_each_isomorphism(va, gens, vb, cands, [&](std::span<const std::size_t> iso) {
    found = match_points(a, b, iso, a_orbits, a_stabs, b_stabs, b_orbit_of);
    return !found.has_value();
  });
  return found;
}

}  // namespace distnum
