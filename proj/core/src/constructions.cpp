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

#include "distnum/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "distnum/errors.hpp"
#include "distnum/graph.hpp"

namespace distnum {

namespace {

void check_small_n(std::size_t n) {
  if (n < 1 || n > 8) throw InputError("n must lie in 1..8, got " + std::to_string(n));
}

Permutation full_cycle(std::size_t n) {
  std::vector<std::size_t> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0);
  return Permutation::from_cycles(n, {cycle});
}

// Generators of the even permutations of {0..m-1} inside degree n.
std::vector<Permutation> alternating_generators(std::size_t n, std::size_t m) {
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < m; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return gens;
}

void check_degree(std::size_t degree, const GroupLimits& limits) {
  if (degree > limits.max_degree) {
    throw CapExceeded("degree " + std::to_string(degree) + " exceeds the limit of " +
                      std::to_string(limits.max_degree));
  }
}

void check_order(std::size_t order, const GroupLimits& limits) {
  if (order > limits.max_order) {
    throw CapExceeded("group of order " + std::to_string(order) +
                      " exceeds the enumeration cap of " + std::to_string(limits.max_order));
  }
}

PermGroup symmetric_on(std::size_t degree) {
  if (degree < 2) return PermGroup::trivial(degree);
  return PermGroup::generate(degree, {Permutation::from_cycles(degree, {{0, 1}}),
                                      full_cycle(degree)});
}

// Points 0..4 are the field elements, 5 is infinity.
PermGroup projective_line_group(bool special) {
  constexpr int p = 5;
  constexpr Point infinity = 5;
  const std::array<int, p> inverse{0, 1, 3, 2, 4};
  std::set<Permutation> maps;
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      for (int c = 0; c < p; ++c) {
        for (int d = 0; d < p; ++d) {
          const int det = ((a * d - b * c) % p + p) % p;
          if (det == 0) continue;
          if (special && det != 1 && det != 4) continue;  // squares mod 5
          std::vector<Point> images(6);
          for (int x = 0; x < p; ++x) {
            const int denom = (c * x + d) % p;
            images[x] = denom == 0 ? infinity
                                   : static_cast<Point>((a * x + b) % p * inverse[denom] % p);
          }
          images[infinity] = c == 0 ? infinity : static_cast<Point>(a * inverse[c] % p);
          maps.insert(Permutation(std::move(images)));
        }
      }
    }
  }
  return PermGroup::from_elements(6, {maps.begin(), maps.end()});
}

// The ten 3-subsets of {0..5} containing 0, one per splitting into halves.
std::vector<unsigned> splitting_points() {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < 64; ++mask) {
    if ((mask & 1U) && __builtin_popcount(mask) == 3) out.push_back(mask);
  }
  std::sort(out.begin(), out.end(), [](unsigned a, unsigned b) {
    auto elems = [](unsigned m) {
      std::vector<int> e;
      for (int i = 0; i < 6; ++i) {
        if (m >> i & 1U) e.push_back(i);
      }
      return e;
    };
    return elems(a) < elems(b);
  });
  return out;
}

Permutation act_on_splittings(const Permutation& g, const std::vector<unsigned>& points) {
  std::vector<Point> images(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    unsigned image = 0;
    for (std::size_t x = 0; x < 6; ++x) {
      if (points[i] >> x & 1U) image |= 1U << g[x];
    }
    if (!(image & 1U)) image ^= 0x3FU;
    images[i] = static_cast<Point>(
        std::find(points.begin(), points.end(), image) - points.begin());
  }
  return Permutation(std::move(images));
}

ActionComponent natural_component(std::size_t n) {
  return {n, [](const Permutation& g) { return g; }};
}

ActionComponent coset_component(const CosetAction& action) {
  return {action.space.index(), [action](const Permutation& g) { return action.image_of(g); }};
}

CosetAction sn_on_2n_action(std::size_t n) {
  check_small_n(n);
  if (n < 3) throw InputError("the 2n-point action needs n >= 3");
  return coset_action(symmetric_natural(n),
                      PermGroup::generate(n, alternating_generators(n, n - 1)));
}

// Glues S_2^(s) onto `base` over its index-2 subgroup `even`.
PermGroup glue_sign_pairs(const PermGroup& base, const PermGroup& even, std::size_t s,
                          const GroupLimits& limits) {
  if (s == 0) return base;
  const PermGroup pairs = parallel_power(symmetric_natural(2), s, limits);
  return subdirect_sum(
      index_two_pairing(CosetSpace(base, even), CosetSpace(pairs, PermGroup::trivial(2 * s))),
      limits);
}

}  // namespace

PermGroup symmetric_natural(std::size_t n) {
  check_small_n(n);
  return symmetric_on(n);
}

PermGroup alternating_natural(std::size_t n) {
  check_small_n(n);
  return PermGroup::generate(n, alternating_generators(n, n));
}

PermGroup cyclic_natural(std::size_t n) {
  check_small_n(n);
  return PermGroup::generate(n, {full_cycle(n)});
}

PermGroup direct_sum(const PermGroup& g1, const PermGroup& g2, const GroupLimits& limits) {
  const std::size_t degree = g1.degree() + g2.degree();
  check_degree(degree, limits);
  check_order(g1.order() * g2.order(), limits);
  // Outer loop over sorted g1, inner over sorted g2 keeps the result sorted.
  std::vector<Permutation> elements;
  elements.reserve(g1.order() * g2.order());
  for (const auto& a : g1.elements()) {
    for (const auto& b : g2.elements()) {
      const std::array<Permutation, 2> parts{a, b};
      elements.push_back(concat(parts));
    }
  }
  return make_subgroup_unchecked(degree, std::move(elements));
}

PermGroup with_fixed_points(const PermGroup& g, std::size_t t, const GroupLimits& limits) {
  return direct_sum(g, PermGroup::trivial(t), limits);
}

PermGroup subdirect_sum(const QuotientIso& phi, const GroupLimits& limits) {
  const PermGroup& g1 = phi.left().parent();
  const PermGroup& g2 = phi.right().parent();
  const std::size_t degree = g1.degree() + g2.degree();
  check_degree(degree, limits);
  check_order(g1.order() * phi.right().subgroup().order(), limits);
  std::vector<std::vector<Permutation>> right_cosets(phi.right().index());
  for (std::size_t c = 0; c < right_cosets.size(); ++c) right_cosets[c] = phi.right().members(c);
  std::vector<Permutation> elements;
  for (std::size_t i = 0; i < g1.order(); ++i) {
    const auto& partners = right_cosets[phi(phi.left().coset_of_element(i))];
    for (const auto& h : partners) {
      const std::array<Permutation, 2> parts{g1.element(i), h};
      elements.push_back(concat(parts));
    }
  }
  return make_subgroup_unchecked(degree, std::move(elements));
}

PermGroup parallel_power(const PermGroup& g, std::size_t r, const GroupLimits& limits) {
  if (r == 0) throw InputError("parallel power needs r >= 1");
  const std::size_t degree = g.degree() * r;
  check_degree(degree, limits);
  std::vector<Permutation> elements;
  elements.reserve(g.order());
  for (const auto& e : g.elements()) {
    const std::vector<Permutation> parts(r, e);
    elements.push_back(concat(parts));
  }
  return make_subgroup_unchecked(degree, std::move(elements));
}

PermGroup diagonal_image(const PermGroup& source, std::span<const ActionComponent> parts,
                         const std::vector<Permutation>* only) {
  std::size_t degree = 0;
  for (const auto& part : parts) degree += part.degree;
  const auto& gens = only ? *only : source.generators();
  std::vector<Permutation> images;
  for (const auto& gen : gens) {
    std::vector<Permutation> pieces;
    for (const auto& part : parts) pieces.push_back(part.act(gen));
    images.push_back(concat(pieces));
  }
  return PermGroup::generate(degree, std::move(images),
                             GroupLimits{source.order(), kMaxPointCount});
}

GroupIsomorphism outer_automorphism_s6() {
  const PermGroup s6 = symmetric_natural(6);
  const Permutation transposition = Permutation::from_cycles(6, {{0, 1}});
  std::optional<GroupIsomorphism> found;
  for_each_isomorphism(s6, s6, [&](const GroupIsomorphism& iso) {
    if (iso(transposition).cycle_type() == std::vector<std::size_t>{2, 2, 2}) {
      found = iso;
      return false;
    }
    return true;
  });
  if (!found) throw ValidationError("no automorphism of S_6 moves the transposition class");
  return *found;
}

SubdirectDecomposition decompose(const PermGroup& g, std::span<const Point> block1) {
  if (!is_invariant(g, block1)) throw InputError("block is not a union of orbits");
  PointSet b1(block1.begin(), block1.end());
  std::sort(b1.begin(), b1.end());
  PointSet b2;
  for (std::size_t x = 0; x < g.degree(); ++x) {
    if (!std::binary_search(b1.begin(), b1.end(), static_cast<Point>(x))) {
      b2.push_back(static_cast<Point>(x));
    }
  }
  const PermGroup g1 = restrict_to(g, b1);
  const PermGroup g2 = restrict_to(g, b2);
  std::unordered_map<Permutation, Permutation, PermutationHash> lift;
  std::set<Permutation> h1, h2;
  for (const auto& e : g.elements()) {
    Permutation left = restrict_permutation(e, b1);
    Permutation right = restrict_permutation(e, b2);
    if (right.is_identity()) h1.insert(left);
    if (left.is_identity()) h2.insert(right);
    lift.emplace(std::move(left), std::move(right));
  }
  CosetSpace left(g1, make_subgroup_unchecked(b1.size(), {h1.begin(), h1.end()}));
  CosetSpace right(g2, make_subgroup_unchecked(b2.size(), {h2.begin(), h2.end()}));
  QuotientIso phi = induced_pairing(std::move(left), std::move(right),
                                    [&](const Permutation& x) { return lift.at(x); });
  return {std::move(b1), std::move(b2), std::move(phi)};
}

PermGroup reassemble(const SubdirectDecomposition& d, const GroupLimits& limits) {
  const PermGroup local = subdirect_sum(d.phi, limits);
  std::vector<Point> relabel(d.block1.begin(), d.block1.end());
  relabel.insert(relabel.end(), d.block2.begin(), d.block2.end());
  return conjugate_group(local, Permutation(std::move(relabel)));
}

PermGroup s4_6c() {
  const PermGroup s4 = symmetric_natural(4);
  return coset_action(s4, PermGroup::generate(4, {full_cycle(4)})).image;
}

PermGroup s4_6d() {
  const PermGroup s4 = symmetric_natural(4);
  const PermGroup klein = PermGroup::generate(4, {Permutation::from_cycles(4, {{0, 1}}),
                                                  Permutation::from_cycles(4, {{2, 3}})});
  return coset_action(s4, klein).image;
}

PermGroup pgl25() { return projective_line_group(false); }

PermGroup psl25() { return projective_line_group(true); }

PermGroup s6_on_10() {
  const auto points = splitting_points();
  const PermGroup s6 = symmetric_natural(6);
  std::vector<Permutation> gens;
  for (const auto& g : s6.generators()) gens.push_back(act_on_splittings(g, points));
  return PermGroup::generate(points.size(), std::move(gens));
}

PermGroup sn_on_2n(std::size_t n) { return sn_on_2n_action(n).image; }

PermGroup petersen_aut() { return automorphism_group(petersen()); }

namespace {

PermGroup klein_normal() {
  return PermGroup::generate(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                 Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
}

// S_4 permutes the three ways of splitting {0,1,2,3} into pairs; the kernel
// is K_4.
Permutation act_on_pair_splittings(const Permutation& g) {
  // Splitting i pairs 0 with i + 1.
  std::vector<Point> images(3);
  for (std::size_t i = 0; i < 3; ++i) {
    const Point a = g[0], b = g[i + 1];
    const Point partner = a == 0 ? b : (b == 0 ? a : static_cast<Point>(6 - a - b));
    images[i] = static_cast<Point>(partner - 1);
  }
  return Permutation(std::move(images));
}

}  // namespace

PermGroup s4_k4_s3() {
  const PermGroup s4 = symmetric_natural(4);
  return subdirect_sum(induced_pairing(CosetSpace(s4, klein_normal()),
                                       CosetSpace(symmetric_natural(3), PermGroup::trivial(3)),
                                       act_on_pair_splittings));
}

PermGroup s4_k4_s3_on_10() {
  const PermGroup s4 = symmetric_natural(4);
  const PermGroup k4 = klein_normal();
  // S_4/K_4 acting on the six cosets of K_4 is the regular S_3.
  const CosetAction quotient = coset_action(s4, k4);
  return subdirect_sum(induced_pairing(CosetSpace(s4, k4),
                                       CosetSpace(quotient.image, PermGroup::trivial(6)),
                                       [&](const Permutation& g) { return quotient.image_of(g); }));
}

PermGroup named_group(std::string_view name, std::size_t n) {
  if (name == "S4_6c") return s4_6c();
  if (name == "S4_6d") return s4_6d();
  if (name == "S4_K4_S3") return s4_k4_s3();
  if (name == "S4_K4_S3_on_10") return s4_k4_s3_on_10();
  if (name == "PGL25") return pgl25();
  if (name == "PSL25") return psl25();
  if (name == "S6_on_10") return s6_on_10();
  if (name == "Sn_on_2n") return sn_on_2n(n);
  if (name == "petersen_aut") return petersen_aut();
  throw InputError("unknown group name '" + std::string(name) + "'");
}

namespace {

constexpr std::array<Table1Entry, 8> kTable1{{
    {Table1Row::S4_6c, "S4_6c", "S4(6c) + I_t", 4, 3, false, 0},
    {Table1Row::S4_6d, "S4_6d", "S4(6d) + I_t", 4, 3, false, 0},
    {Table1Row::S4_K4_S3, "S4_K4_S3", "(S4[K4] +phi S3) + I_t", 4, 3, false, 0},
    {Table1Row::PGL25, "PGL25", "PGL(2,5) + I_t", 5, 4, false, 0},
    {Table1Row::PGL25_PSL_S2, "PGL25_PSL_S2", "(PGL(2,5)[PSL(2,5)] +phi S2^(s)) + I_t", 5, 3,
     true, 1},
    {Table1Row::AutPetersen, "AutP", "Aut(P) + I_t", 5, 3, false, 0},
    {Table1Row::S6_10, "S6_10", "((S6,10)[(A6,10)] +phi S2^(s)) + I_t", 6, 3, true, 0},
    {Table1Row::S6_psi_S6, "S6_psi_S6", "((S6 +psi S6)[A6 +psi A6] +phi S2^(s)) + I_t", 6, 3,
     true, 0},
}};

}  // namespace

std::span<const Table1Entry> table1_entries() { return kTable1; }

const Table1Entry& table1_entry(Table1Row row) {
  for (const auto& e : kTable1) {
    if (e.row == row) return e;
  }
  throw InputError("unknown table row");
}

PermGroup table1_group(Table1Row row, std::size_t s, std::size_t t, const GroupLimits& limits) {
  const Table1Entry& entry = table1_entry(row);
  if (!entry.takes_s && s != 0) {
    throw InputError(std::string(entry.name) + " has no S2^(s) summand");
  }
  if (entry.takes_s && s < entry.s_min) {
    throw InputError(std::string(entry.name) + " needs s >= " + std::to_string(entry.s_min));
  }
  PermGroup base;
  switch (row) {
    case Table1Row::S4_6c:
      base = s4_6c();
      break;
    case Table1Row::S4_6d:
      base = s4_6d();
      break;
    case Table1Row::S4_K4_S3:
      base = s4_k4_s3();
      break;
    case Table1Row::PGL25:
      base = pgl25();
      break;
    case Table1Row::AutPetersen:
      base = petersen_aut();
      break;
    case Table1Row::PGL25_PSL_S2:
      base = glue_sign_pairs(pgl25(), psl25(), s, limits);
      break;
    case Table1Row::S6_10: {
      const auto points = splitting_points();
      const std::array<ActionComponent, 1> parts{
          ActionComponent{points.size(),
                          [points](const Permutation& g) { return act_on_splittings(g, points); }}};
      const PermGroup s6 = symmetric_natural(6);
      const auto even = alternating_generators(6, 6);
      base = glue_sign_pairs(diagonal_image(s6, parts), diagonal_image(s6, parts, &even), s,
                             limits);
      break;
    }
    case Table1Row::S6_psi_S6: {
      const GroupIsomorphism psi = outer_automorphism_s6();
      const std::array<ActionComponent, 2> parts{
          natural_component(6),
          ActionComponent{6, [psi](const Permutation& g) { return psi(g); }}};
      const PermGroup s6 = symmetric_natural(6);
      const auto even = alternating_generators(6, 6);
      base = glue_sign_pairs(diagonal_image(s6, parts), diagonal_image(s6, parts, &even), s,
                             limits);
      break;
    }
  }
  return with_fixed_points(base, t, limits);
}

std::vector<PointRole> formula_layout(const OrbitProfile& p) {
  if (p.n < 3 || !p.is_faithful()) throw InputError("invalid profile " + p.to_string());
  std::vector<PointRole> roles;
  for (std::size_t j = 0; j < p.k; ++j) {
    for (std::size_t i = 0; i < p.n; ++i) {
      roles.push_back({PointRole::Kind::Natural, j, j, static_cast<Point>(i), 0});
    }
  }
  if (p.r > 0) {
    const CosetAction action = sn_on_2n_action(p.n);
    const auto& reps = action.space.representatives();
    for (std::size_t q = 0; q < p.r; ++q) {
      for (const auto& rep : reps) {
        // The coset A_{n-1}x is determined by where x sends n-1 and by the
        // parity of x.
        const std::size_t half = rep.sign() == 1 ? 0 : 1;
        roles.push_back(
            {PointRole::Kind::DoubleHalf, q, p.k + 2 * q + half, rep[p.n - 1], half});
      }
    }
  }
  for (std::size_t j = 0; j < p.s; ++j) {
    roles.push_back({PointRole::Kind::Sign, j, 0, 0, 0});
    roles.push_back({PointRole::Kind::Sign, j, 0, 0, 1});
  }
  for (std::size_t j = 0; j < p.t; ++j) roles.push_back({PointRole::Kind::Fixed, j, 0, 0, 0});
  return roles;
}

FormulaGroup formula_group(const OrbitProfile& p, const GroupLimits& limits) {
  if (p.n < 3 || !p.is_faithful()) throw InputError("invalid profile " + p.to_string());
  check_small_n(p.n);
  check_degree(p.degree(), limits);
  std::vector<ActionComponent> parts;
  for (std::size_t j = 0; j < p.k; ++j) parts.push_back(natural_component(p.n));
  if (p.r > 0) {
    const CosetAction action = sn_on_2n_action(p.n);
    for (std::size_t q = 0; q < p.r; ++q) parts.push_back(coset_component(action));
  }
  const PermGroup sn = symmetric_natural(p.n);
  PermGroup group = diagonal_image(sn, parts);
  if (p.s > 0) {
    const auto even = alternating_generators(p.n, p.n);
    group = glue_sign_pairs(group, diagonal_image(sn, parts, &even), p.s, limits);
  }
  group = with_fixed_points(group, p.t, limits);
  return {p, std::move(group), formula_layout(p)};
}

}  // namespace distnum
