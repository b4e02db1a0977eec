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

#include "distnum/formula.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "distnum/constructions.hpp"
#include "distnum/errors.hpp"
#include "distnum/isomorphism.hpp"

namespace distnum {

namespace {

// d^k >= x without overflow.
bool power_reaches(std::uint64_t d, std::uint64_t k, std::uint64_t x) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (acc >= x / d + (x % d != 0)) return true;  // acc * d >= x
    acc *= d;
  }
  return acc >= x;
}

// min(d^k, cap)
std::uint64_t capped_power(std::uint64_t d, std::uint64_t k, std::uint64_t cap) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (acc > cap / d) return cap;
    acc *= d;
  }
  return std::min(acc, cap);
}

std::vector<Label> tuple_at(std::uint64_t index, std::size_t width, std::size_t d) {
  std::vector<Label> t(width);
  for (std::size_t j = width; j-- > 0;) {
    t[j] = static_cast<Label>(index % d + 1);
    index /= d;
  }
  return t;
}

// At most one tuple value appears twice, none three times.
bool tuples_meet_criterion(const std::vector<std::vector<Label>>& tuples) {
  std::map<std::vector<Label>, std::size_t> counts;
  for (const auto& t : tuples) ++counts[t];
  std::size_t doubles = 0;
  for (const auto& [t, c] : counts) {
    if (c >= 3) return false;
    if (c == 2) ++doubles;
  }
  return doubles <= 1;
}

std::vector<Label> column_multiset(const std::vector<std::vector<Label>>& tuples, std::size_t c) {
  std::vector<Label> out;
  for (const auto& t : tuples) out.push_back(t[c]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::uint64_t ceil_root(std::uint64_t x, std::uint64_t k) {
  if (k == 0) throw InputError("root index must be positive");
  if (x <= 1) return 1;
  std::uint64_t lo = 1, hi = x;  // hi^k >= x always
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (power_reaches(mid, k, x)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::size_t predicted_d(const OrbitProfile& p) {
  if (p.n < 3) throw InputError("the formula needs n >= 3");
  if (!p.is_faithful()) throw InputError("profile " + p.to_string() + " has k + r = 0");
  if (p.r + p.s == 0) return ceil_root(p.n, p.k);
  return ceil_root(p.n - 1, p.m());
}

OrbitProfile orbit_profile(const PermGroup& g, std::size_t n) {
  if (n < 3) throw InputError("orbit profiles need n >= 3");
  if (!find_isomorphism_to_symmetric(g, n)) {
    throw InputError("group is not isomorphic to S_" + std::to_string(n));
  }
  OrbitProfile p;
  p.n = n;
  for (std::size_t size : orbit_sizes(g)) {
    if (size == 1) {
      ++p.t;
    } else if (size == 2) {
      ++p.s;
    } else if (size == n) {
      ++p.k;
    } else if (size == 2 * n) {
      ++p.r;
    } else {
      throw LargeOrbit(size, "orbit of size " + std::to_string(size) +
                                 " is outside {1, 2, n, 2n}; large-orbit case");
    }
  }
  return p;
}

TupleLabeling distinct_tuples(std::size_t n, std::size_t k, std::size_t d) {
  if (k == 0 || d == 0) throw InputError("tuples need k >= 1 and d >= 1");
  if (!power_reaches(d, k, n)) {
    throw Infeasible(std::to_string(d) + "^" + std::to_string(k) + " < " + std::to_string(n) +
                     ": not enough distinct tuples");
  }
  TupleLabeling out;
  out.d = d;
  for (std::size_t i = 0; i < n; ++i) out.tuples.push_back(tuple_at(i, k, d));
  return out;
}

Labeling product_labeling(std::size_t n, std::size_t k, std::size_t t, std::size_t d) {
  const TupleLabeling tuples = distinct_tuples(n, k, d);
  std::vector<Label> labels;
  labels.reserve(n * k + t);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(tuples.tuples[i][j]);
  }
  labels.insert(labels.end(), t, 1);
  return Labeling(std::move(labels), d);
}

TupleLabeling alternating_tuples(const OrbitProfile& p, std::size_t d) {
  if (p.n < 3 || !p.is_faithful()) throw InputError("invalid profile " + p.to_string());
  if (p.r + p.s == 0) {
    throw InputError("alternating labelings need an orbit of size 2 or 2n");
  }
  const std::size_t m = p.m();
  if (m == 0 || d == 0 || !power_reaches(d, m, p.n - 1)) {
    throw Infeasible(std::to_string(d) + "^" + std::to_string(m) + " < " +
                     std::to_string(p.n - 1) + ": no labeling with these labels");
  }
  const std::uint64_t available = capped_power(d, m, p.n);
  TupleLabeling out;
  out.d = d;
  for (std::uint64_t i = 0; i < std::min<std::uint64_t>(available, p.n); ++i) {
    out.tuples.push_back(tuple_at(i, m, d));
  }
  // n = d^m + 1: exactly one tuple is used twice.
  if (out.tuples.size() < p.n) out.tuples.push_back(out.tuples.front());

  if (p.s == 0) {
    // Odd permutations swap the halves of each 2n-orbit; the first one must
    // see different label multisets on its halves.
    const std::size_t c1 = p.k, c2 = p.k + 1;
    if (column_multiset(out.tuples, c1) == column_multiset(out.tuples, c2)) {
      bool repaired = false;
      for (std::size_t i = 0; i < out.tuples.size() && !repaired; ++i) {
        for (Label v = 1; v <= d && !repaired; ++v) {
          if (v == out.tuples[i][c1]) continue;
          auto candidate = out.tuples;
          candidate[i][c1] = v;
          if (tuples_meet_criterion(candidate)) {
            out.tuples = std::move(candidate);
            repaired = true;
          }
        }
      }
      if (!repaired) throw Infeasible("could not separate the halves of the 2n-orbit");
    }
  }
  return out;
}

Labeling alternating_labeling(const OrbitProfile& p, std::size_t d) {
  const TupleLabeling tuples = alternating_tuples(p, d);
  const auto roles = formula_layout(p);
  std::vector<Label> labels(roles.size(), 1);
  for (std::size_t x = 0; x < roles.size(); ++x) {
    const PointRole& role = roles[x];
    switch (role.kind) {
      case PointRole::Kind::Natural:
      case PointRole::Kind::DoubleHalf:
        labels[x] = tuples.tuples[role.natural_point][role.coordinate];
        break;
      case PointRole::Kind::Sign:
        labels[x] = static_cast<Label>(role.half + 1);
        break;
      case PointRole::Kind::Fixed:
        labels[x] = 1;
        break;
    }
  }
  return Labeling(std::move(labels), d);
}

bool alternating_criterion(std::span<const Label> labels) {
  std::map<Label, std::size_t> counts;
  for (Label l : labels) ++counts[l];
  std::size_t doubles = 0;
  for (const auto& [l, c] : counts) {
    if (c >= 3) return false;
    if (c == 2) ++doubles;
  }
  return doubles <= 1;
}

}  // namespace distnum
