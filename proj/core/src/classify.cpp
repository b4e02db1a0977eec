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

#include "distnum/classify.hpp"

#include <algorithm>

#include "distnum/errors.hpp"
#include "distnum/formula.hpp"
#include "distnum/isomorphism.hpp"

namespace distnum {

namespace {

std::optional<Table1Row> match_table1(const PermGroup& g, std::size_t n, std::size_t& s_out,
                                      std::size_t& t_out) {
  const auto sizes = orbit_sizes(g);
  const std::size_t t = static_cast<std::size_t>(std::count(sizes.begin(), sizes.end(), 1));
  const std::size_t s = static_cast<std::size_t>(std::count(sizes.begin(), sizes.end(), 2));
  for (const auto& entry : table1_entries()) {
    if (entry.n != n) continue;
    if (!entry.takes_s && s != 0) continue;
    if (entry.takes_s && s < entry.s_min) continue;
    const std::size_t row_s = entry.takes_s ? s : 0;
    PermGroup candidate;
    try {
      candidate = table1_group(entry.row, row_s, t);
    } catch (const CapExceeded&) {
      continue;
    }
    if (candidate.degree() != g.degree()) continue;
    if (permutation_isomorphic(g, candidate)) {
      s_out = row_s;
      t_out = t;
      return entry.row;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Classification::Kind kind) {
  switch (kind) {
    case Classification::Kind::Formula:
      return "formula";
    case Classification::Kind::Table1Exception:
      return "table1-exception";
    case Classification::Kind::RegularSet:
      return "regular-set";
    case Classification::Kind::Unresolved:
      return "unresolved";
  }
  return "unresolved";
}

std::optional<std::size_t> symmetric_degree(const PermGroup& g) {
  std::size_t factorial = 2;
  for (std::size_t n = 3; n <= 8; ++n) {
    factorial *= n;
    if (g.order() == factorial) {
      if (find_isomorphism_to_symmetric(g, n)) return n;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Classification classify(const PermGroup& g, const ClassifyOptions& options) {
  const auto n = symmetric_degree(g);
  if (!n || *n > 7) throw InputError("group is not isomorphic to S_n for any 3 <= n <= 7");
  Classification c;
  c.n = *n;
  c.orbit_sizes = orbit_sizes(g);

  bool large_orbit = false;
  try {
    c.profile = orbit_profile(g, c.n);
  } catch (const LargeOrbit& e) {
    large_orbit = true;
    c.note = e.what();
  }

  if (c.profile && c.profile->is_faithful()) {
    const FormulaGroup canonical = formula_group(*c.profile);
    if (permutation_isomorphic(g, canonical.group)) {
      c.kind = Classification::Kind::Formula;
      c.d = predicted_d(*c.profile);
    }
  }
  if (c.kind == Classification::Kind::Unresolved) {
    if (auto row = match_table1(g, c.n, c.row_s, c.row_t)) {
      c.kind = Classification::Kind::Table1Exception;
      c.row = row;
      c.d = table1_entry(*row).d;
    }
  }
  if (c.kind == Classification::Kind::Unresolved && g.degree() <= options.regular.max_degree) {
    if (auto set = regular_set(g, options.regular)) {
      c.kind = Classification::Kind::RegularSet;
      c.regular_set = std::move(set);
      c.d = 2;
    } else if (!large_orbit) {
      c.note = "orbit sizes are in the formula family but the group is not the canonical one";
    } else {
      c.note += "; no regular set found";
    }
  }

  if (options.cross_check && g.degree() <= options.solver.max_degree) {
    try {
      c.solver_d = distinguishing_number(g, options.solver).d;
    } catch (const BudgetExceeded&) {
      if (!c.note.empty()) c.note += "; ";
      c.note += "solver cross-check ran out of budget";
    }
  }
  return c;
}

}  // namespace distnum
