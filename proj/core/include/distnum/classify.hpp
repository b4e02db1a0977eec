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

#ifndef DISTNUM_CLASSIFY_HPP
#define DISTNUM_CLASSIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distnum/constructions.hpp"
#include "distnum/perm_group.hpp"
#include "distnum/profile.hpp"
#include "distnum/solver.hpp"

namespace distnum {

struct Classification {
  enum class Kind {
    Formula,          ///< permutation isomorphic to the canonical group of its profile
    Table1Exception,  ///< one of the tabulated exceptional groups
    RegularSet,       ///< a regular set exists, so D = 2
    Unresolved,       ///< none of the above applied
  };

  std::size_t n = 0;
  Kind kind = Kind::Unresolved;
  std::vector<std::size_t> orbit_sizes;
  std::optional<OrbitProfile> profile;
  std::optional<Table1Row> row;
  std::size_t row_s = 0;
  std::size_t row_t = 0;
  std::optional<PointSet> regular_set;
  /// D as determined by the classification.
  std::optional<std::size_t> d;
  /// D from the exact solver, when the cross-check ran.
  std::optional<std::size_t> solver_d;
  std::string note;

  bool consistent() const { return !d || !solver_d || *d == *solver_d; }
};

std::string_view to_string(Classification::Kind kind);

struct ClassifyOptions {
  SolverOptions solver;
  RegularSetOptions regular;
  bool cross_check = true;
};

/// Throws InputError unless `g` is abstractly isomorphic to S_n, 3 <= n <= 7.
Classification classify(const PermGroup& g, const ClassifyOptions& options = {});

/// n with g isomorphic to S_n for 3 <= n <= 8, if any.
std::optional<std::size_t> symmetric_degree(const PermGroup& g);

}  // namespace distnum

#endif  // DISTNUM_CLASSIFY_HPP
