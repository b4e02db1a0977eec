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

#ifndef DISTNUM_SOLVER_HPP
#define DISTNUM_SOLVER_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "distnum/labeling.hpp"
#include "distnum/perm_group.hpp"

namespace distnum {

struct SolverOptions {
  /// Groups of larger degree are rejected with CapExceeded.
  std::size_t max_degree = 16;
  /// Wall-clock budget; exceeding it raises BudgetExceeded.
  std::optional<std::chrono::milliseconds> budget;
  /// Worker threads for the labeling search. With more than one thread and
  /// strict_witness off, the witness may be any valid labeling.
  unsigned threads = 1;
  bool strict_witness = true;
};

/// Exact distinguishing number with a witness.
struct DistinguishingResult {
  std::size_t d = 0;
  /// Lexicographically least canonical labeling with d labels (in strict
  /// mode).
  Labeling witness{{}, 1};
  /// Every labeling with d - 1 labels was refuted.
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

/// Tries d = 1, 2, ... until a distinguishing labeling exists.
DistinguishingResult distinguishing_number(const PermGroup& g, const SolverOptions& options = {});

/// The least canonical distinguishing labeling with at most d labels.
std::optional<Labeling> find_distinguishing_labeling(const PermGroup& g, std::size_t d,
                                                     const SolverOptions& options = {});

struct RegularSetOptions {
  std::size_t max_degree = 24;
  /// Random subsets tried before the exhaustive search.
  std::size_t random_trials = 64;
  std::uint64_t seed = 0x5eed;
  std::optional<std::chrono::milliseconds> budget;
};

/// A point subset whose setwise stabilizer is trivial, if one exists.
std::optional<PointSet> regular_set(const PermGroup& g, const RegularSetOptions& options = {});

}  // namespace distnum

#endif  // DISTNUM_SOLVER_HPP
