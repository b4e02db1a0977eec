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

#ifndef DISTNUM_HARNESS_HPP
#define DISTNUM_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distnum/classify.hpp"
#include "distnum/perm_group.hpp"
#include "distnum/profile.hpp"
#include "distnum/solver.hpp"

namespace distnum {

struct VerificationRecord {
  std::string case_id;
  std::string group;
  std::size_t degree = 0;
  std::size_t order = 0;
  std::vector<std::size_t> orbit_sizes;
  std::optional<OrbitProfile> profile;
  std::optional<std::size_t> predicted;  ///< closed-form value, when it applies
  std::optional<std::size_t> expected;   ///< the value the record is checked against
  std::size_t solver_d = 0;
  bool match = false;
  std::optional<bool> constructive_ok;  ///< explicit labeling at the predicted d passes
  std::optional<bool> tight_ok;         ///< every canonical (d-1)-labeling is rejected
  std::string witness;
  std::uint64_t nodes = 0;
  double wall_ms = 0.0;
};

struct VerificationReport {
  std::string title;
  std::vector<VerificationRecord> records;

  bool all_match() const;
};

struct HarnessOptions {
  SolverOptions solver;
  /// Cases evaluated concurrently. Record order never depends on this.
  unsigned jobs = 1;
};

/// Every tabulated exception for t <= t_max and s <= s_max (both <= 2).
VerificationReport run_table1(std::size_t t_max, std::size_t s_max,
                              const HarnessOptions& options = {});

struct GridSpec {
  std::size_t n_min = 3;
  std::size_t n_max = 6;
  std::size_t k_min = 1;
  std::size_t k_max = 2;
  std::size_t r_max = 1;
  std::size_t s_max = 1;
  std::size_t t_max = 1;
  std::size_t max_degree = 14;
};

std::vector<OrbitProfile> grid_profiles(const GridSpec& spec);

/// The canonical group of every profile in the grid against the closed form,
/// with constructive labelings and tightness checks.
VerificationReport run_formula_grid(const GridSpec& spec, const HarnessOptions& options = {});

/// Exhaustive check that no canonical labeling with `labels` labels
/// distinguishes `g`.
bool no_labeling_with(const PermGroup& g, std::size_t labels);

/// Solves a single group. `expected`, if given, is what the record is
/// checked against; otherwise the classification's value is used when known.
VerificationRecord compute_record(std::string case_id, std::string description,
                                  const PermGroup& g, std::optional<std::size_t> expected,
                                  const HarnessOptions& options = {});

struct BuiltGroup {
  PermGroup group;
  std::string description;
  std::optional<std::size_t> expected;  ///< known D for tabulated builders
};

/// Builder names: sym:N, alt:N, cyclic:N, s4-6c, s4-6d, s4-k4-s3,
/// s4-k4-s3-on-10, pgl25, psl25, pgl25-psl-s2:S, s6-on-10, s6-10-s2:S,
/// s6-psi-s6[:S], sn-on-2n:N, petersen-aut, parallel:N,R, formula:N,K,R,S,T.
/// Anything else is read as a group file. `fixed` appends that many fixed
/// points.
BuiltGroup build_group(std::string_view spec, std::size_t fixed = 0);

std::string format_text(const VerificationReport& report, bool include_timing = true);
/// One JSON object per record, one per line.
std::string format_jsonl(const VerificationReport& report, bool include_timing = true);

std::string format_text(const Classification& c);
std::string format_json(const Classification& c);

}  // namespace distnum

#endif  // DISTNUM_HARNESS_HPP
