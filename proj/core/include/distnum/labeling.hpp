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

#ifndef DISTNUM_LABELING_HPP
#define DISTNUM_LABELING_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "distnum/perm_group.hpp"

namespace distnum {

using Label = std::uint32_t;

/// A map from points to labels 1..d.
class Labeling {
 public:
  /// Throws InputError when d == 0 or a label falls outside 1..d.
  Labeling(std::vector<Label> labels, std::size_t d);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t d() const noexcept { return d_; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  Label operator[](std::size_t x) const noexcept { return labels_[x]; }

  /// Number of distinct labels actually used.
  std::size_t labels_used() const;
  /// Renames labels so first occurrences appear as 1, 2, 3, ...
  Labeling canonical() const;
  bool is_canonical() const;

  /// Space-separated labels, e.g. "1 1 2 3".
  std::string to_string() const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Label> labels_;
  std::size_t d_;
};

/// Tuples of labels attached to the points 1..n of a natural action; the
/// coordinate j of tuple i is the label of point i in copy j.
struct TupleLabeling {
  std::vector<std::vector<Label>> tuples;
  std::size_t d = 1;

  std::size_t width() const noexcept { return tuples.empty() ? 0 : tuples.front().size(); }
  /// Throws InputError on ragged tuples or out-of-range entries.
  void validate() const;
};

/// True iff no non-identity element of g preserves every label. Throws
/// InputError when the labeling does not match the degree.
bool is_distinguishing(const PermGroup& g, const Labeling& labeling);

/// Visits every canonical labeling of m points using at most d labels
/// (restricted growth strings, labels 1-based) in lexicographic order.
/// `visit` returns false to stop early.
void for_each_canonical_labeling(std::size_t m, std::size_t d,
                                 const std::function<bool(std::span<const Label>)>& visit);

}  // namespace distnum

#endif  // DISTNUM_LABELING_HPP
