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

#ifndef DISTNUM_PERMUTATION_HPP
#define DISTNUM_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace distnum {

/// Points are 0-based indices. Degrees above 255 are rejected.
using Point = std::uint8_t;

inline constexpr std::size_t kMaxPointCount = 255;

/// A bijection of {0, ..., m-1}, acting on the right: x(gh) = (xg)h.
class Permutation {
 public:
  /// The identity on zero points.
  Permutation() = default;

  /// The identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Throws InputError unless `images` is a bijection on {0..m-1}.
  explicit Permutation(std::vector<Point> images);

  /// Builds from 0-based disjoint cycles. Throws InputError on repeated or
  /// out-of-range points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  /// Composition, left factor applied first.
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  bool is_identity() const noexcept;
  std::size_t order() const;
  /// +1 for even, -1 for odd.
  int sign() const;
  /// Lengths of the non-trivial cycles, sorted in decreasing order.
  std::vector<std::size_t> cycle_type() const;
  std::vector<Point> support() const;
  /// Disjoint cycles (length >= 2), each starting at its least point,
  /// ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Relabels points: the result maps relabel[x] to relabel[x * this].
  Permutation conjugate(const Permutation& relabel) const;

  /// Places this permutation on points [offset, offset + degree) of a larger
  /// set, fixing everything else.
  Permutation embed(std::size_t total_degree, std::size_t offset) const;

  /// 1-based cycle notation, e.g. "(1 2)(3 4)"; the identity prints as "()".
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Concatenates permutations acting on consecutive blocks of points.
Permutation concat(std::span<const Permutation> parts);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace distnum

#endif  // DISTNUM_PERMUTATION_HPP
