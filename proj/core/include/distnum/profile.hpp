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

#ifndef DISTNUM_PROFILE_HPP
#define DISTNUM_PROFILE_HPP

#include <cstddef>
#include <string>

namespace distnum {

/// Orbit counts of a faithful S_n action whose orbits all have size
/// 1, 2, n or 2n: k orbits of size n, r of size 2n, s of size 2, t fixed
/// points.
struct OrbitProfile {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t t = 0;

  /// Number of A_n-orbits of size n: each 2n-orbit splits in two.
  std::size_t m() const noexcept { return k + 2 * r; }
  std::size_t degree() const noexcept { return n * k + 2 * n * r + 2 * s + t; }
  bool is_faithful() const noexcept { return k + r > 0; }

  std::string to_string() const {
    return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", r=" + std::to_string(r) +
           ", s=" + std::to_string(s) + ", t=" + std::to_string(t) + ")";
  }

  friend bool operator==(const OrbitProfile&, const OrbitProfile&) = default;
};

}  // namespace distnum

#endif  // DISTNUM_PROFILE_HPP
