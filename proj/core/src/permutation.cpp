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

#include "distnum/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "distnum/errors.hpp"

namespace distnum {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > kMaxPointCount) {
    throw InputError("permutation degree " + std::to_string(degree) +
                     " exceeds " + std::to_string(kMaxPointCount));
  }
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > kMaxPointCount) {
    throw InputError("permutation degree exceeds " + std::to_string(kMaxPointCount));
  }
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y]) {
      throw InputError("image sequence is not a bijection");
    }
    seen[y] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::size_t x = cycle[i];
      if (x >= degree) {
        throw InputError("cycle point " + std::to_string(x + 1) + " out of range for degree " +
                         std::to_string(degree));
      }
      if (used[x]) {
        throw InputError("point " + std::to_string(x + 1) + " repeated in cycles");
      }
      used[x] = true;
      p.images_[x] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
    }
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) {
    throw InputError("cannot compose permutations of different degree");
  }
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    out.images_[x] = rhs.images_[images_[x]];
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    out.images_[images_[x]] = static_cast<Point>(x);
  }
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (std::size_t len : cycle_type()) {
    result = std::lcm(result, len);
  }
  return result;
}

int Permutation::sign() const {
  std::size_t transpositions = 0;
  for (std::size_t len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles()) lengths.push_back(c.size());
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::vector<Point> Permutation::support() const {
  std::vector<Point> moved;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) moved.push_back(static_cast<Point>(x));
  }
  return moved;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(static_cast<Point>(x));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation Permutation::conjugate(const Permutation& relabel) const {
  if (relabel.degree() != degree()) {
    throw InputError("relabeling has wrong degree");
  }
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    out.images_[relabel.images_[x]] = relabel.images_[images_[x]];
  }
  return out;
}

Permutation Permutation::embed(std::size_t total_degree, std::size_t offset) const {
  if (offset + degree() > total_degree) {
    throw InputError("embedding does not fit");
  }
  Permutation out(total_degree);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    out.images_[offset + x] = static_cast<Point>(offset + images_[x]);
  }
  return out;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(static_cast<unsigned>(c[i]) + 1);
    }
    s += ')';
  }
  return s;
}

Permutation concat(std::span<const Permutation> parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.degree();
  std::vector<Point> images;
  images.reserve(total);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (Point y : p.images()) images.push_back(static_cast<Point>(offset + y));
    offset += p.degree();
  }
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image bytes.
  std::size_t h = 1469598103934665603ull;
  for (Point y : p.images()) {
    h ^= y;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace distnum
