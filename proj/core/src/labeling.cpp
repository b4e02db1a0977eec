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

#include "distnum/labeling.hpp"

#include <algorithm>
#include <set>

#include "distnum/errors.hpp"

namespace distnum {

Labeling::Labeling(std::vector<Label> labels, std::size_t d) : labels_(std::move(labels)), d_(d) {
  if (d_ == 0) throw InputError("a labeling needs at least one label");
  for (Label l : labels_) {
    if (l < 1 || l > d_) {
      throw InputError("label " + std::to_string(l) + " outside 1.." + std::to_string(d_));
    }
  }
}

std::size_t Labeling::labels_used() const {
  return std::set<Label>(labels_.begin(), labels_.end()).size();
}

Labeling Labeling::canonical() const {
  std::vector<Label> rename(d_ + 1, 0);
  Label next = 1;
  std::vector<Label> out(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (rename[labels_[i]] == 0) rename[labels_[i]] = next++;
    out[i] = rename[labels_[i]];
  }
  return Labeling(std::move(out), d_);
}

bool Labeling::is_canonical() const { return canonical() == *this; }

std::string Labeling::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(labels_[i]);
  }
  return s;
}

void TupleLabeling::validate() const {
  if (d == 0) throw InputError("tuple labeling needs at least one label");
  const std::size_t w = width();
  for (const auto& t : tuples) {
    if (t.size() != w) throw InputError("tuples of unequal length");
    for (Label l : t) {
      if (l < 1 || l > d) throw InputError("tuple entry outside 1..d");
    }
  }
}

bool is_distinguishing(const PermGroup& g, const Labeling& labeling) {
  if (labeling.size() != g.degree()) {
    throw InputError("labeling has " + std::to_string(labeling.size()) +
                     " points but the group has degree " + std::to_string(g.degree()));
  }
  for (std::size_t i = 1; i < g.order(); ++i) {
    const Permutation& e = g.element(i);
    bool preserved = true;
    for (std::size_t x = 0; x < e.degree() && preserved; ++x) {
      preserved = labeling[x] == labeling[e[x]];
    }
    if (preserved) return false;
  }
  return true;
}

void for_each_canonical_labeling(std::size_t m, std::size_t d,
                                 const std::function<bool(std::span<const Label>)>& visit) {
  if (d == 0) return;
  std::vector<Label> labels(m, 1);
  // used[i] = largest label among positions < i.
  std::function<bool(std::size_t, Label)> rec = [&](std::size_t i, Label used) -> bool {
    if (i == m) return visit(labels);
    const Label top = std::min<Label>(used + 1, static_cast<Label>(d));
    for (Label v = 1; v <= top; ++v) {
      labels[i] = v;
      if (!rec(i + 1, std::max(used, v))) return false;
    }
    return true;
  };
  rec(0, 0);
}

}  // namespace distnum
