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

#ifndef DISTNUM_GRAPH_HPP
#define DISTNUM_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distnum/perm_group.hpp"
#include "distnum/solver.hpp"

namespace distnum {

/// Simple undirected graph on at most 64 vertices.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  Graph() = default;
  explicit Graph(std::size_t vertices);

  /// Throws InputError on loops, duplicate edges or out-of-range vertices.
  static Graph from_edges(std::size_t vertices,
                          const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept;
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const noexcept {
    return (adjacency_[u] >> v) & 1U;
  }
  std::uint64_t neighbors(std::size_t v) const noexcept { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const noexcept;
  /// Edges (u, v) with u < v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint64_t> adjacency_;
};

Graph petersen();
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complement(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

bool is_automorphism(const Graph& g, const Permutation& p);

/// All automorphisms, sorted. Throws CapExceeded when there are more than
/// `limits.max_order` of them or the graph is larger than `limits.max_degree`.
std::vector<Permutation> automorphisms(const Graph& g, const GroupLimits& limits = {});

inline constexpr std::size_t kMaxAutomorphismVertices = 16;

/// Throws CapExceeded above `max_vertices`.
PermGroup automorphism_group(const Graph& g,
                             std::size_t max_vertices = kMaxAutomorphismVertices);

/// Appends one vertex per flag: joined to every old vertex when the flag is
/// set, isolated from them otherwise. New vertices are not joined to each
/// other. Throws ValidationError unless the automorphism group of the result
/// is that of `g` with the new vertices fixed.
Graph extend_with_fixed_points(const Graph& g, const std::vector<bool>& joined);

/// K_n followed by k - 1 anti-cliques, each matched vertex-to-vertex to the
/// previous copy. Its automorphism group is S_n acting in parallel on k
/// orbits; this is checked before returning.
Graph clique_family(std::size_t n, std::size_t k);

DistinguishingResult graph_distinguishing_number(const Graph& g,
                                                 const SolverOptions& options = {});

struct GraphScan {
  std::uint64_t graphs = 0;     ///< labelled graphs enumerated
  std::uint64_t invariant = 0;  ///< graphs whose automorphism group contains G
  std::uint64_t exact = 0;      ///< graphs whose automorphism group equals G
};

/// Enumerates every labelled graph on the points of `g` (degree <= 8) and
/// counts those whose automorphism group is exactly `g`.
GraphScan scan_graphs_for_group(const PermGroup& g, unsigned threads = 1);

/// Text format: `vertices m`, then one `u v` edge per line (1-based).
/// Blank lines and `#` comments are ignored. Errors carry line numbers.
Graph read_graph(std::istream& in);
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

}  // namespace distnum

#endif  // DISTNUM_GRAPH_HPP
