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

#include "distnum/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <istream>
#include <queue>
#include <sstream>
#include <thread>

#include "distnum/errors.hpp"

namespace distnum {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, std::size_t cap) : g_(g), cap_(cap) {
    const std::size_t m = g.vertex_count();
    signature_.resize(m);
    for (std::size_t v = 0; v < m; ++v) {
      auto& sig = signature_[v];
      sig.push_back(g.degree(v));
      std::vector<std::size_t> nbr;
      for (std::size_t u = 0; u < m; ++u) {
        if (g.has_edge(u, v)) nbr.push_back(g.degree(u));
      }
      std::sort(nbr.begin(), nbr.end());
      sig.insert(sig.end(), nbr.begin(), nbr.end());
    }
    // Place vertices so that each new one has as many already-placed
    // neighbours as possible; adjacency to placed vertices prunes hardest.
    std::vector<bool> placed(m, false);
    std::vector<std::size_t> links(m, 0);
    for (std::size_t step = 0; step < m; ++step) {
      std::size_t best = m;
      for (std::size_t v = 0; v < m; ++v) {
        if (placed[v]) continue;
        if (best == m || links[v] > links[best] ||
            (links[v] == links[best] && g.degree(v) > g.degree(best))) {
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for (std::size_t u = 0; u < m; ++u) {
        if (g.has_edge(best, u)) ++links[u];
      }
    }
    image_.assign(m, 0);
  }

  std::vector<Permutation> run() {
    extend(0, 0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void extend(std::size_t depth, std::uint64_t used) {
    const std::size_t m = g_.vertex_count();
    if (depth == m) {
      if (found_.size() >= cap_) {
        throw CapExceeded("graph has more than " + std::to_string(cap_) + " automorphisms");
      }
      found_.emplace_back(std::vector<Point>(image_.begin(), image_.end()));
      return;
    }
    const std::size_t v = order_[depth];
    for (std::size_t w = 0; w < m; ++w) {
      if ((used >> w) & 1U) continue;
      if (signature_[w] != signature_[v]) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        const std::size_t u = order_[i];
        consistent = g_.has_edge(u, v) == g_.has_edge(image_[u], w);
      }
      if (!consistent) continue;
      image_[v] = static_cast<Point>(w);
      extend(depth + 1, used | (std::uint64_t{1} << w));
    }
  }

  const Graph& g_;
  std::size_t cap_;
  std::vector<std::vector<std::size_t>> signature_;
  std::vector<std::size_t> order_;
  std::vector<Point> image_;
  std::vector<Permutation> found_;
};

bool preserves_edges(const Graph& g, const Permutation& p) {
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    std::uint64_t mapped = 0;
    for (std::uint64_t nbrs = g.neighbors(u); nbrs != 0; nbrs &= nbrs - 1) {
      mapped |= std::uint64_t{1} << p[static_cast<std::size_t>(std::countr_zero(nbrs))];
    }
    if (mapped != g.neighbors(p[u])) return false;
  }
  return true;
}

}  // namespace

Graph::Graph(std::size_t vertices) {
  if (vertices > kMaxVertices) {
    throw InputError("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  adjacency_.assign(vertices, 0);
}

Graph Graph::from_edges(std::size_t vertices,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g(vertices);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (auto row : adjacency_) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  const std::size_t m = vertex_count();
  if (u >= m || v >= m) {
    throw InputError("edge (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) +
                     ") references a vertex outside 1.." + std::to_string(m));
  }
  if (u == v) throw InputError("loop at vertex " + std::to_string(u + 1));
  if (has_edge(u, v)) {
    throw InputError("duplicate edge (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) +
                     ")");
  }
  adjacency_[u] |= std::uint64_t{1} << v;
  adjacency_[v] |= std::uint64_t{1} << u;
}

std::size_t Graph::degree(std::size_t v) const noexcept {
  return static_cast<std::size_t>(std::popcount(adjacency_[v]));
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < vertex_count(); ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph petersen() {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  }
  Graph g(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const auto [a, b] = pairs[i];
      const auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
    }
  }
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycles need at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.vertex_count());
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t m = g.vertex_count();
  std::optional<std::size_t> best;
  for (std::size_t root = 0; root < m; ++root) {
    std::vector<std::size_t> dist(m, SIZE_MAX), parent(m, SIZE_MAX);
    std::queue<std::size_t> queue;
    dist[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v = 0; v < m; ++v) {
        if (!g.has_edge(u, v)) continue;
        if (dist[v] == SIZE_MAX) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push(v);
        } else if (parent[u] != v) {
          const std::size_t cycle = dist[u] + dist[v] + 1;
          if (!best || cycle < *best) best = cycle;
        }
      }
    }
  }
  return best;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count()) {
    throw InputError("permutation degree does not match the vertex count");
  }
  return preserves_edges(g, p);
}

std::vector<Permutation> automorphisms(const Graph& g, const GroupLimits& limits) {
  if (g.vertex_count() > limits.max_degree) {
    throw CapExceeded("graph on " + std::to_string(g.vertex_count()) +
                      " vertices exceeds the limit of " + std::to_string(limits.max_degree));
  }
  return AutomorphismSearch(g, limits.max_order).run();
}

PermGroup automorphism_group(const Graph& g, std::size_t max_vertices) {
  GroupLimits limits;
  limits.max_degree = max_vertices;
  auto elements = automorphisms(g, limits);
  return make_subgroup_unchecked(g.vertex_count(), std::move(elements));
}

Graph extend_with_fixed_points(const Graph& g, const std::vector<bool>& joined) {
  const std::size_t old_count = g.vertex_count();
  Graph out(old_count + joined.size());
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (std::size_t i = 0; i < joined.size(); ++i) {
    if (!joined[i]) continue;
    for (std::size_t v = 0; v < old_count; ++v) out.add_edge(old_count + i, v);
  }
  // Every automorphism of g extends by fixing the new vertices, so equal
  // orders mean the groups coincide.
  const std::size_t before = automorphism_group(g).order();
  const std::size_t after = automorphism_group(out).order();
  if (before != after) {
    throw ValidationError("adding the fixed vertices changed the automorphism group order from " +
                          std::to_string(before) + " to " + std::to_string(after));
  }
  return out;
}

Graph clique_family(std::size_t n, std::size_t k) {
  if (n < 3 || k < 1 || n * k > kMaxAutomorphismVertices) {
    throw InputError("clique_family needs n >= 3, k >= 1 and n * k <= " +
                     std::to_string(kMaxAutomorphismVertices));
  }
  Graph g(n * k);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  for (std::size_t copy = 1; copy < k; ++copy) {
    for (std::size_t i = 0; i < n; ++i) g.add_edge((copy - 1) * n + i, copy * n + i);
  }
  const PermGroup aut = automorphism_group(g);
  const auto sizes = orbit_sizes(aut);
  const bool parallel = aut.order() == factorial(n) && sizes.size() == k &&
                        std::all_of(sizes.begin(), sizes.end(),
                                    [n](std::size_t s) { return s == n; });
  if (!parallel) {
    throw ValidationError("clique_family(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") does not have S_n acting on " + std::to_string(k) + " orbits");
  }
  return g;
}

DistinguishingResult graph_distinguishing_number(const Graph& g, const SolverOptions& options) {
  return distinguishing_number(automorphism_group(g), options);
}

GraphScan scan_graphs_for_group(const PermGroup& g, unsigned threads) {
  const std::size_t m = g.degree();
  if (m > 7) throw CapExceeded("graph scans are limited to 7 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) pairs.emplace_back(u, v);
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  threads = std::max(1U, threads);
  std::vector<GraphScan> partial(threads);
  auto work = [&](unsigned worker) {
    GraphScan& out = partial[worker];
    for (std::uint64_t mask = worker; mask < total; mask += threads) {
      ++out.graphs;
      Graph graph(m);
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((mask >> e) & 1U) graph.add_edge(pairs[e].first, pairs[e].second);
      }
      const auto& gens = g.generators();
      if (!std::all_of(gens.begin(), gens.end(),
                       [&](const Permutation& p) { return preserves_edges(graph, p); })) {
        continue;
      }
      ++out.invariant;
      // g is contained in Aut(graph), so equal orders mean equality.
      if (automorphisms(graph).size() == g.order()) ++out.exact;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  GraphScan sum;
  for (const auto& p : partial) {
    sum.graphs += p.graphs;
    sum.invariant += p.invariant;
    sum.exact += p.exact;
  }
  return sum;
}

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<Graph> graph;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    try {
      std::istringstream words{std::string(body)};
      std::string rest;
      if (!graph) {
        std::string keyword;
        long long m = -1;
        if (!(words >> keyword >> m) || keyword != "vertices" || (words >> rest)) {
          throw InputError("expected 'vertices <m>'");
        }
        if (m < 0 || static_cast<std::size_t>(m) > Graph::kMaxVertices) {
          throw InputError("vertex count out of range");
        }
        graph.emplace(static_cast<std::size_t>(m));
        continue;
      }
      long long u = 0, v = 0;
      if (!(words >> u >> v) || (words >> rest)) throw InputError("expected an edge 'u v'");
      if (u < 1 || v < 1) throw InputError("vertices are numbered from 1");
      graph->add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!graph) throw InputError("missing 'vertices <m>' header");
  return *graph;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

std::string format_graph(const Graph& g) {
  std::string out = "vertices " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

}  // namespace distnum
