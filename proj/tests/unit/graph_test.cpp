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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "distnum/constructions.hpp"
#include "distnum/errors.hpp"
#include "distnum/graph.hpp"
#include "distnum/isomorphism.hpp"
#include "oracles.hpp"

namespace distnum {
namespace {

std::vector<std::vector<bool>> adjacency(const Graph& g) {
  const std::size_t m = g.vertex_count();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

std::set<oracle::Images> as_image_set(const std::vector<Permutation>& perms) {
  const auto v = oracle::as_images(perms);
  return {v.begin(), v.end()};
}

Graph random_graph(std::size_t m, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(m);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

TEST(Graph, EdgesAndValidation) {
  Graph g(4);
  g.add_edge(2, 0);
  g.add_edge(1, 3);
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_EQ(g.edges(), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 3}}));
  EXPECT_THROW(g.add_edge(0, 2), InputError);
  EXPECT_THROW(g.add_edge(1, 1), InputError);
  EXPECT_THROW(g.add_edge(0, 4), InputError);
  EXPECT_THROW(Graph(65), InputError);
}

TEST(Graph, Petersen) {
  const Graph p = petersen();
  EXPECT_EQ(p.vertex_count(), 10U);
  EXPECT_EQ(p.edge_count(), 15U);
  for (std::size_t v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3U);
  EXPECT_EQ(girth(p), 5U);
  const Graph c = complement(p);
  EXPECT_EQ(c.edge_count(), 30U);
  for (std::size_t v = 0; v < 10; ++v) EXPECT_EQ(c.degree(v), 6U);
  EXPECT_EQ(girth(c), 3U);
  EXPECT_EQ(complement(c), p);
}

TEST(Graph, Girth) {
  EXPECT_FALSE(girth(path_graph(5)).has_value());
  EXPECT_EQ(girth(cycle_graph(7)), 7U);
  EXPECT_EQ(girth(complete_graph(4)), 3U);
}

TEST(Automorphisms, MatchBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 3 + trial % 5;
    const Graph g = random_graph(m, trial % 2 ? 0.3 : 0.6, rng);
    EXPECT_EQ(as_image_set(automorphisms(g)), oracle::graph_automorphisms(m, adjacency(g)))
        << format_graph(g);
  }
}

TEST(Automorphisms, KnownGroups) {
  EXPECT_EQ(automorphism_group(complete_graph(5)).order(), 120U);
  EXPECT_EQ(automorphism_group(path_graph(3)).order(), 2U);
  EXPECT_EQ(automorphism_group(cycle_graph(6)).order(), 12U);
  const PermGroup aut = automorphism_group(petersen());
  EXPECT_EQ(aut.order(), 120U);
  EXPECT_TRUE(find_isomorphism_to_symmetric(aut, 5).has_value());
  for (const Permutation& p : aut.generators()) EXPECT_TRUE(is_automorphism(petersen(), p));
  EXPECT_EQ(automorphism_group(complement(petersen())).elements(), aut.elements());
}

TEST(Automorphisms, Caps) {
  GroupLimits tight;
  tight.max_order = 100;
  EXPECT_THROW(automorphisms(complete_graph(5), tight), CapExceeded);
  EXPECT_THROW(automorphism_group(Graph(17)), CapExceeded);
}

TEST(Extension, FixedPoints) {
  const Graph isolated = extend_with_fixed_points(petersen(), {false});
  EXPECT_EQ(isolated.vertex_count(), 11U);
  EXPECT_EQ(isolated.degree(10), 0U);
  EXPECT_EQ(automorphism_group(isolated).order(), 120U);
  EXPECT_EQ(graph_distinguishing_number(isolated).d, 3U);

  const Graph both = extend_with_fixed_points(petersen(), {true, false});
  EXPECT_EQ(both.degree(10), 10U);
  EXPECT_EQ(both.degree(11), 0U);
  EXPECT_EQ(automorphism_group(both).order(), 120U);

  // A universal vertex on K_3 is interchangeable with the others.
  EXPECT_THROW(extend_with_fixed_points(complete_graph(3), {true}), ValidationError);
}

TEST(CliqueFamily, Structure) {
  const Graph one = clique_family(4, 1);
  EXPECT_EQ(one, complete_graph(4));
  for (auto [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {4, 2}, {5, 2},
                                                                      {3, 3}, {4, 3}, {3, 4}}) {
    const Graph g = clique_family(n, k);
    const PermGroup aut = automorphism_group(g);
    EXPECT_EQ(aut.order(), oracle::factorial(n)) << n << " " << k;
    EXPECT_EQ(orbit_sizes(aut), std::vector<std::size_t>(k, n));
    const std::size_t predicted = static_cast<std::size_t>(oracle::ceil_root(n, k));
    EXPECT_EQ(graph_distinguishing_number(g).d, predicted) << n << " " << k;
  }
  EXPECT_THROW(clique_family(2, 1), InputError);
  EXPECT_THROW(clique_family(6, 3), InputError);
}

TEST(GraphD, Examples) {
  EXPECT_EQ(graph_distinguishing_number(complete_graph(5)).d, 5U);
  EXPECT_EQ(graph_distinguishing_number(path_graph(4)).d, 2U);
  EXPECT_EQ(graph_distinguishing_number(cycle_graph(5)).d, 3U);
  EXPECT_EQ(graph_distinguishing_number(cycle_graph(6)).d, 2U);
  EXPECT_EQ(graph_distinguishing_number(petersen()).d, 3U);
}

TEST(GraphIo, RoundTripAndErrors) {
  const Graph p = petersen();
  EXPECT_EQ(parse_graph(format_graph(p)), p);
  EXPECT_EQ(parse_graph("# triangle\nvertices 3\n1 2\n2 3\n3 1\n"), cycle_graph(3));
  EXPECT_THROW(parse_graph("1 2\n"), InputError);
  EXPECT_THROW(parse_graph("vertices 3\n1 4\n"), InputError);
  EXPECT_THROW(parse_graph("vertices 3\n1 1\n"), InputError);
  EXPECT_THROW(parse_graph("vertices 3\n1 2 3\n"), InputError);
  try {
    parse_graph("vertices 3\n1 2\n2 1\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(GraphScan, SmallGroups) {
  // S_3 on 3 points: K_3 and its complement.
  const GraphScan s3 = scan_graphs_for_group(symmetric_natural(3));
  EXPECT_EQ(s3.graphs, 8U);
  EXPECT_EQ(s3.invariant, 2U);
  EXPECT_EQ(s3.exact, 2U);
  // C_4 rotations: every invariant graph also admits a reflection.
  const GraphScan c4 = scan_graphs_for_group(cyclic_natural(4));
  EXPECT_EQ(c4.exact, 0U);
  EXPECT_GT(c4.invariant, 0U);
  EXPECT_EQ(scan_graphs_for_group(cyclic_natural(4), 3).invariant, c4.invariant);
  EXPECT_THROW(scan_graphs_for_group(symmetric_natural(8)), CapExceeded);
}

}  // namespace
}  // namespace distnum
