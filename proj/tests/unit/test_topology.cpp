// Copyright 2026 The qroute Authors
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

#include "qroute/topology.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

namespace qroute {
namespace {

TEST(WaxmanTest, LinkProbability) {
  EXPECT_DOUBLE_EQ(waxman_link_probability(0.0, 1.0, 0.85, 0.275), 0.275);
  EXPECT_NEAR(waxman_link_probability(1.0, 1.0, 0.85, 0.275), 0.0848004211715599, 1e-15);
  EXPECT_NEAR(waxman_link_probability(0.7, 0.7, 0.85, 0.275), 0.0848004211715599, 1e-15);
  EXPECT_DOUBLE_EQ(waxman_link_probability(0.0, 0.0, 0.85, 0.275), 0.275);
}

TEST(WaxmanTest, SingleRepeater) {
  WaxmanParams params;
  params.n_repeaters = 1;
  RandomStream rng(1);
  const auto   g = generate_waxman(params, rng);
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_TRUE(g.repeaters_connected());
}

TEST(WaxmanTest, GeneratedGraphsAreConnectedAndInSquare) {
  WaxmanParams params;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomStream rng(seed);
    const auto   g = generate_waxman(params, rng);
    ASSERT_EQ(g.repeater_count(), 25u);
    ASSERT_TRUE(g.repeaters_connected());
    for (const auto& node : g.nodes()) {
      ASSERT_GE(node.position.x, 0.0);
      ASSERT_LT(node.position.x, 1.0);
      ASSERT_GE(node.position.y, 0.0);
      ASSERT_LT(node.position.y, 1.0);
    }
  }
}

TEST(WaxmanTest, SameSeedSameGraph) {
  WaxmanParams params;
  RandomStream a(77);
  RandomStream b(77);
  EXPECT_EQ(graph_to_json(generate_waxman(params, a)),
            graph_to_json(generate_waxman(params, b)));
}

TEST(WaxmanTest, EdgeCountTarget) {
  WaxmanParams params;
  params.edge_count_target = 45;
  params.max_attempts      = 100000;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RandomStream rng(seed);
    std::size_t  attempts = 0;
    const auto   g        = generate_waxman(params, rng, &attempts);
    EXPECT_EQ(g.edge_count(), 45u);
    EXPECT_TRUE(g.repeaters_connected());
    EXPECT_GE(attempts, 1u);
  }
}

TEST(WaxmanTest, BudgetExhaustionThrows) {
  WaxmanParams params;
  params.edge_count_target = 300; // complete graph on 25 nodes: never drawn
  params.max_attempts      = 50;
  RandomStream rng(1);
  EXPECT_THROW(generate_waxman(params, rng), GenerationError);
}

TEST(WaxmanTest, InvalidParametersRejected) {
  WaxmanParams params;
  params.alpha = 0;
  EXPECT_THROW(params.validate(), std::invalid_argument);
  params       = {};
  params.beta  = 1.5;
  EXPECT_THROW(params.validate(), std::invalid_argument);
}

TEST(WaxmanTest, EdgeCountMatchesLinkProbabilities) {
  // per seed: observed link count minus the sum of link probabilities for
  // the drawn positions; the total must sit within 3 standard errors
  double residual = 0;
  double variance = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    RandomStream          rng(derive_seed(2024, {seed}));
    std::vector<Position> pos(25);
    for (auto& p : pos) {
      p = {rng.uniform01(), rng.uniform01()};
    }
    const double longest = max_pairwise_distance(pos);
    for (std::size_t u = 0; u < pos.size(); ++u) {
      for (std::size_t v = u + 1; v < pos.size(); ++v) {
        const double p = waxman_link_probability(
            std::hypot(pos[u].x - pos[v].x, pos[u].y - pos[v].y), longest, 0.85, 0.275);
        residual -= p;
        variance += p * (1 - p);
      }
    }
    residual += static_cast<double>(draw_waxman_links(pos, 0.85, 0.275, rng).size());
  }
  EXPECT_LT(std::abs(residual), 3 * std::sqrt(variance));
}

TEST(GridTest, FiveByFive) {
  const auto g = generate_regular_grid(5);
  EXPECT_EQ(g.node_count(), 25u);
  EXPECT_EQ(g.edge_count(), 45u);
  EXPECT_EQ(g.grid_side(), 5u);
  EXPECT_EQ(g.kind(), TopologyKind::regular);
  // every repeater has vertical degree 2 thanks to the wrap
  for (NodeId id = 0; id < 25; ++id) {
    std::size_t vertical = 0;
    for (const auto& a : g.neighbors(id)) {
      vertical += a.neighbor % 5 == id % 5;
    }
    EXPECT_EQ(vertical, 2u) << "node " << id;
    const auto col = id % 5;
    EXPECT_EQ(g.neighbors(id).size(), (col == 0 or col == 4) ? 3u : 4u);
  }
  EXPECT_TRUE(g.find_edge(0, 20).has_value());
  EXPECT_FALSE(g.find_edge(0, 4).has_value());
}

TEST(GridTest, TwoByTwoSuppressesDuplicateWrap) {
  const auto g = generate_regular_grid(2);
  ASSERT_EQ(g.edge_count(), 4u);
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(std::vector<Edge>(g.edges().begin(), g.edges().end()), expected);
}

TEST(GridTest, DegenerateSideRejected) {
  EXPECT_THROW(generate_regular_grid(1), std::invalid_argument);
  EXPECT_THROW(generate_regular_grid(0), std::invalid_argument);
}

TEST(AttachTest, RegularUsesOppositeEdges) {
  const auto   grid = generate_regular_grid(5);
  RandomStream rng(3);
  const auto   g = attach_endpoints(grid, 5, rng);
  EXPECT_EQ(g.node_count(), 35u);
  EXPECT_EQ(g.edge_count(), 55u);
  EXPECT_EQ(g.repeater_edge_count(), 45u);
  ASSERT_EQ(g.pairs().size(), 5u);
  std::set<NodeId> src_hosts;
  std::set<NodeId> dst_hosts;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& pair = g.pairs()[i];
    EXPECT_EQ(pair.source, 25 + i);
    EXPECT_EQ(pair.destination, 30 + i);
    ASSERT_EQ(g.neighbors(pair.source).size(), 1u);
    ASSERT_EQ(g.neighbors(pair.destination).size(), 1u);
    const auto s_host = g.neighbors(pair.source)[0].neighbor;
    const auto d_host = g.neighbors(pair.destination)[0].neighbor;
    EXPECT_EQ(s_host % 5, 0u);
    EXPECT_EQ(d_host % 5, 4u);
    src_hosts.insert(s_host);
    dst_hosts.insert(d_host);
  }
  EXPECT_EQ(src_hosts.size(), 5u);
  EXPECT_EQ(dst_hosts.size(), 5u);
}

TEST(AttachTest, RandomHostsAreDisjoint) {
  WaxmanParams params;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    RandomStream rng(seed);
    const auto   g = attach_endpoints(generate_waxman(params, rng), 5, rng);
    std::set<NodeId> src;
    std::set<NodeId> dst;
    for (const auto& pair : g.pairs()) {
      src.insert(g.neighbors(pair.source)[0].neighbor);
      dst.insert(g.neighbors(pair.destination)[0].neighbor);
    }
    ASSERT_EQ(src.size(), 5u);
    ASSERT_EQ(dst.size(), 5u);
    for (auto host : src) {
      ASSERT_EQ(dst.count(host), 0u);
      ASSERT_TRUE(g.is_repeater(host));
    }
  }
}

TEST(AttachTest, ZeroPairsLeavesGraphUnchanged) {
  const auto   grid = generate_regular_grid(4);
  RandomStream rng(1);
  const auto   g = attach_endpoints(grid, 0, rng);
  EXPECT_EQ(graph_to_json(g), graph_to_json(grid));
}

TEST(AttachTest, InsufficientRepeaters) {
  RandomStream rng(1);
  EXPECT_THROW(attach_endpoints(generate_regular_grid(3), 4, rng), std::invalid_argument);
  EXPECT_THROW(attach_endpoints(test::make_graph(5, {{0, 1}}, {}), 3, rng),
               std::invalid_argument);
}

TEST(GraphTest, StructuralChecks) {
  std::vector<NodeRecord> nodes{{0, NodeRole::repeater, {}}, {1, NodeRole::repeater, {}}};
  EXPECT_THROW(NetworkGraph(TopologyKind::random, nodes, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(NetworkGraph(TopologyKind::random, nodes, {{0, 1}, {1, 0}}),
               std::invalid_argument);
  EXPECT_THROW(NetworkGraph(TopologyKind::random, nodes, {{0, 2}}), std::invalid_argument);
  std::vector<NodeRecord> misordered{{0, NodeRole::source_device, {}},
                                     {1, NodeRole::repeater, {}}};
  EXPECT_THROW(NetworkGraph(TopologyKind::random, misordered, {}), std::invalid_argument);
}

TEST(GraphTest, JsonRoundTrip) {
  WaxmanParams params;
  RandomStream rng(12);
  const auto   g    = attach_endpoints(generate_waxman(params, rng), 5, rng);
  const auto   text = graph_to_json(g);
  const auto   back = graph_from_json(text);
  EXPECT_EQ(graph_to_json(back), text);
  EXPECT_EQ(back.edge_count(), g.edge_count());
  EXPECT_EQ(back.pairs().size(), 5u);
}

TEST(GraphTest, RoleAndKindNames) {
  for (auto role : {NodeRole::repeater, NodeRole::source_device, NodeRole::dest_device}) {
    EXPECT_EQ(parse_node_role(to_string(role)), role);
  }
  for (auto kind : {TopologyKind::random, TopologyKind::regular}) {
    EXPECT_EQ(parse_topology_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_topology_kind("mesh"), std::invalid_argument);
}

} // namespace
} // namespace qroute
