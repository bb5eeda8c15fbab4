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

#ifndef QROUTE_TESTS_FIXTURES_HPP
#define QROUTE_TESTS_FIXTURES_HPP

#include "qroute/availability.hpp"
#include "qroute/path.hpp"
#include "qroute/quality.hpp"
#include "qroute/random.hpp"
#include "qroute/topology.hpp"

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

namespace qroute::test {

// Builds a graph of `repeaters` repeaters joined by `links` (repeater ids),
// with one SD pair per entry of `attach` = (source repeater, destination
// repeater). Sources get ids repeaters + i, destinations repeaters + n + i.
inline NetworkGraph make_graph(std::size_t                                  repeaters,
                               const std::vector<std::pair<NodeId, NodeId>>& links,
                               const std::vector<std::pair<NodeId, NodeId>>& attach) {
  const auto n = attach.size();
  std::vector<NodeRecord> nodes;
  for (NodeId i = 0; i < repeaters; ++i) {
    nodes.push_back({i, NodeRole::repeater, {}});
  }
  for (std::size_t i = 0; i < n; ++i) {
    nodes.push_back({static_cast<NodeId>(repeaters + i), NodeRole::source_device, {}});
  }
  for (std::size_t i = 0; i < n; ++i) {
    nodes.push_back({static_cast<NodeId>(repeaters + n + i), NodeRole::dest_device, {}});
  }
  std::vector<Edge>   edges;
  std::vector<SdPair> pairs;
  for (const auto& [u, v] : links) {
    edges.push_back({u, v});
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto s = static_cast<NodeId>(repeaters + i);
    const auto d = static_cast<NodeId>(repeaters + n + i);
    edges.push_back({attach[i].first, s});
    edges.push_back({attach[i].second, d});
    pairs.push_back({s, d});
  }
  return NetworkGraph(TopologyKind::random, std::move(nodes), std::move(edges),
                      std::move(pairs));
}

// Repeaters only, wired by `links`, plus source S and destination D devices
// linked to the repeaters in `s_links` and `d_links`. Ids: repeaters 0..n-1,
// then S = n, D = n + 1; the single pair is (S, D).
inline NetworkGraph make_open_graph(std::size_t                                  repeaters,
                                    const std::vector<std::pair<NodeId, NodeId>>& links,
                                    const std::vector<NodeId>&                    s_links,
                                    const std::vector<NodeId>&                    d_links) {
  std::vector<NodeRecord> nodes;
  for (NodeId i = 0; i < repeaters; ++i) {
    nodes.push_back({i, NodeRole::repeater, {}});
  }
  const auto s = static_cast<NodeId>(repeaters);
  const auto d = static_cast<NodeId>(repeaters + 1);
  nodes.push_back({s, NodeRole::source_device, {}});
  nodes.push_back({d, NodeRole::dest_device, {}});
  std::vector<Edge> edges;
  for (const auto& [u, v] : links) {
    edges.push_back({u, v});
  }
  for (auto r : s_links) {
    edges.push_back({r, s});
  }
  for (auto r : d_links) {
    edges.push_back({r, d});
  }
  return NetworkGraph(TopologyKind::random, std::move(nodes), std::move(edges),
                      {{s, d}});
}

// S - A - D and S - B - D with A = 0, B = 1, S = 2, D = 3.
inline NetworkGraph make_diamond() {
  return make_open_graph(2, {}, {0, 1}, {0, 1});
}

// Two-class assignment with the given HQ repeater ids.
inline QualityAssignment two_class(std::size_t repeaters, std::vector<NodeId> hq,
                                   EfficiencyLevels levels = {}) {
  std::vector<double> eta(repeaters, levels.low);
  for (auto id : hq) {
    eta[id] = levels.high;
  }
  const double xi = repeaters == 0 ? 0.0 : static_cast<double>(hq.size()) / repeaters;
  return QualityAssignment(QualityScheme::two_class, xi, levels, std::move(eta));
}

// Small random instance: 1..8 repeaters, S and D each linked to one to three
// repeaters (occasionally to each other), some links already consumed.
struct SmallInstance {
  NetworkGraph     graph;
  EdgeAvailability available;
  NodeId           source;
  NodeId           destination;
};

inline SmallInstance random_small_instance(RandomStream& rng) {
  const std::size_t r = 1 + rng.index(8);
  std::vector<std::pair<NodeId, NodeId>> links;
  const double density = 0.25 + 0.5 * rng.uniform01();
  for (NodeId u = 0; u < r; ++u) {
    for (NodeId v = u + 1; v < r; ++v) {
      if (rng.bernoulli(density)) {
        links.emplace_back(u, v);
      }
    }
  }
  const auto hosts = [&] {
    std::vector<NodeId> out;
    const auto          picks = rng.sample_without_replacement(r, 1 + rng.index(std::min<std::size_t>(3, r)));
    for (auto p : picks) {
      out.push_back(static_cast<NodeId>(p));
    }
    return out;
  };
  const auto s_links = hosts();
  const auto d_links = hosts();
  auto       graph   = make_open_graph(r, links, s_links, d_links);
  if (rng.bernoulli(0.05)) {
    auto nodes = std::vector<NodeRecord>(graph.nodes().begin(), graph.nodes().end());
    auto edges = std::vector<Edge>(graph.edges().begin(), graph.edges().end());
    edges.push_back({static_cast<NodeId>(r), static_cast<NodeId>(r + 1)});
    graph = NetworkGraph(TopologyKind::random, std::move(nodes), std::move(edges),
                         {graph.pairs().begin(), graph.pairs().end()});
  }
  EdgeAvailability available(graph);
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (rng.bernoulli(0.1)) {
      available.consume(e);
    }
  }
  return {std::move(graph), std::move(available), static_cast<NodeId>(r),
          static_cast<NodeId>(r + 1)};
}

// Every simple s-d route over available links with repeaters as relays,
// unordered.
inline std::vector<CandidatePath> all_simple_paths(const NetworkGraph&     graph,
                                                   const EdgeAvailability& available,
                                                   NodeId s, NodeId d) {
  std::vector<CandidatePath> out;
  std::vector<NodeId>        stack{s};
  std::vector<char>          on_path(graph.node_count(), 0);
  on_path[s] = 1;
  std::function<void(NodeId)> visit = [&](NodeId at) {
    for (const auto& a : graph.neighbors(at)) {
      if (not available.available(a.edge) or on_path[a.neighbor]) {
        continue;
      }
      if (a.neighbor == d) {
        auto nodes = stack;
        nodes.push_back(d);
        out.push_back({std::move(nodes), {}});
        continue;
      }
      if (not graph.is_repeater(a.neighbor)) {
        continue;
      }
      on_path[a.neighbor] = 1;
      stack.push_back(a.neighbor);
      visit(a.neighbor);
      stack.pop_back();
      on_path[a.neighbor] = 0;
    }
  };
  visit(s);
  return out;
}

} // namespace qroute::test

#endif // QROUTE_TESTS_FIXTURES_HPP
