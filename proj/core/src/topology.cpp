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

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <queue>

namespace qroute {

std::string_view to_string(NodeRole role) noexcept {
  switch (role) {
    case NodeRole::repeater:
      return "repeater";
    case NodeRole::source_device:
      return "source";
    case NodeRole::dest_device:
      return "destination";
  }
  return "unknown";
}

std::string_view to_string(TopologyKind kind) noexcept {
  return kind == TopologyKind::random ? "random" : "regular";
}

NodeRole parse_node_role(std::string_view text) {
  if (text == "repeater") {
    return NodeRole::repeater;
  }
  if (text == "source") {
    return NodeRole::source_device;
  }
  if (text == "destination") {
    return NodeRole::dest_device;
  }
  throw std::invalid_argument("unknown node role: " + std::string(text));
}

TopologyKind parse_topology_kind(std::string_view text) {
  if (text == "random") {
    return TopologyKind::random;
  }
  if (text == "regular") {
    return TopologyKind::regular;
  }
  throw std::invalid_argument("unknown topology kind: " + std::string(text));
}

NetworkGraph::NetworkGraph(TopologyKind            kind,
                           std::vector<NodeRecord> nodes,
                           std::vector<Edge>       edges,
                           std::vector<SdPair>     pairs,
                           std::size_t             grid_side)
    : kind_(kind)
    , nodes_(std::move(nodes))
    , edges_(std::move(edges))
    , pairs_(std::move(pairs))
    , adjacency_(nodes_.size())
    , grid_side_(grid_side) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id != i) {
      throw std::invalid_argument("node ids must be dense and ordered");
    }
    if (nodes_[i].role == NodeRole::repeater) {
      if (i != repeater_count_) {
        throw std::invalid_argument("repeaters must precede devices");
      }
      ++repeater_count_;
    }
  }

  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on node " + std::to_string(e.u));
    }
    if (e.u > e.v) {
      std::swap(e.u, e.v);
    }
    if (e.v >= nodes_.size()) {
      throw std::invalid_argument("edge references unknown node " +
                                  std::to_string(e.v));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }

  for (EdgeId id = 0; id < edges_.size(); ++id) {
    adjacency_[edges_[id].u].push_back({edges_[id].v, id});
    adjacency_[edges_[id].v].push_back({edges_[id].u, id});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
      return a.neighbor < b.neighbor;
    });
  }

  for (const auto& p : pairs_) {
    if (p.source >= nodes_.size() || p.destination >= nodes_.size() ||
        nodes_[p.source].role != NodeRole::source_device ||
        nodes_[p.destination].role != NodeRole::dest_device) {
      throw std::invalid_argument("pair must join a source to a destination");
    }
  }
}

std::size_t NetworkGraph::repeater_edge_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [this](const Edge& e) {
        return e.v < repeater_count_;
      }));
}

std::optional<EdgeId> NetworkGraph::find_edge(NodeId u, NodeId v) const {
  if (u >= adjacency_.size() || v >= adjacency_.size()) {
    return std::nullopt;
  }
  const auto& list = adjacency_[u];
  const auto  it   = std::lower_bound(
      list.begin(), list.end(), v,
      [](const Adjacency& a, NodeId id) { return a.neighbor < id; });
  if (it == list.end() || it->neighbor != v) {
    return std::nullopt;
  }
  return it->edge;
}

bool NetworkGraph::repeaters_connected() const {
  if (repeater_count_ <= 1) {
    return true;
  }
  std::vector<char>   seen(repeater_count_, 0);
  std::vector<NodeId> stack{0};
  seen[0]           = 1;
  std::size_t count = 1;
  while (not stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (const auto& a : adjacency_[u]) {
      if (a.neighbor < repeater_count_ and not seen[a.neighbor]) {
        seen[a.neighbor] = 1;
        ++count;
        stack.push_back(a.neighbor);
      }
    }
  }
  return count == repeater_count_;
}

void WaxmanParams::validate() const {
  if (not(alpha > 0 and alpha < 1)) {
    throw std::invalid_argument("waxman alpha must be in (0,1)");
  }
  if (not(beta > 0 and beta < 1)) {
    throw std::invalid_argument("waxman beta must be in (0,1)");
  }
  if (n_repeaters == 0) {
    throw std::invalid_argument("waxman needs at least one repeater");
  }
  if (max_attempts == 0) {
    throw std::invalid_argument("waxman attempt budget must be positive");
  }
}

double waxman_link_probability(double distance,
                               double max_distance,
                               double alpha,
                               double beta) {
  if (max_distance <= 0) {
    return beta;
  }
  return beta * std::exp(-distance / (max_distance * alpha));
}

namespace {

std::vector<NodeRecord> repeater_nodes(std::size_t n) {
  std::vector<NodeRecord> nodes(n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i].id = static_cast<NodeId>(i);
  }
  return nodes;
}

double distance(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

} // namespace

double max_pairwise_distance(std::span<const Position> positions) {
  double longest = 0;
  for (std::size_t u = 0; u < positions.size(); ++u) {
    for (std::size_t v = u + 1; v < positions.size(); ++v) {
      longest = std::max(longest, distance(positions[u], positions[v]));
    }
  }
  return longest;
}

std::vector<Edge> draw_waxman_links(std::span<const Position> positions,
                                    double                    alpha,
                                    double                    beta,
                                    RandomStream&             rng) {
  const double      longest = max_pairwise_distance(positions);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < positions.size(); ++u) {
    for (std::size_t v = u + 1; v < positions.size(); ++v) {
      const auto p = waxman_link_probability(distance(positions[u], positions[v]),
                                             longest, alpha, beta);
      if (rng.bernoulli(p)) {
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
      }
    }
  }
  return edges;
}

NetworkGraph generate_waxman(const WaxmanParams& params,
                             RandomStream&       rng,
                             std::size_t*        attempts) {
  params.validate();
  const auto n = params.n_repeaters;

  for (std::size_t attempt = 1; attempt <= params.max_attempts; ++attempt) {
    auto                  nodes = repeater_nodes(n);
    std::vector<Position> positions(n);
    for (std::size_t i = 0; i < n; ++i) {
      positions[i].x    = rng.uniform01();
      positions[i].y    = rng.uniform01();
      nodes[i].position = positions[i];
    }
    auto edges = draw_waxman_links(positions, params.alpha, params.beta, rng);

    if (params.edge_count_target and edges.size() != *params.edge_count_target) {
      continue;
    }
    NetworkGraph graph(TopologyKind::random, std::move(nodes), std::move(edges));
    if (graph.repeaters_connected()) {
      if (attempts != nullptr) {
        *attempts = attempt;
      }
      return graph;
    }
  }
  throw GenerationError("no acceptable Waxman graph within " +
                        std::to_string(params.max_attempts) + " attempts");
}

NetworkGraph generate_regular_grid(std::size_t n_side) {
  if (n_side < 2) {
    throw std::invalid_argument("regular grid needs n_side >= 2");
  }
  auto       nodes = repeater_nodes(n_side * n_side);
  const auto id    = [n_side](std::size_t row, std::size_t col) {
    return static_cast<NodeId>(row * n_side + col);
  };
  const double step = 1.0 / static_cast<double>(n_side - 1);
  for (std::size_t r = 0; r < n_side; ++r) {
    for (std::size_t c = 0; c < n_side; ++c) {
      nodes[id(r, c)].position = {static_cast<double>(c) * step,
                                  static_cast<double>(r) * step};
    }
  }

  std::vector<Edge> edges;
  for (std::size_t r = 0; r < n_side; ++r) {
    for (std::size_t c = 0; c + 1 < n_side; ++c) {
      edges.push_back({id(r, c), id(r, c + 1)});
    }
  }
  for (std::size_t r = 0; r + 1 < n_side; ++r) {
    for (std::size_t c = 0; c < n_side; ++c) {
      edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  // top-bottom wrap; on a two-row grid it coincides with the vertical edge
  if (n_side > 2) {
    for (std::size_t c = 0; c < n_side; ++c) {
      edges.push_back({id(0, c), id(n_side - 1, c)});
    }
  }
  return NetworkGraph(TopologyKind::regular, std::move(nodes), std::move(edges),
                      {}, n_side);
}

NetworkGraph attach_endpoints(const NetworkGraph& graph,
                              std::size_t         n_sd,
                              RandomStream&       rng) {
  const auto n_rep = graph.repeater_count();
  if (graph.node_count() != n_rep) {
    throw std::invalid_argument("graph already has end devices attached");
  }

  std::vector<NodeId> source_hosts;
  std::vector<NodeId> dest_hosts;
  if (graph.kind() == TopologyKind::random) {
    if (2 * n_sd > n_rep) {
      throw std::invalid_argument(
          "insufficient repeaters: " + std::to_string(2 * n_sd) +
          " attachment points needed, " + std::to_string(n_rep) + " available");
    }
    const auto picks = rng.sample_without_replacement(n_rep, 2 * n_sd);
    for (std::size_t i = 0; i < n_sd; ++i) {
      source_hosts.push_back(static_cast<NodeId>(picks[i]));
      dest_hosts.push_back(static_cast<NodeId>(picks[n_sd + i]));
    }
  } else {
    const auto side = graph.grid_side();
    if (n_sd > side) {
      throw std::invalid_argument(
          "insufficient repeaters: regular grid edge has " +
          std::to_string(side) + " rows, " + std::to_string(n_sd) +
          " pairs requested");
    }
    const auto source_rows = rng.sample_without_replacement(side, n_sd);
    const auto dest_rows   = rng.sample_without_replacement(side, n_sd);
    for (std::size_t i = 0; i < n_sd; ++i) {
      source_hosts.push_back(static_cast<NodeId>(source_rows[i] * side));
      dest_hosts.push_back(static_cast<NodeId>(dest_rows[i] * side + side - 1));
    }
  }

  std::vector<NodeRecord> nodes(graph.nodes().begin(), graph.nodes().end());
  std::vector<Edge>       edges(graph.edges().begin(), graph.edges().end());
  std::vector<SdPair>     pairs;
  const auto add_device = [&](NodeRole role, NodeId host) {
    const auto id = static_cast<NodeId>(nodes.size());
    nodes.push_back({id, role, graph.node(host).position});
    edges.push_back({host, id});
    return id;
  };
  std::vector<NodeId> sources;
  for (const auto host : source_hosts) {
    sources.push_back(add_device(NodeRole::source_device, host));
  }
  for (std::size_t i = 0; i < n_sd; ++i) {
    pairs.push_back({sources[i], add_device(NodeRole::dest_device, dest_hosts[i])});
  }
  return NetworkGraph(graph.kind(), std::move(nodes), std::move(edges),
                      std::move(pairs), graph.grid_side());
}

std::string graph_to_json(const NetworkGraph& graph) {
  nlohmann::ordered_json doc;
  doc["kind"]      = to_string(graph.kind());
  doc["grid_side"] = graph.grid_side();
  auto& nodes      = doc["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : graph.nodes()) {
    nlohmann::ordered_json entry;
    entry["id"]   = n.id;
    entry["role"] = to_string(n.role);
    entry["x"]    = n.position.x;
    entry["y"]    = n.position.y;
    nodes.push_back(std::move(entry));
  }
  auto& edges = doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : graph.edges()) {
    edges.push_back({e.u, e.v});
  }
  auto& pairs = doc["pairs"] = nlohmann::ordered_json::array();
  for (const auto& p : graph.pairs()) {
    pairs.push_back({p.source, p.destination});
  }
  return doc.dump(2) + "\n";
}

NetworkGraph graph_from_json(std::string_view text) {
  try {
    const auto doc  = nlohmann::json::parse(text);
    const auto kind = parse_topology_kind(doc.at("kind").get<std::string>());
    std::vector<NodeRecord> nodes;
    for (const auto& entry : doc.at("nodes")) {
      nodes.push_back({entry.at("id").get<NodeId>(),
                       parse_node_role(entry.at("role").get<std::string>()),
                       {entry.value("x", 0.0), entry.value("y", 0.0)}});
    }
    std::vector<Edge> edges;
    for (const auto& entry : doc.at("edges")) {
      edges.push_back({entry.at(0).get<NodeId>(), entry.at(1).get<NodeId>()});
    }
    std::vector<SdPair> pairs;
    if (doc.contains("pairs")) {
      for (const auto& entry : doc.at("pairs")) {
        pairs.push_back({entry.at(0).get<NodeId>(), entry.at(1).get<NodeId>()});
      }
    }
    return NetworkGraph(kind, std::move(nodes), std::move(edges),
                        std::move(pairs), doc.value("grid_side", std::size_t{0}));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
}

} // namespace qroute
