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

#include "qroute/pathfind.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

namespace qroute {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Equality of accumulated costs. Sums of the integral costs used in practice
// are exact; the slack only matters for arbitrary real weights.
bool same_cost(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a));
}

std::vector<double> expand_costs(const NetworkGraph&     graph,
                                 std::span<const double> repeater_costs) {
  if (repeater_costs.size() != graph.repeater_count()) {
    throw std::invalid_argument("one cost per repeater is required");
  }
  std::vector<double> cost(graph.node_count(), 0.0);
  for (std::size_t i = 0; i < repeater_costs.size(); ++i) {
    if (not(repeater_costs[i] > 0) or not std::isfinite(repeater_costs[i])) {
      throw std::invalid_argument("repeater costs must be positive and finite");
    }
    cost[i] = repeater_costs[i];
  }
  return cost;
}

void check_endpoints(const NetworkGraph& graph, NodeId s, NodeId d) {
  if (s >= graph.node_count() or d >= graph.node_count()) {
    throw std::out_of_range("route endpoint outside the graph");
  }
  if (s == d) {
    throw std::invalid_argument("route endpoints must differ");
  }
}

// Devices other than the two endpoints never relay a route.
std::vector<char> excluded_devices(const NetworkGraph& graph, NodeId s, NodeId d) {
  std::vector<char> excluded(graph.node_count(), 0);
  for (NodeId v = static_cast<NodeId>(graph.repeater_count()); v < graph.node_count(); ++v) {
    excluded[v] = v != s and v != d;
  }
  return excluded;
}

using QueueItem = std::pair<double, NodeId>;
using MinQueue =
    std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>>;

} // namespace

PathEnumerator::PathEnumerator(const NetworkGraph&     graph,
                               const EdgeAvailability& available,
                               NodeId                  source,
                               NodeId                  destination)
    : graph_(graph)
    , available_(available)
    , source_(source)
    , destination_(destination)
    , cost_(graph.node_count(), 1.0) {
  check_endpoints(graph, source, destination);
  excluded_ = excluded_devices(graph, source, destination);
}

PathEnumerator::PathEnumerator(const NetworkGraph&     graph,
                               const EdgeAvailability& available,
                               NodeId                  source,
                               NodeId                  destination,
                               std::span<const double> repeater_costs)
    : graph_(graph)
    , available_(available)
    , source_(source)
    , destination_(destination)
    , weighted_(true)
    , cost_(expand_costs(graph, repeater_costs)) {
  check_endpoints(graph, source, destination);
  excluded_ = excluded_devices(graph, source, destination);
}

// Cheapest continuation from spur to the destination avoiding removed nodes
// and banned edges; among equally cheap ones, the lexicographically smallest.
// Distances to the destination come from a reverse Dijkstra; the walk then
// greedily takes the smallest neighbour on a tight edge. Costs are positive
// on every node a walk can pass through, so tight edges strictly decrease the
// distance and the walk is loopless.
std::optional<PathEnumerator::Suffix>
PathEnumerator::best_suffix(NodeId                     spur,
                            const std::vector<char>&   removed,
                            const std::vector<EdgeId>& banned) const {
  const auto usable = [&](const Adjacency& a) {
    return available_.available(a.edge) and not removed[a.neighbor] and
           std::find(banned.begin(), banned.end(), a.edge) == banned.end();
  };

  std::vector<double> dist(graph_.node_count(), kInfinity);
  MinQueue            queue;
  dist[destination_] = 0;
  queue.push({0.0, destination_});
  while (not queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[v]) {
      continue;
    }
    if (v == spur) {
      break;
    }
    const double through = d + node_cost(v);
    for (const auto& a : graph_.neighbors(v)) {
      if (usable(a) and through < dist[a.neighbor]) {
        dist[a.neighbor] = through;
        queue.push({through, a.neighbor});
      }
    }
  }
  if (dist[spur] == kInfinity) {
    return std::nullopt;
  }

  Suffix suffix{node_cost(spur) + dist[spur], {spur}};
  NodeId at = spur;
  while (at != destination_) {
    NodeId next  = at;
    for (const auto& a : graph_.neighbors(at)) {
      if (usable(a) and dist[a.neighbor] != kInfinity and
          same_cost(dist[at], node_cost(a.neighbor) + dist[a.neighbor])) {
        next = a.neighbor;
        break;
      }
    }
    if (next == at) {
      // only reachable if the early exit above left a tight neighbour
      // unsettled; cannot happen with positive costs
      throw std::logic_error("path search lost its tight edge");
    }
    suffix.nodes.push_back(next);
    at = next;
  }
  return suffix;
}

CandidatePath PathEnumerator::emit(Candidate candidate) {
  CandidatePath path{candidate.nodes, std::nullopt};
  if (weighted_) {
    path.cost = candidate.cost;
  }
  found_.push_back(std::move(candidate));
  return path;
}

std::optional<CandidatePath> PathEnumerator::next() {
  std::vector<char> removed = excluded_;

  if (not started_) {
    started_ = true;
    auto first = best_suffix(source_, removed, {});
    if (not first) {
      return std::nullopt;
    }
    return emit({first->cost, std::move(first->nodes)});
  }
  if (found_.empty()) {
    return std::nullopt;
  }

  // deviations from the route produced last
  const auto          last = found_.back().nodes;
  std::vector<EdgeId> banned;
  double              root_cost = 0;
  for (std::size_t i = 0; i + 1 < last.size(); ++i) {
    const NodeId spur = last[i];
    banned.clear();
    for (const auto& prior : found_) {
      if (prior.nodes.size() > i + 1 and
          std::equal(last.begin(), last.begin() + static_cast<long>(i) + 1,
                     prior.nodes.begin())) {
        banned.push_back(*graph_.find_edge(prior.nodes[i], prior.nodes[i + 1]));
      }
    }
    if (auto suffix = best_suffix(spur, removed, banned)) {
      Candidate candidate{root_cost + suffix->cost,
                          std::vector<NodeId>(last.begin(),
                                              last.begin() + static_cast<long>(i))};
      candidate.nodes.insert(candidate.nodes.end(), suffix->nodes.begin(),
                             suffix->nodes.end());
      pending_.insert(std::move(candidate));
    }
    removed[spur] = 1;
    root_cost += node_cost(spur);
  }

  if (pending_.empty()) {
    return std::nullopt;
  }
  auto best = pending_.extract(pending_.begin());
  return emit(std::move(best.value()));
}

std::vector<CandidatePath> k_shortest_paths(const NetworkGraph&     graph,
                                            const EdgeAvailability& available,
                                            NodeId                  source,
                                            NodeId                  destination,
                                            std::size_t             k) {
  if (k == 0) {
    throw std::invalid_argument("k must be at least 1");
  }
  PathEnumerator             paths(graph, available, source, destination);
  std::vector<CandidatePath> out;
  while (out.size() < k) {
    auto path = paths.next();
    if (not path) {
      break;
    }
    out.push_back(std::move(*path));
  }
  return out;
}

std::vector<CandidatePath> k_cheapest_paths(const NetworkGraph&     graph,
                                            const EdgeAvailability& available,
                                            NodeId                  source,
                                            NodeId                  destination,
                                            std::span<const double> repeater_costs,
                                            std::size_t             k) {
  if (k == 0) {
    throw std::invalid_argument("k must be at least 1");
  }
  PathEnumerator paths(graph, available, source, destination, repeater_costs);
  std::vector<CandidatePath> out;
  while (out.size() < k) {
    auto path = paths.next();
    if (not path) {
      break;
    }
    out.push_back(std::move(*path));
  }
  return out;
}

std::optional<CandidatePath> weighted_shortest_path(
    const NetworkGraph&     graph,
    const EdgeAvailability& available,
    NodeId                  source,
    NodeId                  destination,
    std::span<const double> repeater_costs,
    RandomStream&           rng) {
  check_endpoints(graph, source, destination);
  const auto cost     = expand_costs(graph, repeater_costs);
  const auto excluded = excluded_devices(graph, source, destination);
  const auto n        = graph.node_count();

  std::vector<double> dist(n, kInfinity);
  std::vector<char>   settled(n, 0);
  std::vector<double> count(n, 0.0);
  MinQueue            queue;
  dist[source]  = cost[source];
  count[source] = 1;
  queue.push({dist[source], source});

  const auto tight = [&](NodeId from, NodeId to) {
    return settled[from] and same_cost(dist[to], dist[from] + cost[to]);
  };

  while (not queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (settled[v] or d > dist[v]) {
      continue;
    }
    settled[v] = 1;
    if (v != source) {
      for (const auto& a : graph.neighbors(v)) {
        if (available.available(a.edge) and tight(a.neighbor, v)) {
          count[v] += count[a.neighbor];
        }
      }
    }
    if (v == destination) {
      break;
    }
    for (const auto& a : graph.neighbors(v)) {
      const double through = d + cost[a.neighbor];
      if (available.available(a.edge) and not excluded[a.neighbor] and
          not settled[a.neighbor] and through < dist[a.neighbor] and
          not same_cost(through, dist[a.neighbor])) {
        dist[a.neighbor] = through;
        queue.push({through, a.neighbor});
      }
    }
  }
  if (not settled[destination]) {
    return std::nullopt;
  }

  // walk back, picking each predecessor with weight equal to its path count
  std::vector<NodeId> reversed{destination};
  NodeId              at = destination;
  while (at != source) {
    std::vector<std::pair<NodeId, double>> options;
    double                                 total = 0;
    for (const auto& a : graph.neighbors(at)) {
      if (available.available(a.edge) and tight(a.neighbor, at) and
          count[a.neighbor] > 0) {
        options.emplace_back(a.neighbor, count[a.neighbor]);
        total += count[a.neighbor];
      }
    }
    double pick = rng.uniform01() * total;
    at          = options.back().first;
    for (const auto& [node, weight] : options) {
      if (pick < weight) {
        at = node;
        break;
      }
      pick -= weight;
    }
    reversed.push_back(at);
  }
  std::reverse(reversed.begin(), reversed.end());
  return CandidatePath{std::move(reversed), dist[destination]};
}

} // namespace qroute
