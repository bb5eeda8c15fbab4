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

#ifndef QROUTE_TOPOLOGY_HPP
#define QROUTE_TOPOLOGY_HPP

#include "qroute/random.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qroute {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class NodeRole { repeater, source_device, dest_device };
enum class TopologyKind { random, regular };

std::string_view to_string(NodeRole role) noexcept;
std::string_view to_string(TopologyKind kind) noexcept;
NodeRole         parse_node_role(std::string_view text);
TopologyKind     parse_topology_kind(std::string_view text);

struct Position {
  double x = 0;
  double y = 0;
};

struct NodeRecord {
  NodeId   id = 0;
  NodeRole role = NodeRole::repeater;
  Position position;
};

// Undirected edge, stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct SdPair {
  NodeId source = 0;
  NodeId destination = 0;
};

struct Adjacency {
  NodeId neighbor = 0;
  EdgeId edge = 0;
};

// Raised when a random generator exhausts its retry budget.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected network of quantum repeaters plus the source and destination
/// devices attached to them.
///
/// Node ids are dense (0..|V|-1). Repeaters come first, followed by the
/// sources and then the destinations, so pair i joins source i to
/// destination i. The constructor enforces the structural invariants: no
/// self-loops and no duplicate edges. Generated networks attach each device
/// by a single link; hand-built graphs may link devices more freely, but
/// routes never relay through a device. Instances are immutable once built.
class NetworkGraph {
 public:
  NetworkGraph(TopologyKind            kind,
               std::vector<NodeRecord> nodes,
               std::vector<Edge>       edges,
               std::vector<SdPair>     pairs     = {},
               std::size_t             grid_side = 0);

  TopologyKind kind() const noexcept { return kind_; }

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t repeater_count() const noexcept { return repeater_count_; }

  // Edges joining two repeaters, i.e. excluding device attachments.
  std::size_t repeater_edge_count() const noexcept;

  // Side of the square grid for regular topologies, 0 otherwise.
  std::size_t grid_side() const noexcept { return grid_side_; }

  const NodeRecord&       node(NodeId id) const { return nodes_.at(id); }
  std::span<const NodeRecord> nodes() const noexcept { return nodes_; }
  const Edge&             edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge>   edges() const noexcept { return edges_; }
  std::span<const SdPair> pairs() const noexcept { return pairs_; }

  // Neighbours sorted by node id.
  std::span<const Adjacency> neighbors(NodeId id) const {
    return adjacency_.at(id);
  }

  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;

  bool is_repeater(NodeId id) const {
    return nodes_.at(id).role == NodeRole::repeater;
  }

  // True when the repeater-only subgraph is connected (vacuously true for
  // zero or one repeater).
  bool repeaters_connected() const;

 private:
  TopologyKind                        kind_;
  std::vector<NodeRecord>             nodes_;
  std::vector<Edge>                   edges_;
  std::vector<SdPair>                 pairs_;
  std::vector<std::vector<Adjacency>> adjacency_;
  std::size_t                         repeater_count_ = 0;
  std::size_t                         grid_side_ = 0;
};

struct WaxmanParams {
  double      alpha = 0.85;
  double      beta = 0.275;
  std::size_t n_repeaters = 25;
  // Total number of samples drawn before giving up.
  std::size_t max_attempts = 1000;
  // When set, only samples with exactly this many edges are accepted.
  std::optional<std::size_t> edge_count_target;

  void validate() const;
};

// beta * exp(-distance / (max_distance * alpha)); beta when max_distance is 0.
double waxman_link_probability(double distance,
                               double max_distance,
                               double alpha,
                               double beta);

double max_pairwise_distance(std::span<const Position> positions);

// One independent Bernoulli draw per repeater pair, with L the largest
// pairwise distance among `positions`. Edges come out in (u, v) order.
std::vector<Edge> draw_waxman_links(std::span<const Position> positions,
                                    double                    alpha,
                                    double                    beta,
                                    RandomStream&             rng);

/// Draws a connected Waxman graph over params.n_repeaters repeaters placed
/// uniformly in the unit square. Disconnected samples (and, if a target is
/// set, samples with the wrong edge count) are discarded and redrawn from the
/// same stream. The number of samples drawn is stored in *attempts when
/// given. Throws GenerationError once the attempt budget is spent.
NetworkGraph generate_waxman(const WaxmanParams& params,
                             RandomStream&       rng,
                             std::size_t*        attempts = nullptr);

/// n_side x n_side grid of repeaters with nearest-neighbour links and an
/// extra link between the top and bottom repeater of each column. Node id is
/// row * n_side + column; column 0 is the left edge.
NetworkGraph generate_regular_grid(std::size_t n_side);

/// Attaches n_sd source and n_sd destination devices to a repeater-only
/// graph.
///
/// Random topologies: sources go to n_sd distinct repeaters drawn uniformly,
/// destinations to n_sd distinct repeaters drawn from the remainder.
/// Regular topologies: sources go to distinct left-column repeaters and
/// destinations to distinct right-column repeaters, rows drawn uniformly, so
/// the source/destination pairing is random even when n_sd == n_side.
NetworkGraph attach_endpoints(const NetworkGraph& graph,
                              std::size_t         n_sd,
                              RandomStream&       rng);

// JSON document {kind, grid_side, nodes:[{id,role,x,y}], edges:[[u,v]],
// pairs:[[s,d]]} with a fixed key order.
std::string  graph_to_json(const NetworkGraph& graph);
NetworkGraph graph_from_json(std::string_view text);

} // namespace qroute

#endif // QROUTE_TOPOLOGY_HPP
