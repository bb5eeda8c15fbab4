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

#ifndef QROUTE_PATHFIND_HPP
#define QROUTE_PATHFIND_HPP

#include "qroute/availability.hpp"
#include "qroute/path.hpp"
#include "qroute/random.hpp"
#include "qroute/topology.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace qroute {

/// Lazily enumerates the loopless routes between two nodes over the
/// available links, in nondecreasing cost with ties broken by
/// lexicographic node-id order (Yen's deviation scheme).
///
/// Two cost models are supported. The default counts nodes, so routes come
/// out by length. The vertex-weighted one charges each repeater its entry in
/// repeater_costs (all strictly positive) and each device nothing.
///
/// The graph and the availability must outlive the enumerator and must not
/// change while it is in use.
class PathEnumerator {
 public:
  PathEnumerator(const NetworkGraph&     graph,
                 const EdgeAvailability& available,
                 NodeId                  source,
                 NodeId                  destination);

  PathEnumerator(const NetworkGraph&     graph,
                 const EdgeAvailability& available,
                 NodeId                  source,
                 NodeId                  destination,
                 std::span<const double> repeater_costs);

  // Next route, or nullopt once every loopless route has been produced.
  std::optional<CandidatePath> next();

  std::size_t produced() const noexcept { return found_.size(); }

 private:
  struct Candidate {
    double              cost;
    std::vector<NodeId> nodes;

    friend bool operator<(const Candidate& a, const Candidate& b) {
      if (a.cost != b.cost) {
        return a.cost < b.cost;
      }
      return a.nodes < b.nodes;
    }
  };

  struct Suffix {
    double              cost;
    std::vector<NodeId> nodes;
  };

  std::optional<Suffix> best_suffix(NodeId                     spur,
                                    const std::vector<char>&   removed,
                                    const std::vector<EdgeId>& banned) const;
  CandidatePath         emit(Candidate candidate);
  double                node_cost(NodeId id) const { return cost_[id]; }

  const NetworkGraph&         graph_;
  const EdgeAvailability&     available_;
  NodeId                      source_;
  NodeId                      destination_;
  bool                        weighted_ = false;
  std::vector<double>         cost_;
  std::vector<char>           excluded_;
  bool                        started_ = false;
  std::vector<Candidate>      found_;
  std::set<Candidate>         pending_;
};

// Up to k loopless routes of smallest length, ties lexicographic. Empty when
// the endpoints are disconnected over the available links.
std::vector<CandidatePath> k_shortest_paths(const NetworkGraph&     graph,
                                            const EdgeAvailability& available,
                                            NodeId                  source,
                                            NodeId                  destination,
                                            std::size_t             k);

// Up to k loopless routes of smallest vertex-weight sum, ties lexicographic.
std::vector<CandidatePath> k_cheapest_paths(const NetworkGraph&     graph,
                                            const EdgeAvailability& available,
                                            NodeId                  source,
                                            NodeId                  destination,
                                            std::span<const double> repeater_costs,
                                            std::size_t             k);

/// Minimum vertex-weight route (sum of repeater costs, devices free). When
/// several routes share the minimum, one is drawn uniformly among all of
/// them by counting tight predecessors and sampling backwards.
std::optional<CandidatePath> weighted_shortest_path(
    const NetworkGraph&     graph,
    const EdgeAvailability& available,
    NodeId                  source,
    NodeId                  destination,
    std::span<const double> repeater_costs,
    RandomStream&           rng);

} // namespace qroute

#endif // QROUTE_PATHFIND_HPP
