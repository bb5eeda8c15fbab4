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

#ifndef QROUTE_PATH_HPP
#define QROUTE_PATH_HPP

#include "qroute/topology.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qroute {

/// Candidate route between two end devices.
///
/// length() is the number of nodes in the sequence, devices included, so a
/// route through r repeaters has length r + 2 and r + 1 links.
struct CandidatePath {
  std::vector<NodeId>   nodes;
  // Vertex-weight sum, set by cost-ordered searches.
  std::optional<double> cost;

  std::size_t length() const noexcept { return nodes.size(); }
  std::size_t hops() const noexcept {
    return nodes.empty() ? 0 : nodes.size() - 1;
  }
  std::size_t repeater_count() const noexcept {
    return nodes.size() < 2 ? 0 : nodes.size() - 2;
  }
  std::span<const NodeId> interior() const noexcept {
    if (nodes.size() < 2) {
      return {};
    }
    return std::span<const NodeId>(nodes).subspan(1, nodes.size() - 2);
  }

  friend bool operator==(const CandidatePath& a, const CandidatePath& b) {
    return a.nodes == b.nodes;
  }
};

// FNV-1a over the node ids; stable across platforms.
std::uint64_t path_hash(std::span<const NodeId> nodes) noexcept;

// "3-0-7-4"
std::string to_string(const CandidatePath& path);

// Edge ids along the path; throws if two consecutive nodes are not adjacent.
std::vector<EdgeId> path_edges(const NetworkGraph& graph,
                               const CandidatePath& path);

bool is_simple(const CandidatePath& path);

} // namespace qroute

#endif // QROUTE_PATH_HPP
