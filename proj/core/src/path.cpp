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

#include "qroute/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace qroute {

std::uint64_t path_hash(std::span<const NodeId> nodes) noexcept {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const auto id : nodes) {
    for (int shift = 0; shift < 32; shift += 8) {
      hash ^= (id >> shift) & 0xffU;
      hash *= 0x100000001b3ULL;
    }
  }
  return hash;
}

std::string to_string(const CandidatePath& path) {
  std::string out;
  for (const auto id : path.nodes) {
    if (not out.empty()) {
      out += '-';
    }
    out += std::to_string(id);
  }
  return out;
}

std::vector<EdgeId> path_edges(const NetworkGraph& graph,
                               const CandidatePath& path) {
  std::vector<EdgeId> edges;
  for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
    const auto edge = graph.find_edge(path.nodes[i], path.nodes[i + 1]);
    if (not edge) {
      throw std::invalid_argument("path " + to_string(path) +
                                  " uses a missing edge");
    }
    edges.push_back(*edge);
  }
  return edges;
}

bool is_simple(const CandidatePath& path) {
  auto sorted = path.nodes;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

} // namespace qroute
