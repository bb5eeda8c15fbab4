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

#ifndef QROUTE_AVAILABILITY_HPP
#define QROUTE_AVAILABILITY_HPP

#include "qroute/path.hpp"
#include "qroute/topology.hpp"

#include <cstddef>
#include <vector>

namespace qroute {

/// Links consumed so far in a routing period. A link carries at most one
/// accepted route per period; repeaters are not exclusive.
class EdgeAvailability {
 public:
  explicit EdgeAvailability(std::size_t edge_count) : consumed_(edge_count, 0) {}
  explicit EdgeAvailability(const NetworkGraph& graph)
      : EdgeAvailability(graph.edge_count()) {}

  bool available(EdgeId edge) const { return consumed_.at(edge) == 0; }

  void consume(EdgeId edge);

  // Consumes every link of the path. Throws, leaving the state unchanged,
  // if a link is missing or already consumed.
  void consume_path(const NetworkGraph& graph, const CandidatePath& path);

  std::size_t         consumed_count() const noexcept { return count_; }
  std::vector<EdgeId> consumed() const;
  void                reset();

 private:
  std::vector<char> consumed_;
  std::size_t       count_ = 0;
};

} // namespace qroute

#endif // QROUTE_AVAILABILITY_HPP
