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

#include "qroute/availability.hpp"

#include <algorithm>
#include <stdexcept>

namespace qroute {

void EdgeAvailability::consume(EdgeId edge) {
  if (consumed_.at(edge)) {
    throw std::logic_error("edge " + std::to_string(edge) +
                           " consumed twice in one period");
  }
  consumed_[edge] = 1;
  ++count_;
}

void EdgeAvailability::consume_path(const NetworkGraph&  graph,
                                    const CandidatePath& path) {
  const auto edges = path_edges(graph, path);
  for (const auto e : edges) {
    if (not available(e)) {
      throw std::logic_error("path " + to_string(path) +
                             " uses a consumed edge");
    }
  }
  for (const auto e : edges) {
    consume(e);
  }
}

std::vector<EdgeId> EdgeAvailability::consumed() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < consumed_.size(); ++e) {
    if (consumed_[e]) {
      out.push_back(e);
    }
  }
  return out;
}

void EdgeAvailability::reset() {
  std::fill(consumed_.begin(), consumed_.end(), 0);
  count_ = 0;
}

} // namespace qroute
