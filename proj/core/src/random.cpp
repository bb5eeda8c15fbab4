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

#include "qroute/random.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qroute {

std::uint64_t derive_seed(std::uint64_t                         parent,
                          std::initializer_list<std::uint64_t> keys) noexcept {
  std::uint64_t seed = mix64(parent);
  for (const auto key : keys) {
    seed = mix64(seed ^ mix64(key));
  }
  return seed;
}

std::size_t RandomStream::index(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("RandomStream::index: empty range");
  }
  const std::uint64_t range = static_cast<std::uint64_t>(n);
  // largest multiple of range that fits, minus one
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
  std::uint64_t       draw  = engine_();
  while (draw > limit) {
    draw = engine_();
  }
  return static_cast<std::size_t>(draw % range);
}

double RandomStream::normal() {
  const double u1 = 1.0 - uniform01(); // (0, 1]
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<std::size_t> RandomStream::sample_without_replacement(std::size_t n,
                                                                  std::size_t k) {
  if (k > n) {
    throw std::invalid_argument(
        "RandomStream::sample_without_replacement: k exceeds population");
  }
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(pool[i], pool[i + index(n - i)]);
  }
  pool.resize(k);
  return pool;
}

} // namespace qroute
