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

#ifndef QROUTE_RANDOM_HPP
#define QROUTE_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

namespace qroute {

// Purposes of the independent streams derived from a master seed. The values
// are part of the reproducibility contract and must never be renumbered.
enum class StreamPurpose : std::uint64_t {
  topology  = 1,
  endpoints = 2,
  quality   = 3,
  order     = 4,
  noise     = 5,
  tie_break = 6,
};

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Folds the keys into the parent seed one at a time with mix64. Any change in
// a key, or in their order, yields an unrelated child seed.
std::uint64_t derive_seed(std::uint64_t                         parent,
                          std::initializer_list<std::uint64_t> keys) noexcept;

inline std::uint64_t derive_seed(std::uint64_t                         parent,
                                 StreamPurpose                         purpose,
                                 std::initializer_list<std::uint64_t> keys) noexcept {
  std::uint64_t seed = mix64(parent ^ static_cast<std::uint64_t>(purpose));
  return derive_seed(seed, keys);
}

/// Seeded pseudo-random stream backed by std::mt19937_64.
///
/// The engine output sequence is fixed by the C++ standard, and the
/// conversions below are written out explicitly (rather than going through
/// the <random> distributions, whose algorithms are implementation-defined)
/// so that a seed reproduces the same draws with any standard library.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n); n must be positive. Rejection sampling, no
  // modulo bias.
  std::size_t index(std::size_t n);

  // Standard normal draw (Box-Muller, two uniforms per call, no caching).
  double normal();

  bool bernoulli(double p) { return uniform01() < p; }

  // Fisher-Yates shuffle driven by index().
  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[index(i)]);
    }
  }

  // k distinct values from [0, n) in random order (partial Fisher-Yates).
  std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                      std::size_t k);

 private:
  std::mt19937_64 engine_;
};

} // namespace qroute

#endif // QROUTE_RANDOM_HPP
