/*
 * Copyright 2026 The edgeood Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EDGE_CORE_RANDOM_H_
#define EDGE_CORE_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace edge {

// Portable seeded generator. Every value is a fixed function of the seed:
//
//   engine   MT19937-64 (std::mt19937_64, whose output sequence is pinned by
//            the C++ standard), seeded with the 64-bit seed directly.
//   uniform  top 53 bits of one engine draw times 2^-53, in [0, 1).
//   normal   Box-Muller on two uniforms u1, u2 (u1 mapped to (0, 1]), using
//            the cosine branch only; no cached second variate.
//   index    rejection sampling of one engine draw against the largest
//            multiple of n below 2^64, then modulo n.
//   shuffle  Fisher-Yates from the last position down to 1.
//
// Standard library distributions are avoided because their algorithms are
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }
  double Uniform();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  double Normal();
  std::size_t Index(std::size_t n);
  bool Bernoulli(double p) { return Uniform() < p; }

  template <typename T>
  void Shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = Index(i);
      std::swap(values[i - 1], values[j]);
    }
  }

  std::vector<std::size_t> Permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 mix of (root, stream); used to derive independent stream seeds
// from one root seed.
std::uint64_t DeriveSeed(std::uint64_t root, std::uint64_t stream);

}  // namespace edge

#endif  // EDGE_CORE_RANDOM_H_
