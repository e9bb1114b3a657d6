// Copyright 2026 The cooc Authors.
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

#include "cooc/random.hpp"

#include <limits>

#include "cooc/error.hpp"

namespace cooc {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidParameter("Rng::below requires a positive bound");
  // Largest multiple of bound that fits; values at or above it are rejected.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::vector<std::uint64_t> Rng::sample_sorted(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw InvalidParameter("cannot sample more values than the population size");
  // Floyd's algorithm: exactly k draws, every k-subset equally likely.
  std::vector<bool> chosen(n, false);
  for (std::uint64_t j = n - k; j < n; ++j) {
    const std::uint64_t t = below(j + 1);
    chosen[chosen[t] ? j : t] = true;
  }
  std::vector<std::uint64_t> out;
  out.reserve(k);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (chosen[i]) out.push_back(i);
  }
  return out;
}

}  // namespace cooc
