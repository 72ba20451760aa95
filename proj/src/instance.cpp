// Copyright 2026 The Authors.
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

#include "rota/instance.hpp"

#include <numeric>
#include <string>

#include "rota/rng.hpp"

namespace rota {

namespace {

constexpr std::uint64_t kInstanceSalt = 0x696e7374616e6365ULL;  // "instance"

}  // namespace

void Instance::validate() const {
  const std::size_t n = bases.size();
  if (n == 0) {
    throw std::invalid_argument("instance: must list at least one basis");
  }
  if (matroid.rank() != n) {
    throw std::invalid_argument("instance: matroid rank " + std::to_string(matroid.rank()) +
                                " does not equal basis count " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (bases[i].size() != n) {
      throw std::invalid_argument("instance: basis " + std::to_string(i) + " has size " +
                                  std::to_string(bases[i].size()) + ", expected " +
                                  std::to_string(n));
    }
    for (ElementId e : bases[i]) {
      if (e >= matroid.ground_size()) {
        throw std::invalid_argument("instance: basis " + std::to_string(i) +
                                    " references element " + std::to_string(e) +
                                    " outside the ground set");
      }
    }
  }
  std::vector<char> seen(matroid.ground_size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (ElementId e : bases[i]) {
      if (seen[e]) {
        throw std::invalid_argument("instance: element " + std::to_string(e) +
                                    " appears in more than one basis position");
      }
      seen[e] = 1;
    }
  }
  if (matroid.ground_size() < n * n) {
    throw std::invalid_argument("instance: ground size " +
                                std::to_string(matroid.ground_size()) +
                                " is smaller than n^2");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matroid.rank_of(bases[i]) != n) {
      throw std::invalid_argument("instance: listed set " + std::to_string(i) +
                                  " is not a basis");
    }
  }
}

Instance random_instance(std::size_t n, std::uint32_t p, std::uint64_t seed) {
  if (n == 0) {
    throw std::invalid_argument("random_instance: n must be positive");
  }
  Rng rng(mix_seed(seed, {kInstanceSalt, n, p}));
  const std::size_t ground = n * n;
  std::vector<std::uint32_t> entries(n * ground, 0);

  // Fill block b (columns b*n..b*n+n-1) until it is invertible on its own.
  std::vector<std::uint32_t> block(n * n);
  for (std::size_t b = 0; b < n; ++b) {
    for (;;) {
      for (auto& v : block) v = static_cast<std::uint32_t>(rng.below(p));
      // Rank check of the block via a throwaway linear matroid.
      Matroid probe = Matroid::linear(p, n, block);
      if (probe.rank() == n) break;
    }
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        entries[r * ground + b * n + c] = block[r * n + c];
      }
    }
  }

  Instance inst{Matroid::linear(p, n, std::move(entries)), {}};
  inst.bases.resize(n);
  for (std::size_t b = 0; b < n; ++b) {
    inst.bases[b].resize(n);
    std::iota(inst.bases[b].begin(), inst.bases[b].end(),
              static_cast<ElementId>(b * n));
  }
  inst.validate();
  return inst;
}

Instance uniform_instance(std::size_t n) {
  Instance inst{Matroid::uniform(n, n * n), {}};
  inst.bases.resize(n);
  for (std::size_t b = 0; b < n; ++b) {
    inst.bases[b].resize(n);
    std::iota(inst.bases[b].begin(), inst.bases[b].end(),
              static_cast<ElementId>(b * n));
  }
  inst.validate();
  return inst;
}

}  // namespace rota
