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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

namespace rota {

// Derives an independent stream seed from a base seed and a list of salts
// (round index, column index, trial index, ...). Splitmix64-based, so
// nearby salt tuples give unrelated streams.
std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> salts);

// Deterministic random stream. All sampling goes through `below`, which is
// rejection-based, so results are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform draw from [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  // In-place Fisher-Yates; uniform over permutations.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  // Sorted uniform alpha-element subset of {0, ..., n-1}.
  std::vector<std::uint32_t> sample_combination(std::uint32_t n, std::uint32_t alpha);

 private:
  std::mt19937_64 gen_;
};

}  // namespace rota
