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
#include <vector>

#include "rota/matroid.hpp"

namespace rota {

// A rank-n matroid together with n pairwise-disjoint bases, the input object
// of the extraction pipeline.
struct Instance {
  Matroid matroid;
  std::vector<std::vector<ElementId>> bases;

  std::size_t n() const { return bases.size(); }

  // Throws std::invalid_argument naming the first violated invariant:
  // basis count and sizes, id validity, pairwise disjointness, ground size,
  // and each listed set being a basis.
  void validate() const;
};

// Linear instance over GF(p): n blocks of uniformly random n x n matrices,
// each resampled until invertible; block i is basis i. Deterministic in seed.
Instance random_instance(std::size_t n, std::uint32_t p, std::uint64_t seed);

// Uniform-matroid instance of rank n with ground n*n split into consecutive
// blocks; handy wherever any n distinct elements should form a basis.
Instance uniform_instance(std::size_t n);

}  // namespace rota
