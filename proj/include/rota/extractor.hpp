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
#include <optional>
#include <vector>

#include "rota/instance.hpp"
#include "rota/rng.hpp"
#include "rota/transversal.hpp"

namespace rota {

struct ExtractionParams {
  // Subset size per basis; defaults to 3⌈log n⌉ (natural log).
  std::optional<unsigned long> alpha_override;
  // Number of transversal bases to harvest; defaults to ⌊n/(6⌈log n⌉)⌋.
  std::optional<unsigned long> m_override;
  unsigned long max_rounds = 32;
  std::uint64_t seed = 0;
};

struct ExtractionResult {
  // Pairwise element-disjoint, each verified against its column family.
  std::vector<Transversal> transversals;
  unsigned long rounds_used = 0;
  std::vector<unsigned long> per_round_successes;
  // True when max_rounds passed without m successful columns in any round;
  // `transversals` then holds the best round's harvest.
  bool shortfall = false;
  // True when the target m is 0 (n too small for the defaults); nothing to do.
  bool vacuous = false;
  unsigned long alpha = 0;
  unsigned long m = 0;
  unsigned long columns = 0;  // columns sampled per round: min(2m, ⌊n/α⌋)
};

// Uniformly shuffles a copy of the basis and slices the first count·alpha
// positions into count blocks of alpha, each returned sorted. The blocks are
// jointly disjoint and each one alone is a uniform α-subset.
// Requires count·alpha ≤ |basis|.
std::vector<std::vector<ElementId>> sample_disjoint_subsets(const std::vector<ElementId>& basis,
                                                            unsigned long alpha,
                                                            unsigned long count, Rng& rng);

// One round: sample `columns` disjoint α-subsets from every basis with fresh
// randomness, then solve each column's transversal family; a round succeeds
// when at least m columns admit a transversal basis, and the first m of them
// (by column index) are returned. Rounds retry up to max_rounds; exhaustion
// reports a shortfall instead of throwing. Per-(round, basis) RNG streams are
// derived from the seed, so results are reproducible and schedule-independent.
ExtractionResult extract(const Instance& inst, const ExtractionParams& params);

// Single-threaded reference implementation; same contract, same result.
ExtractionResult extract_serial(const Instance& inst, const ExtractionParams& params);

}  // namespace rota
