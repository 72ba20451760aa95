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
#include <stdexcept>
#include <string>
#include <vector>

#include "rota/matroid.hpp"

namespace rota {

// One step of the coupled sampling process. Positions are 1-based members of
// {1..n}; psi[p-1] is the element assigned to position p.
struct CouplingStep {
  std::vector<std::uint32_t> s_prime;  // sampled positions, sorted
  std::vector<ElementId> psi;          // bijection table onto b_prime
  std::vector<ElementId> b_prime;      // working basis, sorted
  std::vector<ElementId> s;            // psi images of s_prime, sorted
  std::vector<ElementId> independent;  // accumulated independent set, sorted
};

// Record of a full run. Step detail is retained only while k*n <= 10^4
// (flagged by `full`); the per-step cardinalities, the final independent set,
// and the union of the sampled element sets are always retained.
struct CouplingTrace {
  std::size_t n = 0;
  std::size_t k = 0;
  unsigned long alpha = 0;
  std::uint64_t seed = 0;
  bool full = false;
  std::vector<CouplingStep> steps;
  std::vector<std::size_t> independent_sizes;   // |I_i| per step
  std::vector<std::size_t> sprime_union_sizes;  // |S'_1 ∪ … ∪ S'_i| per step
  std::vector<ElementId> final_independent;     // I_k, sorted
  std::vector<ElementId> s_union;               // S_1 ∪ … ∪ S_k, sorted
};

// A step invariant failed during a run; carries the step index (1-based) and
// the trace built so far. Reaching this means the implementation is wrong,
// not the construction.
class CouplingViolation : public std::logic_error {
 public:
  CouplingViolation(const std::string& what, std::size_t step, CouplingTrace prefix)
      : std::logic_error(what), step_(step), prefix_(std::move(prefix)) {}

  std::size_t step() const { return step_; }
  const CouplingTrace& trace_prefix() const { return prefix_; }

 private:
  std::size_t step_;
  CouplingTrace prefix_;
};

// Runs the coupled process: step 1 takes the first basis sorted with the
// order-preserving bijection; step i extends the previous independent set to
// a basis inside basis i, rebuilds the bijection to agree on the carried
// elements (remaining positions and elements paired in ascending order),
// samples a uniform α-subset of positions, maps it through the bijection,
// and grows the independent set by the image. Verifies at every step that
// the independent set's size equals the size of the union of all position
// samples so far. Requires every listed set to be a basis of m and
// 1 <= alpha <= rank.
CouplingTrace run_coupling(const Matroid& m, const std::vector<std::vector<ElementId>>& bases,
                           unsigned long alpha, std::uint64_t seed);

// Aggregate over repeated runs with derived per-trial seeds.
struct RankDominationReport {
  std::uint64_t trials = 0;
  std::uint64_t rank_ge_ik = 0;  // runs with rank(S_1 ∪ … ∪ S_k) >= |I_k|
  std::uint64_t ik_lt_k = 0;     // runs with |I_k| < k
  std::vector<std::uint64_t> ik_histogram;  // count of runs per final |I_k|
  // Chi-square statistic of the |I_k| histogram against the exact union-size
  // distribution, with adjacent sizes merged until each bin expects >= 5.
  double chi_square = 0.0;
  std::size_t chi_bins = 0;
  std::uint64_t seed = 0;
};

// Runs the process `trials` times, tallies the rank comparison and the final
// sizes, and scores the size histogram against the exact distribution.
// Per-trial RNG streams are derived from (seed, trial), so the report is
// identical regardless of the parallel schedule.
RankDominationReport coupling_rank_domination(const Matroid& m,
                                              const std::vector<std::vector<ElementId>>& bases,
                                              unsigned long alpha, std::uint64_t trials,
                                              std::uint64_t seed);

// Single-threaded reference implementation; same contract, same report.
RankDominationReport coupling_rank_domination_serial(
    const Matroid& m, const std::vector<std::vector<ElementId>>& bases, unsigned long alpha,
    std::uint64_t trials, std::uint64_t seed);

}  // namespace rota
