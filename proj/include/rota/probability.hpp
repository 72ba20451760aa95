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
#include <string>
#include <vector>

#include "rota/bigrat.hpp"
#include "rota/interval.hpp"
#include "rota/matroid.hpp"

namespace rota {

// Monte Carlo tally of an event frequency with a normal-approximation
// standard error.
struct MCReport {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  BigRat estimate;
  double std_error = 0.0;
  std::uint64_t seed = 0;
};

enum class CheckStatus { kPass, kFail, kInconclusive };

// One certified inequality. The endpoints bracket the transcendental side
// with outward rounding; they are rendered at 30 significant digits.
struct InequalityCheck {
  std::string name;
  CheckStatus status = CheckStatus::kInconclusive;
  std::string lower;
  std::string upper;
  long precision_bits = 0;
};

struct InequalityReport {
  bool all_pass = false;
  std::vector<InequalityCheck> checks;
};

// Subset sample size 3⌈log n⌉ and target count ⌊n/(6⌈log n⌉)⌋, both with the
// natural logarithm and a certified integer ceiling. Require n ≥ 2.
long default_alpha(unsigned long n);
long default_m(unsigned long n);

// Distribution of |S₁ ∪ … ∪ S_k| for k independent uniform α-subsets of an
// n-element set; entry u of the result is the exact probability of union
// size u. Computed by dynamic programming over the union size. Requires
// 1 ≤ k ≤ n and 1 ≤ alpha ≤ n.
std::vector<BigRat> union_size_distribution(unsigned long k, unsigned long n, unsigned long alpha);

// Probability that k independent uniform α-subsets of an n-set have union
// smaller than k; the quantity the subset sampling has to avoid.
BigRat q_exact(unsigned long k, unsigned long n, unsigned long alpha);

// q_exact for every k in 1..n from a single sweep; entry k of the result is
// the value for k (entry 0 is unused and zero).
std::vector<BigRat> q_exact_all(unsigned long n, unsigned long alpha);

// Independent oracle for q_exact: enumerates α-subsets as bitmasks and counts
// failing tuples exactly. Refuses when C(n,alpha)^k exceeds 10^8 nominal
// tuples or n > 64.
BigRat q_exact_bruteforce(unsigned long k, unsigned long n, unsigned long alpha);

// Exact value of C(n,k−1) · (C(k−1,α)/C(n,α))^k, an upper bound for q_exact
// via a union bound over the candidate small unions. C(a,b) is 0 for b > a.
BigRat q_upper_bound(unsigned long k, unsigned long n, unsigned long alpha);

// Exact value of Σ_{k=1}^{n} C(n,k)·C(n,k−1)·((k−1)/n)^{kα} at α = 3⌈log n⌉;
// the k=1 term is 0. This sum dominates the total failure probability across
// all k at once. Requires n ≥ 2.
BigRat qn_sum(unsigned long n);

// Interval enclosure of (e/k)^{2k} · n^(−k + 3k(k−1)/n), the k-th term of the
// geometric comparison series. Requires k ≥ 1, n ≥ 2.
RInterval tail_term(unsigned long k, unsigned long n, long precision_bits);

// Certifies with interval arithmetic, escalating precision from start_bits by
// doubling up to max_bits:
//   - 9e²/n^(3/2 − 3/n) < 1/2 evaluated at n and at 60
//   - tail_term(k, n) ≤ (1/2)^(k+2) for k ∈ {1, 2, 3}
//   - (e/4)² ≤ 1/2
// Requires n ≥ 2. Checks that straddle their threshold at max_bits are
// reported inconclusive.
InequalityReport evaluate_claim_checks(unsigned long n, long start_bits = 128, long max_bits = 1024);

// evaluate_claim_checks restricted to the regime where every check is
// expected to pass; rejects n < 60.
InequalityReport verify_claim_inequalities(unsigned long n);

// Estimates Q(B₁,…,B_k): the probability that uniform α-subsets, one from
// each listed basis, have a union of rank < k in m. Trials run with
// per-trial RNG streams derived from (seed, trial), so the tally does not
// depend on the parallel schedule. Requires alpha ≤ |basis| for every basis.
MCReport estimate_q(const Matroid& m, const std::vector<std::vector<ElementId>>& bases,
                    unsigned long alpha, std::uint64_t trials, std::uint64_t seed);

// Single-threaded reference implementation of estimate_q; same contract,
// same result.
MCReport estimate_q_serial(const Matroid& m, const std::vector<std::vector<ElementId>>& bases,
                           unsigned long alpha, std::uint64_t trials, std::uint64_t seed);

}  // namespace rota
