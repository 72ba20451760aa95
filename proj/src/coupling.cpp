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

#include "rota/coupling.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <stdexcept>

#include "rota/probability.hpp"
#include "rota/rng.hpp"

namespace rota {

namespace {

constexpr std::uint64_t kRunSalt = 0x636f75706c696e67ULL;    // per-run stream tag
constexpr std::uint64_t kTrialSalt = 0x72616e6b646f6d00ULL;  // per-trial stream tag
constexpr std::size_t kFullTraceLimit = 10000;               // k*n cap for step retention

void check_coupling_inputs(const Matroid& m, const std::vector<std::vector<ElementId>>& bases,
                           unsigned long alpha) {
  if (bases.empty()) throw std::invalid_argument("run_coupling: need at least one basis");
  const std::size_t n = m.rank();
  if (n == 0) throw std::invalid_argument("run_coupling: matroid has rank 0");
  if (alpha < 1 || alpha > n) {
    throw std::invalid_argument("run_coupling: require 1 <= alpha <= rank, got alpha=" +
                                std::to_string(alpha));
  }
  for (const auto& b : bases) {
    if (b.size() != n || m.rank_of(b) != n) {
      throw std::invalid_argument("run_coupling: a listed set is not a basis of the matroid");
    }
  }
}

std::vector<ElementId> sorted_union(const std::vector<ElementId>& a,
                                    const std::vector<ElementId>& b_sorted) {
  std::vector<ElementId> out;
  out.reserve(a.size() + b_sorted.size());
  std::set_union(a.begin(), a.end(), b_sorted.begin(), b_sorted.end(), std::back_inserter(out));
  return out;
}

}  // namespace

CouplingTrace run_coupling(const Matroid& m, const std::vector<std::vector<ElementId>>& bases,
                           unsigned long alpha, std::uint64_t seed) {
  check_coupling_inputs(m, bases, alpha);
  const std::size_t n = m.rank();
  const std::size_t k = bases.size();

  CouplingTrace trace;
  trace.n = n;
  trace.k = k;
  trace.alpha = alpha;
  trace.seed = seed;
  trace.full = k * n <= kFullTraceLimit;

  Rng rng(mix_seed(seed, {kRunSalt}));

  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> position_of(m.ground_size(), kUnset);  // inverse of psi
  std::vector<ElementId> psi(n);
  std::vector<ElementId> independent;  // I_{i-1}, sorted
  std::vector<char> sprime_seen(n, 0);
  std::size_t sprime_union = 0;

  auto fail = [&](const std::string& msg, std::size_t step) {
    throw CouplingViolation("run_coupling step " + std::to_string(step) + ": " + msg, step,
                            trace);
  };

  for (std::size_t i = 1; i <= k; ++i) {
    // Working basis: the first basis as-is, later ones extended around the
    // carried independent set.
    std::vector<ElementId> b_prime;
    if (i == 1) {
      b_prime = bases[0];
      std::sort(b_prime.begin(), b_prime.end());
    } else {
      b_prime = m.extend_to_basis(independent, bases[i - 1]);
    }
    if (b_prime.size() != n || m.rank_of(b_prime) != n) {
      fail("working set is not a basis", i);
    }
    if (!std::includes(b_prime.begin(), b_prime.end(), independent.begin(), independent.end())) {
      fail("carried independent set not inside the working basis", i);
    }

    // Rebuild the bijection: carried elements keep their positions, all other
    // positions take the remaining basis elements in ascending order.
    std::vector<char> position_taken(n, 0);
    for (ElementId e : independent) {
      position_taken[position_of[e]] = 1;
    }
    std::vector<char> carried(m.ground_size(), 0);
    for (ElementId e : independent) carried[e] = 1;
    std::size_t next_free = 0;
    std::vector<ElementId> new_psi(n);
    for (ElementId e : independent) new_psi[position_of[e]] = e;
    for (ElementId e : b_prime) {
      if (carried[e]) continue;
      while (position_taken[next_free]) ++next_free;
      new_psi[next_free] = e;
      position_taken[next_free] = 1;
      position_of[e] = static_cast<std::uint32_t>(next_free);
    }
    // Bijection audit: new_psi must enumerate b_prime exactly once, agreeing
    // with the previous table on carried elements.
    {
      std::vector<ElementId> image = new_psi;
      std::sort(image.begin(), image.end());
      if (image != b_prime) fail("bijection table does not enumerate the working basis", i);
      for (ElementId e : independent) {
        if (new_psi[position_of[e]] != e) fail("bijection broke on a carried element", i);
      }
    }
    psi = std::move(new_psi);

    // Sample positions, map through the bijection.
    std::vector<std::uint32_t> s_prime =
        rng.sample_combination(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(alpha));
    std::vector<ElementId> s;
    s.reserve(alpha);
    for (std::uint32_t p : s_prime) {
      s.push_back(psi[p]);
      if (!sprime_seen[p]) {
        sprime_seen[p] = 1;
        ++sprime_union;
      }
    }
    std::sort(s.begin(), s.end());

    std::vector<ElementId> grown = sorted_union(independent, s);
    if (!std::includes(b_prime.begin(), b_prime.end(), grown.begin(), grown.end())) {
      fail("grown independent set leaks outside the working basis", i);
    }
    if (m.rank_of(grown) != grown.size()) {
      fail("grown set is dependent", i);
    }
    independent = std::move(grown);

    trace.independent_sizes.push_back(independent.size());
    trace.sprime_union_sizes.push_back(sprime_union);
    trace.s_union = sorted_union(trace.s_union, s);
    if (trace.full) {
      CouplingStep step;
      step.s_prime.reserve(alpha);
      for (std::uint32_t p : s_prime) step.s_prime.push_back(p + 1);  // report 1-based
      step.psi = psi;
      step.b_prime = b_prime;
      step.s = s;
      step.independent = independent;
      trace.steps.push_back(std::move(step));
    }

    // The process is built so that the independent set tracks the position
    // union exactly; this equality is the whole point of the construction.
    if (independent.size() != sprime_union) {
      fail("independent set size " + std::to_string(independent.size()) +
               " != position union size " + std::to_string(sprime_union),
           i);
    }
  }

  trace.final_independent = independent;
  return trace;
}

namespace {

RankDominationReport tally_runs(const Matroid& m, const std::vector<std::vector<ElementId>>& bases,
                                unsigned long alpha, std::uint64_t trials, std::uint64_t seed,
                                bool parallel) {
  check_coupling_inputs(m, bases, alpha);
  if (trials == 0) throw std::invalid_argument("coupling_rank_domination: need trials >= 1");
  const std::size_t n = m.rank();
  const std::size_t k = bases.size();

  RankDominationReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.ik_histogram.assign(n + 1, 0);

  std::uint64_t rank_ok = 0;
  std::uint64_t small = 0;
  std::vector<std::uint64_t> histogram(n + 1, 0);
  std::exception_ptr failure;
  const long long count = static_cast<long long>(trials);

#pragma omp parallel if (parallel)
  {
    std::uint64_t local_rank_ok = 0;
    std::uint64_t local_small = 0;
    std::vector<std::uint64_t> local_hist(n + 1, 0);
#pragma omp for schedule(static) nowait
    for (long long t = 0; t < count; ++t) {
      try {
        const CouplingTrace tr = run_coupling(
            m, bases, alpha, mix_seed(seed, {kTrialSalt, static_cast<std::uint64_t>(t)}));
        const std::size_t ik = tr.independent_sizes.back();
        if (m.rank_of(tr.s_union) >= ik) ++local_rank_ok;
        if (ik < k) ++local_small;
        ++local_hist[ik];
      } catch (...) {
#pragma omp critical
        {
          if (!failure) failure = std::current_exception();
        }
      }
    }
#pragma omp critical
    {
      rank_ok += local_rank_ok;
      small += local_small;
      for (std::size_t u = 0; u <= n; ++u) histogram[u] += local_hist[u];
    }
  }
  if (failure) std::rethrow_exception(failure);

  rep.rank_ge_ik = rank_ok;
  rep.ik_lt_k = small;
  rep.ik_histogram = histogram;

  // Score the histogram against the exact union-size distribution. Adjacent
  // sizes are merged until every bin expects at least 5 runs, an undersized
  // tail folds into its neighbor; the statistic is comparable to chi-square
  // with (bins - 1) degrees of freedom.
  const std::vector<BigRat> dist = union_size_distribution(k, n, alpha);
  std::vector<double> exp_bins, obs_bins;
  double expect_acc = 0.0;
  double observe_acc = 0.0;
  for (std::size_t u = 0; u <= n; ++u) {
    expect_acc += dist[u].to_double() * static_cast<double>(trials);
    observe_acc += static_cast<double>(histogram[u]);
    if (expect_acc >= 5.0) {
      exp_bins.push_back(expect_acc);
      obs_bins.push_back(observe_acc);
      expect_acc = 0.0;
      observe_acc = 0.0;
    }
  }
  if (expect_acc > 0.0 || observe_acc > 0.0) {
    if (exp_bins.empty()) {
      exp_bins.push_back(expect_acc);
      obs_bins.push_back(observe_acc);
    } else {
      exp_bins.back() += expect_acc;
      obs_bins.back() += observe_acc;
    }
  }
  double chi = 0.0;
  for (std::size_t b = 0; b < exp_bins.size(); ++b) {
    const double diff = obs_bins[b] - exp_bins[b];
    if (exp_bins[b] > 0.0) chi += diff * diff / exp_bins[b];
  }
  rep.chi_square = chi;
  rep.chi_bins = exp_bins.size();
  return rep;
}

}  // namespace

RankDominationReport coupling_rank_domination(const Matroid& m,
                                              const std::vector<std::vector<ElementId>>& bases,
                                              unsigned long alpha, std::uint64_t trials,
                                              std::uint64_t seed) {
  return tally_runs(m, bases, alpha, trials, seed, true);
}

RankDominationReport coupling_rank_domination_serial(
    const Matroid& m, const std::vector<std::vector<ElementId>>& bases, unsigned long alpha,
    std::uint64_t trials, std::uint64_t seed) {
  return tally_runs(m, bases, alpha, trials, seed, false);
}

}  // namespace rota
