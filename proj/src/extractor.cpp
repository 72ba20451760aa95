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

#include "rota/extractor.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <string>
#include <utility>

#include "rota/probability.hpp"

namespace rota {

namespace {

constexpr std::uint64_t kSampleSalt = 0x657874726163740aULL;  // per-(round, basis) stream tag

}  // namespace

std::vector<std::vector<ElementId>> sample_disjoint_subsets(const std::vector<ElementId>& basis,
                                                            unsigned long alpha,
                                                            unsigned long count, Rng& rng) {
  if (alpha < 1) throw std::invalid_argument("sample_disjoint_subsets: require alpha >= 1");
  if (count * alpha > basis.size()) {
    throw std::invalid_argument("sample_disjoint_subsets: " + std::to_string(count) + " blocks of " +
                                std::to_string(alpha) + " exceed a basis of size " +
                                std::to_string(basis.size()));
  }
  std::vector<ElementId> deck = basis;
  rng.shuffle(deck);
  std::vector<std::vector<ElementId>> blocks(count);
  for (unsigned long b = 0; b < count; ++b) {
    blocks[b].assign(deck.begin() + static_cast<std::ptrdiff_t>(b * alpha),
                     deck.begin() + static_cast<std::ptrdiff_t>((b + 1) * alpha));
    std::sort(blocks[b].begin(), blocks[b].end());
  }
  return blocks;
}

namespace {

ExtractionResult run_extract(const Instance& inst, const ExtractionParams& params, bool parallel) {
  const std::size_t n = inst.n();
  if (n == 0) throw std::invalid_argument("extract: instance has no bases");
  if (params.max_rounds < 1) throw std::invalid_argument("extract: require max_rounds >= 1");

  ExtractionResult result;
  if (params.alpha_override) {
    result.alpha = *params.alpha_override;
    if (result.alpha < 1 || result.alpha > n) {
      throw std::invalid_argument("extract: alpha override " + std::to_string(result.alpha) +
                                  " outside 1..n");
    }
  } else if (n >= 2) {
    result.alpha = static_cast<unsigned long>(default_alpha(n));
  }
  result.m = params.m_override ? *params.m_override
                               : (n >= 2 ? static_cast<unsigned long>(default_m(n)) : 0);
  if (result.m == 0) {
    result.vacuous = true;
    return result;
  }
  if (result.alpha == 0) {
    throw std::invalid_argument("extract: n < 2 needs an explicit alpha override");
  }
  if (result.m > n / result.alpha) {
    throw std::invalid_argument("extract: target m " + std::to_string(result.m) +
                                " cannot fit " + std::to_string(result.m) +
                                " disjoint blocks of " + std::to_string(result.alpha));
  }
  result.columns = std::min(2 * result.m, static_cast<unsigned long>(n) / result.alpha);

  std::vector<unsigned long> best_round_successes;  // column indices, for shortfall reporting
  std::vector<Transversal> best_round_transversals;

  for (unsigned long round = 1; round <= params.max_rounds; ++round) {
    // Fresh subsets for every basis; stream fixed by (seed, round, basis).
    std::vector<std::vector<std::vector<ElementId>>> subsets(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rng rng(mix_seed(params.seed, {kSampleSalt, round, static_cast<std::uint64_t>(i)}));
      subsets[i] = sample_disjoint_subsets(inst.bases[i], result.alpha, result.columns, rng);
    }

    std::vector<std::optional<Transversal>> column_result(result.columns);
    std::exception_ptr failure;
    const long long columns = static_cast<long long>(result.columns);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (long long j = 0; j < columns; ++j) {
      try {
        SubsetFamily family;
        family.alpha = result.alpha;
        family.sets.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
          family.sets.push_back(subsets[i][static_cast<std::size_t>(j)]);
        }
        std::optional<Transversal> t = find_transversal_basis(inst.matroid, family);
        if (t && !verify_transversal(inst.matroid, family, *t)) {
          throw std::logic_error("extract: column " + std::to_string(j) +
                                 " produced an invalid transversal certificate");
        }
        column_result[static_cast<std::size_t>(j)] = std::move(t);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    unsigned long successes = 0;
    std::vector<Transversal> found;
    for (std::size_t j = 0; j < result.columns; ++j) {
      if (!column_result[j]) continue;
      ++successes;
      if (found.size() < result.m) found.push_back(std::move(*column_result[j]));
    }
    result.per_round_successes.push_back(successes);
    result.rounds_used = round;

    if (found.size() >= result.m) {
      result.transversals = std::move(found);
      return result;
    }
    if (found.size() > best_round_transversals.size()) {
      best_round_transversals = std::move(found);
    }
  }

  result.shortfall = true;
  result.transversals = std::move(best_round_transversals);
  return result;
}

}  // namespace

ExtractionResult extract(const Instance& inst, const ExtractionParams& params) {
  return run_extract(inst, params, true);
}

ExtractionResult extract_serial(const Instance& inst, const ExtractionParams& params) {
  return run_extract(inst, params, false);
}

}  // namespace rota
