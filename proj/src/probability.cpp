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

#include "rota/probability.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "rota/rng.hpp"

namespace rota {

namespace {

constexpr std::uint64_t kEstimateSalt = 0x51657374696d6174ULL;  // stream tag for estimate_q

void check_kn_alpha(unsigned long k, unsigned long n, unsigned long alpha) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("q computation: require 1 <= k <= n, got k=" + std::to_string(k) +
                                " n=" + std::to_string(n));
  }
  if (alpha < 1 || alpha > n) {
    throw std::invalid_argument("q computation: require 1 <= alpha <= n, got alpha=" +
                                std::to_string(alpha));
  }
}

// One DP transition: distribution of the union size after adding one more
// uniform α-subset.
std::vector<BigRat> union_step(const std::vector<BigRat>& cur, unsigned long n,
                               unsigned long alpha, const BigRat& denom) {
  std::vector<BigRat> next(n + 1);
  for (unsigned long u = 0; u <= n; ++u) {
    if (cur[u].is_zero()) continue;
    const unsigned long dmin = alpha > u ? alpha - u : 0;
    const unsigned long dmax = std::min(alpha, n - u);
    for (unsigned long d = dmin; d <= dmax; ++d) {
      BigRat w = BigRat::binomial(n - u, d);
      w *= BigRat::binomial(u, alpha - d);
      w /= denom;
      w *= cur[u];
      next[u + d] += w;
    }
  }
  return next;
}

BigRat small_union_mass(const std::vector<BigRat>& dist, unsigned long k) {
  BigRat total;
  for (unsigned long u = 0; u < k && u < dist.size(); ++u) total += dist[u];
  return total;
}

}  // namespace

long default_alpha(unsigned long n) {
  if (n < 2) throw std::invalid_argument("default_alpha: require n >= 2");
  return 3 * ceil_log(n);
}

long default_m(unsigned long n) {
  if (n < 2) throw std::invalid_argument("default_m: require n >= 2");
  return static_cast<long>(n) / (6 * ceil_log(n));
}

std::vector<BigRat> union_size_distribution(unsigned long k, unsigned long n, unsigned long alpha) {
  check_kn_alpha(k, n, alpha);
  std::vector<BigRat> cur(n + 1);
  cur[alpha] = BigRat(1);
  const BigRat denom = BigRat::binomial(n, alpha);
  for (unsigned long i = 2; i <= k; ++i) cur = union_step(cur, n, alpha, denom);
  return cur;
}

BigRat q_exact(unsigned long k, unsigned long n, unsigned long alpha) {
  return small_union_mass(union_size_distribution(k, n, alpha), k);
}

std::vector<BigRat> q_exact_all(unsigned long n, unsigned long alpha) {
  check_kn_alpha(1, n, alpha);
  std::vector<BigRat> out(n + 1);
  std::vector<BigRat> cur(n + 1);
  cur[alpha] = BigRat(1);
  const BigRat denom = BigRat::binomial(n, alpha);
  out[1] = small_union_mass(cur, 1);
  for (unsigned long k = 2; k <= n; ++k) {
    cur = union_step(cur, n, alpha, denom);
    out[k] = small_union_mass(cur, k);
  }
  return out;
}

BigRat q_exact_bruteforce(unsigned long k, unsigned long n, unsigned long alpha) {
  check_kn_alpha(k, n, alpha);
  if (n > 64) {
    throw std::invalid_argument("q_exact_bruteforce: n > 64 exceeds the bitmask ground");
  }
  const BigRat subsets = BigRat::binomial(n, alpha);
  const BigRat tuples = subsets.pow_ui(k);
  if (BigRat(100000000L) < tuples) {
    throw std::invalid_argument("q_exact_bruteforce: C(n,alpha)^k exceeds the 10^8 tuple guard");
  }

  // All α-subsets of [n] as bitmasks, ascending.
  std::vector<std::uint64_t> masks;
  std::uint64_t mask = (alpha == 64) ? ~0ULL : ((1ULL << alpha) - 1);
  const std::uint64_t limit = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
  for (;;) {
    masks.push_back(mask);
    if ((mask & limit) == ((limit >> (n - alpha)) << (n - alpha))) break;  // highest combination
    const std::uint64_t c = mask & -mask;
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;  // next same-popcount mask (Gosper)
  }

  // Tuple counting with two exact shortcuts: a union that already reached k
  // elements can never fail, and the completion count depends only on the
  // union mask and the number of sets still to draw.
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> memo(k + 1);
  std::function<std::uint64_t(std::uint64_t, unsigned long)> count_fail =
      [&](std::uint64_t unioned, unsigned long steps_left) -> std::uint64_t {
    if (static_cast<unsigned long>(std::popcount(unioned)) >= k) return 0;
    if (steps_left == 0) return 1;
    auto& level = memo[steps_left];
    if (auto it = level.find(unioned); it != level.end()) return it->second;
    std::uint64_t total = 0;
    for (std::uint64_t s : masks) total += count_fail(unioned | s, steps_left - 1);
    level.emplace(unioned, total);
    return total;
  };
  const std::uint64_t failures = count_fail(0, k);
  return BigRat(static_cast<long>(failures)) / tuples;
}

BigRat q_upper_bound(unsigned long k, unsigned long n, unsigned long alpha) {
  check_kn_alpha(k, n, alpha);
  BigRat ratio = BigRat::binomial(k - 1, alpha);
  if (ratio.is_zero()) return BigRat(0);
  ratio /= BigRat::binomial(n, alpha);
  return BigRat::binomial(n, k - 1) * ratio.pow_ui(k);
}

BigRat qn_sum(unsigned long n) {
  const unsigned long alpha = static_cast<unsigned long>(default_alpha(n));
  BigRat total;
  for (unsigned long k = 2; k <= n; ++k) {
    BigRat term = BigRat::binomial(n, k);
    term *= BigRat::binomial(n, k - 1);
    BigRat ratio(static_cast<long>(k - 1), n);
    term *= ratio.pow_ui(k * alpha);
    total += term;
  }
  return total;
}

RInterval tail_term(unsigned long k, unsigned long n, long precision_bits) {
  if (k < 1 || n < 2) throw std::invalid_argument("tail_term: require k >= 1 and n >= 2");
  if (k > (1UL << 30) || n > (1UL << 30)) {
    throw std::invalid_argument("tail_term: parameter exceeds the 2^30 guard");
  }
  const RInterval e_over_k =
      RInterval::euler(precision_bits) / RInterval::exact_int(static_cast<long>(k), precision_bits);
  const RInterval head = e_over_k.pow_ui(2 * k);
  // Exponent −k + 3k(k−1)/n as an exact rational, then an interval power.
  BigRat expo = BigRat(3L) * BigRat(static_cast<long>(k)) * BigRat(static_cast<long>(k) - 1);
  expo /= BigRat(static_cast<long>(n));
  expo -= BigRat(static_cast<long>(k));
  const RInterval base = RInterval::exact_int(static_cast<long>(n), precision_bits);
  return head * base.pow(RInterval::from_rational(expo, precision_bits));
}

namespace {

struct PendingCheck {
  std::string name;
  std::function<RInterval(long)> value;  // evaluate at a precision
  BigRat threshold;                      // certify value < threshold
};

}  // namespace

InequalityReport evaluate_claim_checks(unsigned long n, long start_bits, long max_bits) {
  if (n < 2) throw std::invalid_argument("evaluate_claim_checks: require n >= 2");
  if (start_bits < 8 || max_bits < start_bits) {
    throw std::invalid_argument("evaluate_claim_checks: bad precision range");
  }

  const auto nine_e_sq = [](unsigned long at, long bits) {
    // 9e² / at^(3/2 − 3/at)
    BigRat expo = BigRat(3L, 2UL) - BigRat(3L, at);
    const RInterval numerator =
        RInterval::exact_int(9, bits) * RInterval::euler(bits).pow_ui(2);
    const RInterval base = RInterval::exact_int(static_cast<long>(at), bits);
    return numerator / base.pow(RInterval::from_rational(expo, bits));
  };

  std::vector<PendingCheck> pending;
  pending.push_back({"nine_e_sq_over_pow_at_n",
                     [n, nine_e_sq](long bits) { return nine_e_sq(n, bits); }, BigRat(1, 2)});
  pending.push_back({"nine_e_sq_over_pow_at_60",
                     [nine_e_sq](long bits) { return nine_e_sq(60, bits); }, BigRat(1, 2)});
  for (unsigned long k = 1; k <= 3; ++k) {
    pending.push_back({"tail_term_k" + std::to_string(k),
                       [k, n](long bits) { return tail_term(k, n, bits); },
                       BigRat(1, 1UL << (k + 2))});
  }
  pending.push_back({"e_over_4_squared",
                     [](long bits) {
                       return (RInterval::euler(bits) / RInterval::exact_int(4, bits)).pow_ui(2);
                     },
                     BigRat(1, 2)});

  InequalityReport report;
  report.all_pass = true;
  for (const PendingCheck& c : pending) {
    InequalityCheck result;
    result.name = c.name;
    long bits = start_bits;
    for (;;) {
      const RInterval v = c.value(bits);
      result.lower = v.lower_string(30);
      result.upper = v.upper_string(30);
      result.precision_bits = bits;
      if (v.certainly_less(c.threshold)) {
        result.status = CheckStatus::kPass;
        break;
      }
      if (v.certainly_greater(c.threshold)) {
        result.status = CheckStatus::kFail;
        break;
      }
      if (bits >= max_bits) {
        result.status = CheckStatus::kInconclusive;
        break;
      }
      bits = std::min(bits * 2, max_bits);
    }
    if (result.status != CheckStatus::kPass) report.all_pass = false;
    report.checks.push_back(std::move(result));
  }
  return report;
}

InequalityReport verify_claim_inequalities(unsigned long n) {
  if (n < 60) {
    throw std::invalid_argument("verify_claim_inequalities: require n >= 60 (use "
                                "evaluate_claim_checks to probe smaller n)");
  }
  return evaluate_claim_checks(n);
}

namespace {

void check_estimate_inputs(const Matroid& m, const std::vector<std::vector<ElementId>>& bases,
                           unsigned long alpha, std::uint64_t trials) {
  if (bases.empty()) throw std::invalid_argument("estimate_q: need at least one basis");
  if (trials == 0) throw std::invalid_argument("estimate_q: need at least one trial");
  if (alpha < 1) throw std::invalid_argument("estimate_q: require alpha >= 1");
  for (const auto& b : bases) {
    if (alpha > b.size()) {
      throw std::invalid_argument("estimate_q: alpha " + std::to_string(alpha) +
                                  " exceeds a basis of size " + std::to_string(b.size()));
    }
    if (b.size() != m.rank() || m.rank_of(b) != m.rank()) {
      throw std::invalid_argument("estimate_q: a listed set is not a basis of the matroid");
    }
  }
}

bool trial_fails(const Matroid& m, const std::vector<std::vector<ElementId>>& bases,
                 unsigned long alpha, Rng& rng, std::vector<ElementId>& unioned) {
  unioned.clear();
  for (const auto& b : bases) {
    const auto positions = rng.sample_combination(static_cast<std::uint32_t>(b.size()),
                                                  static_cast<std::uint32_t>(alpha));
    for (std::uint32_t pos : positions) unioned.push_back(b[pos]);
  }
  return m.rank_of(unioned) < bases.size();
}

MCReport finish_report(std::uint64_t trials, std::uint64_t failures, std::uint64_t seed) {
  MCReport rep;
  rep.trials = trials;
  rep.failures = failures;
  rep.estimate = BigRat(static_cast<long>(failures)) / BigRat(static_cast<long>(trials));
  const double p = static_cast<double>(failures) / static_cast<double>(trials);
  rep.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  rep.seed = seed;
  return rep;
}

}  // namespace

MCReport estimate_q(const Matroid& m, const std::vector<std::vector<ElementId>>& bases,
                    unsigned long alpha, std::uint64_t trials, std::uint64_t seed) {
  check_estimate_inputs(m, bases, alpha, trials);
  const long long count = static_cast<long long>(trials);
  std::uint64_t failures = 0;
#pragma omp parallel
  {
    std::vector<ElementId> unioned;
    std::uint64_t local = 0;
#pragma omp for schedule(static) nowait
    for (long long t = 0; t < count; ++t) {
      Rng rng(mix_seed(seed, {kEstimateSalt, static_cast<std::uint64_t>(t)}));
      if (trial_fails(m, bases, alpha, rng, unioned)) ++local;
    }
#pragma omp atomic
    failures += local;
  }
  return finish_report(trials, failures, seed);
}

MCReport estimate_q_serial(const Matroid& m, const std::vector<std::vector<ElementId>>& bases,
                           unsigned long alpha, std::uint64_t trials, std::uint64_t seed) {
  check_estimate_inputs(m, bases, alpha, trials);
  std::uint64_t failures = 0;
  std::vector<ElementId> unioned;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(mix_seed(seed, {kEstimateSalt, t}));
    if (trial_fails(m, bases, alpha, rng, unioned)) ++failures;
  }
  return finish_report(trials, failures, seed);
}

}  // namespace rota
