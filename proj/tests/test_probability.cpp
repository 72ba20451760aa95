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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rota/bigrat.hpp"
#include "rota/instance.hpp"
#include "rota/probability.hpp"

using rota::BigRat;
using rota::CheckStatus;
using rota::ElementId;

TEST_CASE("default sampling parameters") {
  CHECK(rota::default_alpha(60) == 15);
  CHECK(rota::default_m(60) == 2);
  CHECK(rota::default_alpha(2) == 3);
  CHECK(rota::default_m(2) == 0);
  CHECK(rota::default_alpha(148) == 15);
  CHECK(rota::default_m(148) == 4);
  CHECK(rota::default_alpha(149) == 18);
  CHECK(rota::default_m(149) == 4);
  CHECK_THROWS_AS(rota::default_alpha(1), std::invalid_argument);
  CHECK_THROWS_AS(rota::default_m(0), std::invalid_argument);
}

TEST_CASE("union size distribution is an exact probability distribution") {
  for (unsigned long n : {4UL, 7UL, 9UL}) {
    for (unsigned long alpha = 1; alpha <= 3; ++alpha) {
      for (unsigned long k = 1; k <= n; ++k) {
        const auto dist = rota::union_size_distribution(k, n, alpha);
        REQUIRE(dist.size() == n + 1);
        BigRat total;
        for (const BigRat& p : dist) {
          CHECK(p.sign() >= 0);
          total += p;
        }
        CHECK(total == BigRat(1));
        // Support: at least alpha elements, at most min(k*alpha, n).
        for (unsigned long u = 0; u < alpha; ++u) CHECK(dist[u].is_zero());
        for (unsigned long u = std::min(k * alpha, n) + 1; u <= n; ++u) {
          CHECK(dist[u].is_zero());
        }
      }
    }
  }
}

TEST_CASE("frozen small-union probabilities") {
  // Two 1-subsets of a 4-set collide with probability 1/4.
  CHECK(rota::q_exact(2, 4, 1) == BigRat(1, 4));
  // Three 1-subsets of a 3-set miss an element unless they form a
  // permutation: 1 - 3!/27 = 7/9.
  CHECK(rota::q_exact(3, 3, 1) == BigRat(7, 9));
  // One subset always has union >= 1.
  CHECK(rota::q_exact(1, 9, 2).is_zero());
  // alpha >= k makes a small union impossible.
  CHECK(rota::q_exact(3, 8, 3).is_zero());
  CHECK(rota::q_exact(3, 8, 5).is_zero());
  CHECK(rota::q_exact(8, 8, 8).is_zero());
}

TEST_CASE("single sweep matches pointwise evaluation") {
  const auto all = rota::q_exact_all(7, 2);
  REQUIRE(all.size() == 8);
  CHECK(all[0].is_zero());
  for (unsigned long k = 1; k <= 7; ++k) {
    CHECK(all[k] == rota::q_exact(k, 7, 2));
  }
}

TEST_CASE("dynamic programming agrees with exhaustive tuple counting") {
  for (unsigned long n = 2; n <= 5; ++n) {
    for (unsigned long alpha = 1; alpha <= 3 && alpha <= n; ++alpha) {
      for (unsigned long k = 1; k <= n; ++k) {
        INFO("k=" << k << " n=" << n << " alpha=" << alpha);
        CHECK(rota::q_exact(k, n, alpha) == rota::q_exact_bruteforce(k, n, alpha));
      }
    }
  }
  CHECK(rota::q_exact(2, 6, 3) == rota::q_exact_bruteforce(2, 6, 3));
  CHECK(rota::q_exact(4, 6, 2) == rota::q_exact_bruteforce(4, 6, 2));
}

TEST_CASE("parameter guards") {
  CHECK_THROWS_AS(rota::q_exact(0, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(rota::q_exact(6, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(rota::q_exact(3, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(rota::q_exact(3, 5, 6), std::invalid_argument);
  CHECK_THROWS_AS(rota::q_exact_bruteforce(2, 65, 1), std::invalid_argument);
  // C(30,15) alone exceeds the 10^8 tuple guard.
  CHECK_THROWS_AS(rota::q_exact_bruteforce(2, 30, 15), std::invalid_argument);
}

TEST_CASE("union bound dominates the exact probability") {
  // C(8,3) * (C(3,2)/C(8,2))^4 = 56 * (3/28)^4 = 567/76832.
  CHECK(rota::q_upper_bound(4, 8, 2) == BigRat(567, 76832));
  // alpha > k-1 leaves no candidate small union.
  CHECK(rota::q_upper_bound(3, 8, 3).is_zero());
  CHECK(rota::q_upper_bound(1, 8, 1).is_zero());

  for (unsigned long alpha = 2; alpha <= 3; ++alpha) {
    const auto exact = rota::q_exact_all(10, alpha);
    for (unsigned long k = 1; k <= 10; ++k) {
      INFO("k=" << k << " alpha=" << alpha);
      CHECK(exact[k] <= rota::q_upper_bound(k, 10, alpha));
    }
  }
}

TEST_CASE("aggregate failure bound series") {
  // n=2: only k=2 contributes, C(2,2)*C(2,1)*(1/2)^6 = 1/32.
  CHECK(rota::qn_sum(2) == BigRat(1, 32));
  // n=3: alpha=6; 3*3*(1/3)^12 + 1*3*(2/3)^18 = 264331/129140163.
  CHECK(rota::qn_sum(3) == BigRat(264331, 129140163));

  const BigRat v59 = rota::qn_sum(59);
  CHECK(v59 < BigRat(1, 2));
  // 1.588011e-5 < qn_sum(59) < 1.588012e-5.
  CHECK(BigRat(1588011, 100000000000UL) < v59);
  CHECK(v59 < BigRat(1588012, 100000000000UL));
}

TEST_CASE("geometric tail terms are tightly enclosed") {
  const auto t1 = rota::tail_term(1, 60, 128);
  // e^2/60 = 0.12315093498...
  CHECK(t1.certainly_greater(BigRat(12315093, 100000000)));
  CHECK(t1.certainly_less(BigRat(12315094, 100000000)));
  CHECK(t1.certainly_less(BigRat(1, 8)));

  const auto t2 = rota::tail_term(2, 60, 128);
  CHECK(t2.certainly_greater(BigRat(14, 10000)));
  CHECK(t2.certainly_less(BigRat(15, 10000)));
  CHECK(t2.certainly_less(BigRat(1, 16)));

  const auto t3 = rota::tail_term(3, 60, 128);
  CHECK(t3.certainly_greater(BigRat(8, 1000000)));
  CHECK(t3.certainly_less(BigRat(9, 1000000)));
  CHECK(t3.certainly_less(BigRat(1, 32)));

  // The boundary case one step below the threshold: e^2/59 > 1/8.
  CHECK(rota::tail_term(1, 59, 128).certainly_greater(BigRat(1, 8)));

  // Decreasing in n for fixed k >= 2.
  const auto far = rota::tail_term(2, 1000000, 128);
  CHECK(far.certainly_less(BigRat(14, 10000)));

  // More precision can only tighten the enclosure.
  const auto coarse = rota::tail_term(2, 60, 64);
  const auto fine = rota::tail_term(2, 60, 256);
  CHECK(coarse.encloses(fine));

  CHECK_THROWS_AS(rota::tail_term(0, 60, 128), std::invalid_argument);
  CHECK_THROWS_AS(rota::tail_term(1, 1, 128), std::invalid_argument);
}

TEST_CASE("certified inequality report at and below the threshold") {
  const auto at60 = rota::evaluate_claim_checks(60);
  CHECK(at60.all_pass);
  REQUIRE(at60.checks.size() == 6);
  const std::vector<std::string> names = {
      "nine_e_sq_over_pow_at_n", "nine_e_sq_over_pow_at_60", "tail_term_k1",
      "tail_term_k2",            "tail_term_k3",             "e_over_4_squared"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    CHECK(at60.checks[i].name == names[i]);
    CHECK(at60.checks[i].status == CheckStatus::kPass);
    CHECK(at60.checks[i].precision_bits == 128);  // first precision suffices
    CHECK(at60.checks[i].lower <= at60.checks[i].upper);
  }

  // One step below the regime boundary exactly one check flips.
  const auto at59 = rota::evaluate_claim_checks(59);
  CHECK_FALSE(at59.all_pass);
  int fails = 0;
  for (const auto& c : at59.checks) {
    if (c.status == CheckStatus::kFail) {
      ++fails;
      CHECK(c.name == "tail_term_k1");
    } else {
      CHECK(c.status == CheckStatus::kPass);
    }
  }
  CHECK(fails == 1);

  CHECK(rota::verify_claim_inequalities(60).all_pass);
  CHECK_THROWS_AS(rota::verify_claim_inequalities(59), std::invalid_argument);
  CHECK_THROWS_AS(rota::evaluate_claim_checks(60, 4, 1024), std::invalid_argument);
  CHECK_THROWS_AS(rota::evaluate_claim_checks(60, 256, 128), std::invalid_argument);
}

TEST_CASE("sampled failure frequency matches the exact value") {
  // Four copies of the same basis inside a rank-4 uniform matroid: a trial
  // fails exactly when four uniform 1-subsets of a 4-set miss an element,
  // so the frequency estimates q_exact(4,4,1) = 29/32.
  const rota::Instance inst = rota::uniform_instance(4);
  const std::vector<std::vector<ElementId>> equal(4, inst.bases[0]);
  const auto rep = rota::estimate_q(inst.matroid, equal, 1, 20000, 7);
  CHECK(rep.trials == 20000);
  CHECK(rep.seed == 7);
  const double exact = BigRat(29, 32).to_double();
  const double sigma = 0.00206;
  CHECK(rep.estimate.to_double() > exact - 4 * sigma);
  CHECK(rep.estimate.to_double() < exact + 4 * sigma);

  // The serial reference reproduces the parallel tally bit for bit.
  const auto ser = rota::estimate_q_serial(inst.matroid, equal, 1, 20000, 7);
  CHECK(ser.trials == rep.trials);
  CHECK(ser.failures == rep.failures);
  CHECK(ser.estimate == rep.estimate);
  CHECK(ser.seed == rep.seed);

  // Disjoint blocks never collide: with alpha = 1 the union has one element
  // per basis, so it always reaches rank 4.
  const auto clean = rota::estimate_q(inst.matroid, inst.bases, 1, 2000, 7);
  CHECK(clean.failures == 0);
  CHECK(clean.estimate.is_zero());
  CHECK(clean.std_error == 0.0);
}

TEST_CASE("sampling rejects malformed inputs") {
  const rota::Instance inst = rota::uniform_instance(3);
  CHECK_THROWS_AS(rota::estimate_q(inst.matroid, inst.bases, 4, 10, 1),
                  std::invalid_argument);  // alpha exceeds basis size
  CHECK_THROWS_AS(rota::estimate_q(inst.matroid, inst.bases, 1, 0, 1),
                  std::invalid_argument);  // no trials
  CHECK_THROWS_AS(rota::estimate_q(inst.matroid, {}, 1, 10, 1), std::invalid_argument);
  auto broken = inst.bases;
  broken[0][0] = broken[0][1];  // duplicate entry: not a basis
  CHECK_THROWS_AS(rota::estimate_q(inst.matroid, broken, 1, 10, 1), std::invalid_argument);
}
