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
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rota/instance.hpp"
#include "rota/matroid.hpp"
#include "rota/rng.hpp"

using rota::ContractError;
using rota::ElementId;
using rota::IndependenceTracker;
using rota::Instance;
using rota::Matroid;

namespace {

std::vector<ElementId> mask_to_set(std::uint32_t mask, std::size_t ground) {
  std::vector<ElementId> s;
  for (std::size_t e = 0; e < ground; ++e) {
    if (mask & (1u << e)) s.push_back(static_cast<ElementId>(e));
  }
  return s;
}

// Rank of every subset, indexed by bitmask.
std::vector<std::size_t> rank_table(const Matroid& m) {
  const std::size_t ground = m.ground_size();
  std::vector<std::size_t> table(std::size_t{1} << ground);
  for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = m.rank_of(mask_to_set(mask, ground));
  }
  return table;
}

int popcount(std::uint32_t x) { return __builtin_popcount(x); }

// Exhaustive check of the rank axioms: bounds, unit increase, monotonicity,
// and submodularity over all subset pairs.
void check_rank_axioms(const Matroid& m) {
  REQUIRE(m.ground_size() <= 16);
  const auto table = rank_table(m);
  const std::uint32_t full = static_cast<std::uint32_t>(table.size() - 1);
  CHECK(table[0] == 0);
  CHECK(table[full] == m.rank());
  for (std::uint32_t a = 0; a <= full; ++a) {
    CHECK(table[a] <= static_cast<std::size_t>(popcount(a)));
    for (std::size_t e = 0; e < m.ground_size(); ++e) {
      const std::uint32_t bit = 1u << e;
      if (a & bit) continue;
      const std::size_t grown = table[a | bit];
      CHECK(grown >= table[a]);
      CHECK(grown <= table[a] + 1);
    }
  }
  for (std::uint32_t a = 0; a <= full; ++a) {
    for (std::uint32_t b = 0; b <= full; ++b) {
      CHECK(table[a | b] + table[a & b] <= table[a] + table[b]);
    }
  }
}

}  // namespace

TEST_CASE("frozen rank examples") {
  const Matroid u = Matroid::uniform(3, 5);
  const std::vector<ElementId> s{0, 1, 2, 3};
  CHECK(u.rank_of(s) == 3);
  CHECK(u.rank() == 3);
  CHECK(u.ground_size() == 5);

  // Columns (1,0), (0,1), (1,1) over GF(2): any two are a basis.
  const Matroid lin = Matroid::linear(2, 2, {1, 0, 1, 0, 1, 1});
  CHECK(lin.rank() == 2);
  CHECK(lin.ground_size() == 3);
  CHECK(lin.rank_of(std::vector<ElementId>{0, 1}) == 2);
  CHECK(lin.rank_of(std::vector<ElementId>{0, 2}) == 2);
  CHECK(lin.rank_of(std::vector<ElementId>{1, 2}) == 2);
  CHECK(lin.rank_of(std::vector<ElementId>{0, 1, 2}) == 2);
  CHECK_FALSE(lin.is_independent(std::vector<ElementId>{0, 1, 2}));

  const Matroid tri = Matroid::graphic(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(tri.rank() == 2);
  CHECK(tri.rank_of(std::vector<ElementId>{0, 1, 2}) == 2);
  CHECK(tri.is_independent(std::vector<ElementId>{0, 1}));

  const Matroid part = Matroid::partition({0, 0, 1, 1, 2}, {1, 2, 1});
  CHECK(part.rank() == 4);
  CHECK(part.rank_of(std::vector<ElementId>{0, 1}) == 1);
  CHECK(part.is_independent(std::vector<ElementId>{0, 2, 3, 4}));
}

TEST_CASE("duplicates and loops count once") {
  const Matroid u = Matroid::uniform(2, 4);
  CHECK(u.rank_of(std::vector<ElementId>{2, 2, 2}) == 1);

  // Edge 0 is a loop, edges 1 and 2 are parallel.
  const Matroid g = Matroid::graphic(3, {{1, 1}, {0, 1}, {0, 1}, {1, 2}});
  CHECK(g.rank_of(std::vector<ElementId>{0}) == 0);
  CHECK(g.rank_of(std::vector<ElementId>{1, 2}) == 1);
  CHECK(g.rank() == 2);

  // Zero column over GF(3) is a loop.
  const Matroid lin = Matroid::linear(3, 2, {0, 1, 0, 2});
  CHECK(lin.rank_of(std::vector<ElementId>{0}) == 0);
  CHECK(lin.rank() == 1);
}

TEST_CASE("rank axioms hold exhaustively for each representation") {
  SUBCASE("linear over GF(3)") {
    rota::Rng rng(11);
    std::vector<std::uint32_t> entries(3 * 8);
    for (auto& v : entries) v = static_cast<std::uint32_t>(rng.below(3));
    check_rank_axioms(Matroid::linear(3, 3, std::move(entries)));
  }
  SUBCASE("graphic with loop and parallel edges") {
    check_rank_axioms(Matroid::graphic(
        5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {1, 1}, {0, 1}}));
  }
  SUBCASE("uniform") { check_rank_axioms(Matroid::uniform(4, 9)); }
  SUBCASE("partition with a zero-capacity class") {
    check_rank_axioms(Matroid::partition({0, 1, 2, 0, 1, 2, 0, 3, 3}, {1, 2, 1, 0}));
  }
}

TEST_CASE("uniform matroid equals a generic linear one") {
  // Vandermonde columns (1, x) with distinct x over GF(7): any 2 of the 4
  // columns are independent, which is exactly U(2, 4).
  const Matroid u = Matroid::uniform(2, 4);
  const Matroid v = Matroid::linear(7, 2, {1, 1, 1, 1, 1, 2, 3, 4});
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    const auto s = mask_to_set(mask, 4);
    CHECK(u.rank_of(s) == v.rank_of(s));
  }
}

TEST_CASE("invalid ids and invalid representations are rejected") {
  const Matroid u = Matroid::uniform(2, 4);
  CHECK_THROWS_AS(u.rank_of(std::vector<ElementId>{4}), std::invalid_argument);
  CHECK_THROWS_AS(Matroid::linear(4, 2, {1, 0, 0, 1}), std::invalid_argument);  // p not prime
  CHECK_THROWS_AS(Matroid::linear(3, 2, {1, 0, 0, 3}), std::invalid_argument);  // entry >= p
  CHECK_THROWS_AS(Matroid::linear(2, 0, {}), std::invalid_argument);            // no rows
  CHECK_THROWS_AS(Matroid::graphic(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Matroid::uniform(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(Matroid::partition({0, 3}, {1, 1}), std::invalid_argument);
}

TEST_CASE("greedy basis completion") {
  const Matroid u = Matroid::uniform(2, 4);
  const std::vector<ElementId> ind{3};
  const std::vector<ElementId> allowed{0, 1, 2};
  CHECK(u.extend_to_basis(ind, allowed) == std::vector<ElementId>({0, 3}));

  // Dependent seed: rejected with the seed as witness.
  const Matroid lin = Matroid::linear(2, 2, {1, 0, 1, 0, 1, 1});
  const std::vector<ElementId> dep{0, 1, 2};
  CHECK_THROWS_AS(lin.extend_to_basis(dep, std::vector<ElementId>{}), ContractError);
  try {
    lin.extend_to_basis(dep, std::vector<ElementId>{});
    FAIL("expected ContractError");
  } catch (const ContractError& e) {
    CHECK(e.witness() == dep);
  }

  // Non-spanning pool: rejected.
  const Matroid tri = Matroid::graphic(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(tri.extend_to_basis(std::vector<ElementId>{}, std::vector<ElementId>{0}),
                  ContractError);

  // The completion prefers small ids but always keeps the seed.
  const Matroid g = Matroid::graphic(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const std::vector<ElementId> seed{2};
  const std::vector<ElementId> pool{0, 1, 3};
  CHECK(g.extend_to_basis(seed, pool) == std::vector<ElementId>({0, 1, 2}));
}

TEST_CASE("incremental tracker agrees with the rank oracle") {
  rota::Rng rng(77);
  std::vector<Matroid> matroids;
  {
    std::vector<std::uint32_t> entries(3 * 9);
    for (auto& v : entries) v = static_cast<std::uint32_t>(rng.below(5));
    matroids.push_back(Matroid::linear(5, 3, std::move(entries)));
  }
  matroids.push_back(
      Matroid::graphic(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {1, 3}}));
  matroids.push_back(Matroid::uniform(3, 8));
  matroids.push_back(Matroid::partition({0, 0, 0, 1, 1, 2, 2, 2}, {2, 1, 2}));

  for (const Matroid& m : matroids) {
    for (int round = 0; round < 25; ++round) {
      std::vector<ElementId> order(m.ground_size());
      std::iota(order.begin(), order.end(), 0u);
      rng.shuffle(order);

      IndependenceTracker tracker(m);
      std::vector<ElementId> kept;
      for (ElementId e : order) {
        std::vector<ElementId> probe = kept;
        probe.push_back(e);
        const bool grows = m.rank_of(probe) > m.rank_of(kept);
        CHECK(tracker.try_add(e) == grows);
        if (grows) kept = std::move(probe);
      }
      CHECK(tracker.size() == m.rank());
      CHECK(tracker.members() == kept);
    }
  }
}

TEST_CASE("bundled instances validate") {
  const Instance ui = rota::uniform_instance(3);
  CHECK(ui.n() == 3);
  CHECK(ui.matroid.ground_size() == 9);
  CHECK(ui.bases[0] == std::vector<ElementId>({0, 1, 2}));
  CHECK(ui.bases[2] == std::vector<ElementId>({6, 7, 8}));
  ui.validate();

  const Instance ri = rota::random_instance(4, 5, 123);
  CHECK(ri.n() == 4);
  CHECK(ri.matroid.kind() == rota::MatroidKind::kLinear);
  CHECK(ri.matroid.ground_size() == 16);
  ri.validate();

  // Same seed reproduces the instance bit for bit; another seed does not.
  const Instance again = rota::random_instance(4, 5, 123);
  CHECK(again.matroid.linear_rep().entries == ri.matroid.linear_rep().entries);
  const Instance other = rota::random_instance(4, 5, 124);
  CHECK(other.matroid.linear_rep().entries != ri.matroid.linear_rep().entries);
}

TEST_CASE("instance validation rejects broken inputs") {
  Instance good = rota::uniform_instance(2);
  good.validate();

  Instance dup = good;
  dup.bases[1][0] = dup.bases[0][0];  // breaks disjointness
  CHECK_THROWS_AS(dup.validate(), std::invalid_argument);

  Instance shrunk = good;
  shrunk.bases[0].pop_back();  // wrong basis size
  CHECK_THROWS_AS(shrunk.validate(), std::invalid_argument);

  Instance missing = good;
  missing.bases.pop_back();  // wrong basis count
  CHECK_THROWS_AS(missing.validate(), std::invalid_argument);

  Instance bad_id = good;
  bad_id.bases[0][0] = 99;  // outside the ground set
  CHECK_THROWS_AS(bad_id.validate(), std::invalid_argument);
}

TEST_CASE("tracker and extension reject elements already taken") {
  // Re-offering a member must fail for every kind, including the counting
  // kinds (uniform, partition) that do not inspect element identity.
  const Matroid kinds[] = {
      Matroid::linear(3, 2, {1, 0, 1, 0, 1, 1}),
      Matroid::graphic(3, {{0, 1}, {1, 2}, {0, 2}}),
      Matroid::uniform(2, 3),
      Matroid::partition({0, 1, 1}, {1, 2}),
  };
  for (const Matroid& m : kinds) {
    rota::IndependenceTracker t(m);
    CHECK(t.try_add(0));
    CHECK_FALSE(t.try_add(0));
    CHECK(t.try_add(1));
    CHECK_FALSE(t.try_add(1));
    CHECK_FALSE(t.try_add(0));
    CHECK(t.members() == std::vector<rota::ElementId>{0, 1});
  }

  // A pool that overlaps the seed completes to a genuine basis, never a
  // multiset of the seed.
  const Matroid free6 = Matroid::uniform(6, 6);
  const std::vector<rota::ElementId> seed{1, 4};
  const std::vector<rota::ElementId> pool{0, 1, 2, 3, 4, 5};
  CHECK(free6.extend_to_basis(seed, pool) ==
        std::vector<rota::ElementId>{0, 1, 2, 3, 4, 5});

  const Matroid classes = Matroid::partition({0, 0, 1, 1}, {1, 1});
  CHECK(classes.extend_to_basis(std::vector<rota::ElementId>{2},
                                std::vector<rota::ElementId>{0, 1, 2, 3}) ==
        std::vector<rota::ElementId>{0, 2});
}
