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
#include <utility>
#include <vector>

#include "rota/matroid.hpp"

namespace rota {

// A family S_1..S_k of element sets, optionally tagged with the basis index
// each set was sampled from.
struct SubsetFamily {
  std::vector<std::vector<ElementId>> sets;
  std::size_t alpha = 0;  // intended sample size
  std::optional<std::vector<std::uint32_t>> origin;
};

// One element per family class; together they form a basis when valid.
struct Transversal {
  std::vector<std::pair<std::uint32_t, ElementId>> assignment;
};

// Outcome of the Hall-style rank condition: either every index subset X has
// r(union of S_i over X) >= |X|, or a concrete violating X.
struct RadoReport {
  bool satisfied = false;
  std::optional<std::vector<std::uint32_t>> violator;
};

// Exhaustive check of the rank condition over all non-empty index subsets,
// reporting the first violator in size-then-lexicographic order. Guarded to
// at most 22 sets; use find_transversal_basis beyond that.
RadoReport rado_check_bruteforce(const Matroid& m, const SubsetFamily& f);

// Maximum-cardinality set independent in both matroids, by exchange-graph
// augmentation with shortest paths and lexicographic tie-breaking. The result
// is deterministic; returned sorted ascending.
std::vector<ElementId> matroid_intersection(const Matroid& m1, const Matroid& m2);

// Transversal basis of the family, when one exists: one element from each
// S_i, all distinct, forming a basis of m. Requires pairwise-disjoint sets
// and exactly rank(m) of them. Realized as matroid intersection against the
// capacity-1 partition matroid of the family.
std::optional<Transversal> find_transversal_basis(const Matroid& m, const SubsetFamily& f);

// Certificate check; false on any malformed input, never throws.
bool verify_transversal(const Matroid& m, const SubsetFamily& f, const Transversal& t);

}  // namespace rota
