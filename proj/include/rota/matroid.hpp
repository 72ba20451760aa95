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
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rota {

// Dense index into a matroid's ground set.
using ElementId = std::uint32_t;

// Precondition violation with the offending element set attached.
class ContractError : public std::logic_error {
 public:
  ContractError(const std::string& what, std::vector<ElementId> witness)
      : std::logic_error(what), witness_(std::move(witness)) {}

  const std::vector<ElementId>& witness() const { return witness_; }

 private:
  std::vector<ElementId> witness_;
};

enum class MatroidKind { kLinear, kGraphic, kUniform, kPartition };

// Columns of a matrix over GF(p), stored row-major; element i is column i.
struct LinearRep {
  std::uint32_t p = 2;
  std::size_t rows = 0;
  std::vector<std::uint32_t> entries;  // rows * cols, entries[r * cols + c]

  std::size_t cols() const { return rows == 0 ? 0 : entries.size() / rows; }
};

// Edges of a multigraph; element i is edge i. Loops (u == v) are rank-zero.
struct GraphicRep {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

struct UniformRep {
  std::size_t rank = 0;
  std::size_t ground = 0;
};

// Element e belongs to class class_of[e]; a set is independent when no class
// holds more elements than its capacity.
struct PartitionRep {
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint32_t> capacity;
};

// Immutable matroid over a dense integer ground set, exposing an exact rank
// oracle. Construction validates the representation; instances are safe to
// share across threads.
class Matroid {
 public:
  static Matroid linear(std::uint32_t p, std::size_t rows, std::vector<std::uint32_t> entries);
  static Matroid graphic(std::size_t vertex_count,
                         std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);
  static Matroid uniform(std::size_t rank, std::size_t ground);
  static Matroid partition(std::vector<std::uint32_t> class_of,
                           std::vector<std::uint32_t> capacity);

  MatroidKind kind() const { return static_cast<MatroidKind>(rep_.index()); }
  std::size_t ground_size() const { return ground_; }
  // Rank of the full ground set, fixed at construction.
  std::size_t rank() const { return full_rank_; }

  // Matroid rank of the given element set. Duplicate ids are tolerated and
  // counted once; invalid ids are input errors.
  std::size_t rank_of(std::span<const ElementId> elems) const;

  bool is_independent(std::span<const ElementId> elems) const {
    return rank_of(elems) == elems.size();
  }

  // Greedy completion of `independent` to a basis inside independent+allowed,
  // scanning `allowed` in ascending element order. Requires `independent` to
  // be independent and independent+allowed to be spanning.
  std::vector<ElementId> extend_to_basis(std::span<const ElementId> independent,
                                         std::span<const ElementId> allowed) const;

  const LinearRep& linear_rep() const { return std::get<LinearRep>(rep_); }
  const GraphicRep& graphic_rep() const { return std::get<GraphicRep>(rep_); }
  const UniformRep& uniform_rep() const { return std::get<UniformRep>(rep_); }
  const PartitionRep& partition_rep() const { return std::get<PartitionRep>(rep_); }

 private:
  Matroid(std::variant<LinearRep, GraphicRep, UniformRep, PartitionRep> rep, std::size_t ground);

  void check_ids(std::span<const ElementId> elems) const;

  std::variant<LinearRep, GraphicRep, UniformRep, PartitionRep> rep_;
  std::size_t ground_ = 0;
  std::size_t full_rank_ = 0;
};

// Incrementally grown independent set: try_add accepts an element exactly when
// it keeps the set independent; an element already in the set is rejected. One
// pass over a ground set in ascending order reproduces the greedy basis
// completion.
class IndependenceTracker {
 public:
  explicit IndependenceTracker(const Matroid& m);

  bool try_add(ElementId e);
  std::size_t size() const { return members_.size(); }
  const std::vector<ElementId>& members() const { return members_; }

 private:
  struct LinearState {
    // Reduced columns with their pivot rows; new columns are eliminated
    // against these before testing for a surviving nonzero entry.
    std::vector<std::vector<std::uint32_t>> reduced;
    std::vector<std::size_t> pivot_row;
  };
  struct GraphicState {
    std::vector<std::uint32_t> parent;  // union-find over vertices
    std::uint32_t find(std::uint32_t v);
  };
  struct PartitionState {
    std::vector<std::uint32_t> used;  // per-class count
  };

  const Matroid& matroid_;
  std::vector<ElementId> members_;
  std::vector<char> in_set_;  // per-element membership, so duplicates are rejected
  LinearState linear_;
  GraphicState graphic_;
  PartitionState partition_;
};

}  // namespace rota
