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

#include "rota/matroid.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "rota/modular.hpp"

namespace rota {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Rank over GF(p) of the selected columns, by row-echelon elimination on a
// rows x |cols| scratch matrix.
std::size_t linear_rank(const LinearRep& rep, std::span<const ElementId> cols) {
  const std::size_t rows = rep.rows;
  const std::size_t width = cols.size();
  const std::size_t total = rep.cols();
  std::vector<std::uint32_t> m(rows * width);
  for (std::size_t c = 0; c < width; ++c) {
    for (std::size_t r = 0; r < rows; ++r) {
      m[r * width + c] = rep.entries[r * total + cols[c]];
    }
  }
  const std::uint64_t p = rep.p;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < width && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * width + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < width; ++j) {
        std::swap(m[pivot * width + j], m[rank * width + j]);
      }
    }
    const std::uint64_t inv = mod_inverse(m[rank * width + c], rep.p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t head = m[r * width + c];
      if (head == 0) continue;
      const std::uint64_t factor = head * inv % p;
      for (std::size_t j = c; j < width; ++j) {
        const std::uint64_t sub = factor * m[rank * width + j] % p;
        std::uint64_t v = m[r * width + j] + p - sub;
        if (v >= p) v -= p;
        m[r * width + j] = static_cast<std::uint32_t>(v);
      }
    }
    ++rank;
  }
  return rank;
}

struct Dsu {
  std::vector<std::uint32_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  bool merge(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::size_t graphic_rank(const GraphicRep& rep, std::span<const ElementId> edges) {
  Dsu dsu(rep.vertex_count);
  std::size_t rank = 0;
  for (ElementId e : edges) {
    const auto& [u, v] = rep.edges[e];
    if (dsu.merge(u, v)) ++rank;
  }
  return rank;
}

std::size_t distinct_count(std::span<const ElementId> elems) {
  std::vector<ElementId> buf(elems.begin(), elems.end());
  std::sort(buf.begin(), buf.end());
  return static_cast<std::size_t>(std::unique(buf.begin(), buf.end()) - buf.begin());
}

std::size_t partition_rank(const PartitionRep& rep, std::span<const ElementId> elems) {
  std::vector<ElementId> buf(elems.begin(), elems.end());
  std::sort(buf.begin(), buf.end());
  buf.erase(std::unique(buf.begin(), buf.end()), buf.end());
  std::vector<std::uint32_t> count(rep.capacity.size(), 0);
  for (ElementId e : buf) ++count[rep.class_of[e]];
  std::size_t rank = 0;
  for (std::size_t c = 0; c < count.size(); ++c) {
    rank += std::min(count[c], rep.capacity[c]);
  }
  return rank;
}

}  // namespace

Matroid::Matroid(std::variant<LinearRep, GraphicRep, UniformRep, PartitionRep> rep,
                 std::size_t ground)
    : rep_(std::move(rep)), ground_(ground) {
  std::vector<ElementId> all(ground_);
  std::iota(all.begin(), all.end(), 0u);
  full_rank_ = rank_of(all);
}

Matroid Matroid::linear(std::uint32_t p, std::size_t rows, std::vector<std::uint32_t> entries) {
  if (!is_prime(p)) {
    throw std::invalid_argument("Matroid::linear: p must be prime");
  }
  if (rows == 0 || entries.size() % rows != 0) {
    throw std::invalid_argument("Matroid::linear: entries must form rows x cols");
  }
  for (std::uint32_t v : entries) {
    if (v >= p) {
      throw std::invalid_argument("Matroid::linear: entry out of [0, p)");
    }
  }
  const std::size_t ground = entries.size() / rows;
  return Matroid(LinearRep{p, rows, std::move(entries)}, ground);
}

Matroid Matroid::graphic(std::size_t vertex_count,
                         std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("Matroid::graphic: edge endpoint out of range");
    }
  }
  const std::size_t ground = edges.size();
  return Matroid(GraphicRep{vertex_count, std::move(edges)}, ground);
}

Matroid Matroid::uniform(std::size_t rank, std::size_t ground) {
  if (rank > ground) {
    throw std::invalid_argument("Matroid::uniform: rank exceeds ground size");
  }
  return Matroid(UniformRep{rank, ground}, ground);
}

Matroid Matroid::partition(std::vector<std::uint32_t> class_of,
                           std::vector<std::uint32_t> capacity) {
  for (std::uint32_t c : class_of) {
    if (c >= capacity.size()) {
      throw std::invalid_argument("Matroid::partition: class index out of range");
    }
  }
  const std::size_t ground = class_of.size();
  return Matroid(PartitionRep{std::move(class_of), std::move(capacity)}, ground);
}

void Matroid::check_ids(std::span<const ElementId> elems) const {
  for (ElementId e : elems) {
    if (e >= ground_) {
      throw std::invalid_argument("Matroid: element id " + std::to_string(e) +
                                  " outside ground set of size " + std::to_string(ground_));
    }
  }
}

std::size_t Matroid::rank_of(std::span<const ElementId> elems) const {
  check_ids(elems);
  switch (kind()) {
    case MatroidKind::kLinear:
      return linear_rank(linear_rep(), elems);
    case MatroidKind::kGraphic:
      return graphic_rank(graphic_rep(), elems);
    case MatroidKind::kUniform:
      return std::min(distinct_count(elems), uniform_rep().rank);
    case MatroidKind::kPartition:
      return partition_rank(partition_rep(), elems);
  }
  return 0;  // unreachable
}

std::vector<ElementId> Matroid::extend_to_basis(std::span<const ElementId> independent,
                                                std::span<const ElementId> allowed) const {
  check_ids(independent);
  check_ids(allowed);
  if (!is_independent(independent)) {
    throw ContractError("extend_to_basis: seed set is dependent",
                        {independent.begin(), independent.end()});
  }
  std::vector<ElementId> all(independent.begin(), independent.end());
  all.insert(all.end(), allowed.begin(), allowed.end());
  if (rank_of(all) != rank()) {
    throw ContractError("extend_to_basis: independent+allowed does not span", std::move(all));
  }

  IndependenceTracker tracker(*this);
  for (ElementId e : independent) {
    const bool ok = tracker.try_add(e);
    assert(ok);
    (void)ok;
  }
  std::vector<ElementId> scan(allowed.begin(), allowed.end());
  std::sort(scan.begin(), scan.end());
  scan.erase(std::unique(scan.begin(), scan.end()), scan.end());
  for (ElementId e : scan) {
    if (tracker.size() == rank()) break;
    tracker.try_add(e);
  }
  std::vector<ElementId> basis = tracker.members();
  std::sort(basis.begin(), basis.end());
  assert(basis.size() == rank());
  return basis;
}

std::uint32_t IndependenceTracker::GraphicState::find(std::uint32_t v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

IndependenceTracker::IndependenceTracker(const Matroid& m) : matroid_(m) {
  in_set_.assign(m.ground_size(), 0);
  switch (m.kind()) {
    case MatroidKind::kLinear:
      break;
    case MatroidKind::kGraphic:
      graphic_.parent.resize(m.graphic_rep().vertex_count);
      std::iota(graphic_.parent.begin(), graphic_.parent.end(), 0u);
      break;
    case MatroidKind::kUniform:
      break;
    case MatroidKind::kPartition:
      partition_.used.assign(m.partition_rep().capacity.size(), 0);
      break;
  }
}

bool IndependenceTracker::try_add(ElementId e) {
  if (in_set_[e]) return false;
  switch (matroid_.kind()) {
    case MatroidKind::kLinear: {
      const LinearRep& rep = matroid_.linear_rep();
      const std::uint64_t p = rep.p;
      const std::size_t total = rep.cols();
      std::vector<std::uint32_t> col(rep.rows);
      for (std::size_t r = 0; r < rep.rows; ++r) {
        col[r] = rep.entries[r * total + e];
      }
      for (std::size_t i = 0; i < linear_.reduced.size(); ++i) {
        const std::size_t pr = linear_.pivot_row[i];
        const std::uint64_t head = col[pr];
        if (head == 0) continue;
        const auto& basis_col = linear_.reduced[i];
        for (std::size_t r = 0; r < rep.rows; ++r) {
          const std::uint64_t sub = head * basis_col[r] % p;
          std::uint64_t v = col[r] + p - sub;
          if (v >= p) v -= p;
          col[r] = static_cast<std::uint32_t>(v);
        }
      }
      std::size_t pivot = rep.rows;
      for (std::size_t r = 0; r < rep.rows; ++r) {
        if (col[r] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot == rep.rows) return false;
      const std::uint64_t inv = mod_inverse(col[pivot], rep.p);
      for (std::size_t r = 0; r < rep.rows; ++r) {
        col[r] = static_cast<std::uint32_t>(col[r] * inv % p);
      }
      linear_.reduced.push_back(std::move(col));
      linear_.pivot_row.push_back(pivot);
      break;
    }
    case MatroidKind::kGraphic: {
      const auto& [u, v] = matroid_.graphic_rep().edges[e];
      const std::uint32_t ru = graphic_.find(u);
      const std::uint32_t rv = graphic_.find(v);
      if (ru == rv) return false;
      graphic_.parent[ru] = rv;
      break;
    }
    case MatroidKind::kUniform:
      if (members_.size() >= matroid_.uniform_rep().rank) return false;
      break;
    case MatroidKind::kPartition: {
      const PartitionRep& rep = matroid_.partition_rep();
      const std::uint32_t c = rep.class_of[e];
      if (partition_.used[c] >= rep.capacity[c]) return false;
      ++partition_.used[c];
      break;
    }
  }
  members_.push_back(e);
  in_set_[e] = 1;
  return true;
}

}  // namespace rota
