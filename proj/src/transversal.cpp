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

#include "rota/transversal.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <memory>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>

#include "rota/modular.hpp"

namespace rota {

namespace {

// Answers, for a fixed common independent set J, which elements extend J in
// one matroid and what the fundamental circuit of a non-extending element is.
// The circuit is the unique minimal dependent subset of J + x; its members are
// exactly the y for which J - y + x stays independent.
class ExchangeOracle {
 public:
  ExchangeOracle(const Matroid& m, const std::vector<ElementId>& active)
      : matroid_(m), active_(active) {}

  virtual ~ExchangeOracle() = default;

  // Rebuild internal state for the current common independent set J.
  virtual void reset(const std::vector<ElementId>& j_list) = 0;
  virtual bool addable(ElementId x) const = 0;
  // Members of the fundamental circuit of x inside J (x itself excluded).
  virtual void circuit(ElementId x, std::vector<ElementId>& out) const = 0;

 protected:
  const Matroid& matroid_;
  const std::vector<ElementId>& active_;
};

class LinearExchangeOracle final : public ExchangeOracle {
 public:
  LinearExchangeOracle(const Matroid& m, const std::vector<ElementId>& active)
      : ExchangeOracle(m, active) {
    const LinearRep& rep = m.linear_rep();
    rows_ = rep.rows;
    col_of_.assign(m.ground_size(), std::numeric_limits<std::size_t>::max());
    for (std::size_t c = 0; c < active.size(); ++c) col_of_[active[c]] = c;
  }

  void reset(const std::vector<ElementId>& j_list) override {
    const LinearRep& rep = matroid_.linear_rep();
    const std::uint64_t p = rep.p;
    const std::size_t total = rep.cols();
    const std::size_t width = active_.size();
    work_.assign(rows_ * width, 0);
    for (std::size_t c = 0; c < width; ++c) {
      for (std::size_t r = 0; r < rows_; ++r) {
        work_[r * width + c] = rep.entries[r * total + active_[c]];
      }
    }
    // Gauss-Jordan with the J columns as pivots: afterwards each J column is
    // a distinct unit vector and every other column reads off its expansion
    // over J at the pivot rows.
    pivot_row_of_j_.assign(j_list.size(), 0);
    row_owner_.assign(rows_, std::numeric_limits<std::size_t>::max());
    std::vector<char> row_used(rows_, 0);
    for (std::size_t ji = 0; ji < j_list.size(); ++ji) {
      const std::size_t c = col_of_[j_list[ji]];
      std::size_t pivot = rows_;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (!row_used[r] && work_[r * width + c] != 0) {
          pivot = r;
          break;
        }
      }
      assert(pivot != rows_);  // J is independent
      row_used[pivot] = 1;
      row_owner_[pivot] = ji;
      pivot_row_of_j_[ji] = pivot;
      const std::uint64_t inv = mod_inverse(work_[pivot * width + c], rep.p);
      for (std::size_t j = 0; j < width; ++j) {
        work_[pivot * width + j] =
            static_cast<std::uint32_t>(work_[pivot * width + j] * inv % p);
      }
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == pivot) continue;
        const std::uint64_t head = work_[r * width + c];
        if (head == 0) continue;
        for (std::size_t j = 0; j < width; ++j) {
          const std::uint64_t sub = head * work_[pivot * width + j] % p;
          std::uint64_t v = work_[r * width + j] + p - sub;
          if (v >= p) v -= p;
          work_[r * width + j] = static_cast<std::uint32_t>(v);
        }
      }
    }
    j_list_ = &j_list;
    free_row_nonzero_.assign(width, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (row_owner_[r] != std::numeric_limits<std::size_t>::max()) continue;
      for (std::size_t c = 0; c < width; ++c) {
        if (work_[r * width + c] != 0) free_row_nonzero_[c] = 1;
      }
    }
  }

  bool addable(ElementId x) const override {
    return free_row_nonzero_[col_of_[x]] != 0;
  }

  void circuit(ElementId x, std::vector<ElementId>& out) const override {
    const std::size_t width = active_.size();
    const std::size_t c = col_of_[x];
    for (std::size_t ji = 0; ji < j_list_->size(); ++ji) {
      if (work_[pivot_row_of_j_[ji] * width + c] != 0) {
        out.push_back((*j_list_)[ji]);
      }
    }
  }

 private:
  std::size_t rows_ = 0;
  std::vector<std::size_t> col_of_;
  std::vector<std::uint32_t> work_;
  std::vector<std::size_t> pivot_row_of_j_;
  std::vector<std::size_t> row_owner_;
  std::vector<char> free_row_nonzero_;
  const std::vector<ElementId>* j_list_ = nullptr;
};

class GraphicExchangeOracle final : public ExchangeOracle {
 public:
  using ExchangeOracle::ExchangeOracle;

  void reset(const std::vector<ElementId>& j_list) override {
    const GraphicRep& rep = matroid_.graphic_rep();
    adj_.assign(rep.vertex_count, {});
    for (ElementId e : j_list) {
      const auto& [u, v] = rep.edges[e];
      adj_[u].push_back({v, e});
      adj_[v].push_back({u, e});
    }
    comp_.assign(rep.vertex_count, std::numeric_limits<std::uint32_t>::max());
    std::uint32_t c = 0;
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < rep.vertex_count; ++s) {
      if (comp_[s] != std::numeric_limits<std::uint32_t>::max()) continue;
      stack.push_back(s);
      comp_[s] = c;
      while (!stack.empty()) {
        const std::uint32_t v = stack.back();
        stack.pop_back();
        for (const auto& [w, e] : adj_[v]) {
          if (comp_[w] == std::numeric_limits<std::uint32_t>::max()) {
            comp_[w] = c;
            stack.push_back(w);
          }
        }
      }
      ++c;
    }
  }

  bool addable(ElementId x) const override {
    const auto& [u, v] = matroid_.graphic_rep().edges[x];
    return u != v && comp_[u] != comp_[v];
  }

  void circuit(ElementId x, std::vector<ElementId>& out) const override {
    const auto& [u, v] = matroid_.graphic_rep().edges[x];
    if (u == v) return;  // loop: circuit is {x} alone
    // Tree path u -> v in the J-forest; BFS with parent-edge tracking.
    std::vector<std::uint32_t> parent_vertex(adj_.size(), std::numeric_limits<std::uint32_t>::max());
    std::vector<ElementId> parent_edge(adj_.size(), 0);
    std::queue<std::uint32_t> bfs;
    bfs.push(u);
    parent_vertex[u] = u;
    while (!bfs.empty()) {
      const std::uint32_t w = bfs.front();
      bfs.pop();
      if (w == v) break;
      for (const auto& [next, e] : adj_[w]) {
        if (parent_vertex[next] == std::numeric_limits<std::uint32_t>::max()) {
          parent_vertex[next] = w;
          parent_edge[next] = e;
          bfs.push(next);
        }
      }
    }
    assert(parent_vertex[v] != std::numeric_limits<std::uint32_t>::max());
    for (std::uint32_t w = v; w != u; w = parent_vertex[w]) {
      out.push_back(parent_edge[w]);
    }
    std::sort(out.begin(), out.end());
  }

 private:
  std::vector<std::vector<std::pair<std::uint32_t, ElementId>>> adj_;
  std::vector<std::uint32_t> comp_;
};

class UniformExchangeOracle final : public ExchangeOracle {
 public:
  using ExchangeOracle::ExchangeOracle;

  void reset(const std::vector<ElementId>& j_list) override {
    j_list_ = &j_list;
  }

  bool addable(ElementId /*x*/) const override {
    return j_list_->size() < matroid_.uniform_rep().rank;
  }

  void circuit(ElementId /*x*/, std::vector<ElementId>& out) const override {
    // J is a full-rank independent set; J + x is the unique circuit.
    out.insert(out.end(), j_list_->begin(), j_list_->end());
  }

 private:
  const std::vector<ElementId>* j_list_ = nullptr;
};

class PartitionExchangeOracle final : public ExchangeOracle {
 public:
  using ExchangeOracle::ExchangeOracle;

  void reset(const std::vector<ElementId>& j_list) override {
    const PartitionRep& rep = matroid_.partition_rep();
    by_class_.assign(rep.capacity.size(), {});
    for (ElementId e : j_list) {
      by_class_[rep.class_of[e]].push_back(e);
    }
    for (auto& v : by_class_) std::sort(v.begin(), v.end());
  }

  bool addable(ElementId x) const override {
    const PartitionRep& rep = matroid_.partition_rep();
    const std::uint32_t c = rep.class_of[x];
    return by_class_[c].size() < rep.capacity[c];
  }

  void circuit(ElementId x, std::vector<ElementId>& out) const override {
    const PartitionRep& rep = matroid_.partition_rep();
    const std::uint32_t c = rep.class_of[x];
    if (rep.capacity[c] == 0) return;  // x is a loop
    const auto& members = by_class_[c];
    out.insert(out.end(), members.begin(), members.end());
  }

 private:
  std::vector<std::vector<ElementId>> by_class_;
};

std::unique_ptr<ExchangeOracle> make_oracle(const Matroid& m, const std::vector<ElementId>& active) {
  switch (m.kind()) {
    case MatroidKind::kLinear:
      return std::make_unique<LinearExchangeOracle>(m, active);
    case MatroidKind::kGraphic:
      return std::make_unique<GraphicExchangeOracle>(m, active);
    case MatroidKind::kUniform:
      return std::make_unique<UniformExchangeOracle>(m, active);
    case MatroidKind::kPartition:
      return std::make_unique<PartitionExchangeOracle>(m, active);
  }
  return nullptr;  // unreachable
}

}  // namespace

RadoReport rado_check_bruteforce(const Matroid& m, const SubsetFamily& f) {
  const std::size_t k = f.sets.size();
  if (k > 22) {
    throw std::invalid_argument(
        "rado_check_bruteforce: " + std::to_string(k) +
        " sets exceeds the 2^22 enumeration guard; use find_transversal_basis");
  }
  for (const auto& s : f.sets) {
    if (s.empty()) {
      throw std::invalid_argument("rado_check_bruteforce: family sets must be non-empty");
    }
  }
  // Subsets by size, then lexicographic on the sorted index sequence.
  std::vector<std::uint32_t> indices;
  std::vector<ElementId> unioned;
  std::vector<char> seen(m.ground_size(), 0);
  for (std::size_t size = 1; size <= k; ++size) {
    indices.resize(size);
    for (std::size_t i = 0; i < size; ++i) indices[i] = static_cast<std::uint32_t>(i);
    for (;;) {
      unioned.clear();
      for (std::uint32_t i : indices) {
        for (ElementId e : f.sets[i]) {
          if (!seen[e]) {
            seen[e] = 1;
            unioned.push_back(e);
          }
        }
      }
      const std::size_t r = m.rank_of(unioned);
      for (ElementId e : unioned) seen[e] = 0;
      if (r < size) {
        return RadoReport{false, indices};
      }
      // Next combination in lexicographic order.
      std::size_t pos = size;
      while (pos > 0 && indices[pos - 1] == k - size + pos - 1) --pos;
      if (pos == 0) break;
      ++indices[pos - 1];
      for (std::size_t i = pos; i < size; ++i) indices[i] = indices[i - 1] + 1;
    }
  }
  return RadoReport{true, std::nullopt};
}

std::vector<ElementId> matroid_intersection(const Matroid& m1, const Matroid& m2) {
  if (m1.ground_size() != m2.ground_size()) {
    throw std::invalid_argument("matroid_intersection: ground sizes differ (" +
                                std::to_string(m1.ground_size()) + " vs " +
                                std::to_string(m2.ground_size()) + ")");
  }
  const std::size_t ground = m1.ground_size();

  // Loops in either matroid can never join a common independent set.
  std::vector<ElementId> active;
  for (ElementId e = 0; e < ground; ++e) {
    const ElementId one[1] = {e};
    if (m1.rank_of(one) == 1 && m2.rank_of(one) == 1) active.push_back(e);
  }

  std::vector<char> in_j(ground, 0);
  std::vector<ElementId> j_list;

  // Greedy warm start: most of the final size is usually reached here, which
  // keeps the number of full augmentation rounds small.
  {
    std::optional<IndependenceTracker> t1(std::in_place, m1);
    IndependenceTracker t2(m2);
    for (ElementId e : active) {
      if (t1->try_add(e)) {
        if (t2.try_add(e)) {
          in_j[e] = 1;
          j_list.push_back(e);
        } else {
          // t1 accepted but t2 refused; rebuild t1 without e.
          t1.emplace(m1);
          for (ElementId kept : j_list) t1->try_add(kept);
        }
      }
    }
  }

  auto oracle1 = make_oracle(m1, active);
  auto oracle2 = make_oracle(m2, active);

  const std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(ground, kInf);
  std::vector<std::vector<ElementId>> out_arcs(ground);  // forward adjacency
  std::vector<ElementId> scratch;

  for (;;) {
    oracle1->reset(j_list);
    oracle2->reset(j_list);

    // Forward arcs: y -> x for y in circuit_1(x); x -> y for y in circuit_2(x).
    for (auto& v : out_arcs) v.clear();
    std::vector<ElementId> sources, sinks;
    for (ElementId x : active) {
      if (in_j[x]) continue;
      if (oracle1->addable(x)) {
        sources.push_back(x);
      } else {
        scratch.clear();
        oracle1->circuit(x, scratch);
        for (ElementId y : scratch) out_arcs[y].push_back(x);
      }
      if (oracle2->addable(x)) {
        sinks.push_back(x);
      } else {
        scratch.clear();
        oracle2->circuit(x, scratch);
        out_arcs[x] = scratch;
      }
    }
    if (sources.empty() || sinks.empty()) break;

    // Distance-to-sink by backward BFS, then a greedy forward walk picks the
    // lexicographically smallest among the shortest augmenting sequences.
    std::fill(dist.begin(), dist.end(), kInf);
    std::vector<std::vector<ElementId>> rev_arcs(ground);
    for (ElementId u : active) {
      for (ElementId v : out_arcs[u]) rev_arcs[v].push_back(u);
    }
    std::queue<ElementId> bfs;
    for (ElementId t : sinks) {
      dist[t] = 0;
      bfs.push(t);
    }
    while (!bfs.empty()) {
      const ElementId v = bfs.front();
      bfs.pop();
      for (ElementId u : rev_arcs[v]) {
        if (dist[u] == kInf) {
          dist[u] = dist[v] + 1;
          bfs.push(u);
        }
      }
    }
    ElementId start = 0;
    std::size_t best = kInf;
    for (ElementId s : sources) {
      if (dist[s] < best || (dist[s] == best && s < start)) {
        best = dist[s];
        start = s;
      }
    }
    if (best == kInf) break;  // no augmenting path

    std::vector<ElementId> path{start};
    while (dist[path.back()] > 0) {
      const ElementId cur = path.back();
      ElementId next = 0;
      bool found = false;
      for (ElementId v : out_arcs[cur]) {
        if (dist[v] + 1 == dist[cur] && (!found || v < next)) {
          next = v;
          found = true;
        }
      }
      assert(found);
      path.push_back(next);
    }

    const std::size_t before = j_list.size();
    for (ElementId v : path) {
      in_j[v] = !in_j[v];
    }
    j_list.clear();
    for (ElementId e : active) {
      if (in_j[e]) j_list.push_back(e);
    }
    assert(j_list.size() == before + 1);
    (void)before;
  }

  std::sort(j_list.begin(), j_list.end());
  return j_list;
}

std::optional<Transversal> find_transversal_basis(const Matroid& m, const SubsetFamily& f) {
  const std::size_t k = f.sets.size();
  if (k != m.rank()) {
    throw std::invalid_argument("find_transversal_basis: family size " + std::to_string(k) +
                                " must equal the matroid rank " + std::to_string(m.rank()));
  }
  // One capacity-1 class per set; everything outside the family sits in a
  // zero-capacity overflow class, which restricts the intersection to the
  // family's elements.
  const std::uint32_t overflow = static_cast<std::uint32_t>(k);
  std::vector<std::uint32_t> class_of(m.ground_size(), overflow);
  for (std::uint32_t i = 0; i < k; ++i) {
    for (ElementId e : f.sets[i]) {
      if (e >= m.ground_size()) {
        throw std::invalid_argument("find_transversal_basis: element out of range");
      }
      if (class_of[e] != overflow) {
        throw std::invalid_argument("find_transversal_basis: family sets overlap at element " +
                                    std::to_string(e));
      }
      class_of[e] = i;
    }
  }
  std::vector<std::uint32_t> capacity(k + 1, 1);
  capacity[overflow] = 0;
  Matroid classes = Matroid::partition(std::move(class_of), std::move(capacity));

  const std::vector<ElementId> common = matroid_intersection(m, classes);
  if (common.size() != k) {
    return std::nullopt;
  }
  Transversal t;
  t.assignment.resize(k);
  const PartitionRep& rep = classes.partition_rep();
  for (ElementId e : common) {
    const std::uint32_t c = rep.class_of[e];
    t.assignment[c] = {c, e};
  }
  return t;
}

bool verify_transversal(const Matroid& m, const SubsetFamily& f, const Transversal& t) {
  const std::size_t k = f.sets.size();
  if (k == 0 || k != m.rank() || t.assignment.size() != k) return false;
  std::vector<char> class_seen(k, 0);
  std::vector<ElementId> picked;
  picked.reserve(k);
  for (const auto& [cls, e] : t.assignment) {
    if (cls >= k || class_seen[cls]) return false;
    class_seen[cls] = 1;
    if (e >= m.ground_size()) return false;
    if (std::find(f.sets[cls].begin(), f.sets[cls].end(), e) == f.sets[cls].end()) return false;
    picked.push_back(e);
  }
  std::sort(picked.begin(), picked.end());
  if (std::adjacent_find(picked.begin(), picked.end()) != picked.end()) return false;
  return m.rank_of(picked) == k;
}

}  // namespace rota
