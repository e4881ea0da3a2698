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

#include "dmat/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>

#include "dmat/errors.hpp"

namespace dmat {
namespace {

constexpr int kGraphCanonicalBound = 8;

Mask drop_element(Mask m, int e) {
  const Mask low = element_bit(e) - 1;
  return (m & low) | ((m >> 1) & ~low);
}

class InterlaceMemo {
 public:
  std::optional<IntPolynomial> find(const SimpleGraph& g) {
    std::shared_lock lock(mutex_);
    if (auto it = table_.find(g); it != table_.end()) return it->second;
    return std::nullopt;
  }

  void insert(const SimpleGraph& g, const IntPolynomial& q) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(g, q);
  }

 private:
  std::shared_mutex mutex_;
  std::map<SimpleGraph, IntPolynomial> table_;
};

InterlaceMemo& memo() {
  static InterlaceMemo instance;
  return instance;
}

}  // namespace

SimpleGraph::SimpleGraph(int n) {
  if (n < 0 || n > kMaxGroundSet) {
    throw CapacityError("graph order " + std::to_string(n) + " not in 0.." + std::to_string(kMaxGroundSet));
  }
  rows_.assign(n, 0);
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  SimpleGraph g(n);
  for (auto [a, b] : edges) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (a == b) throw PreconditionError("loop at vertex " + std::to_string(a));
    if (g.adjacent(a, b)) {
      throw PreconditionError("repeated edge " + std::to_string(a) + " " + std::to_string(b));
    }
    g.toggle_edge(a, b);
  }
  return g;
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g(n);
  for (int v = 1; v <= n; ++v) g.rows_[v - 1] = full_mask(n) & ~element_bit(v);
  return g;
}

void SimpleGraph::check_vertex(int v) const {
  if (v < 1 || v > order()) {
    throw RangeError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(order()));
  }
}

int SimpleGraph::edge_count() const {
  int twice = 0;
  for (Mask r : rows_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= order(); ++a) {
    for (int b = a + 1; b <= order(); ++b) {
      if (adjacent(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

void SimpleGraph::toggle_edge(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw PreconditionError("loop at vertex " + std::to_string(a));
  rows_[a - 1] ^= element_bit(b);
  rows_[b - 1] ^= element_bit(a);
}

SimpleGraph SimpleGraph::without_vertex(int v) const {
  check_vertex(v);
  SimpleGraph out(order() - 1);
  for (int u = 1, w = 0; u <= order(); ++u) {
    if (u != v) out.rows_[w++] = drop_element(rows_[u - 1], v);
  }
  return out;
}

Gf2SymMatrix SimpleGraph::adjacency() const { return Gf2SymMatrix::from_rows(rows_); }

SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2) {
  const int n1 = g1.order();
  std::vector<std::pair<int, int>> edges = g1.edges();
  for (auto [a, b] : g2.edges()) edges.emplace_back(a + n1, b + n1);
  return SimpleGraph::from_edges(n1 + g2.order(), edges);
}

SimpleGraph canonical_graph(const SimpleGraph& g) {
  const int n = g.order();
  if (n > kGraphCanonicalBound) {
    throw CapacityError("canonical graph needs at most " + std::to_string(kGraphCanonicalBound) + " vertices");
  }
  const auto edges = g.edges();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::optional<SimpleGraph> best;
  do {
    SimpleGraph candidate(n);
    for (auto [a, b] : edges) candidate.toggle_edge(perm[a - 1], perm[b - 1]);
    if (!best || candidate < *best) best = std::move(candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::move(*best);
}

SimpleGraph pivot(const SimpleGraph& g, int a, int b) {
  if (a < 1 || a > g.order() || b < 1 || b > g.order()) throw RangeError("pivot vertex out of range");
  if (a == b || !g.adjacent(a, b)) {
    throw PreconditionError("pivot needs an edge, got " + std::to_string(a) + " " + std::to_string(b));
  }
  const Mask ends = element_bit(a) | element_bit(b);
  const Mask na = g.neighbors(a) & ~ends;
  const Mask nb = g.neighbors(b) & ~ends;
  const Mask classes[3] = {na & ~nb, nb & ~na, na & nb};
  SimpleGraph out = g;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      for (Mask ri = classes[i]; ri != 0; ri &= ri - 1) {
        for (Mask rj = classes[j]; rj != 0; rj &= rj - 1) {
          out.toggle_edge(std::countr_zero(ri) + 1, std::countr_zero(rj) + 1);
        }
      }
    }
  }
  return out;
}

IntPolynomial graph_interlace_via(const SimpleGraph& g, int a, int b) {
  return graph_interlace(g.without_vertex(a)) + graph_interlace(pivot(g, a, b).without_vertex(b));
}

IntPolynomial graph_interlace(const SimpleGraph& g) {
  const int n = g.order();
  const auto edges = g.edges();
  if (edges.empty()) return IntPolynomial::monomial(1, n);
  const bool memoize = n <= kGraphCanonicalBound;
  const SimpleGraph key = memoize ? canonical_graph(g) : SimpleGraph();
  if (memoize) {
    if (auto hit = memo().find(key)) return *hit;
  }
  IntPolynomial q = graph_interlace_via(g, edges.front().first, edges.front().second);
  if (memoize) memo().insert(key, q);
  return q;
}

DeltaMatroid graph_delta_matroid(const SimpleGraph& g) { return matrix_delta_matroid(g.adjacency()); }

GraphMoves graph_moves(const SimpleGraph& g, int a, int b) {
  if (a < 1 || a > g.order() || b < 1 || b > g.order()) throw RangeError("move vertex out of range");
  if (a == b) throw PreconditionError("graph moves need distinct vertices");
  SimpleGraph exchanged = g;
  exchanged.toggle_edge(a, b);
  auto slide = [a, b](const SimpleGraph& h) {
    SimpleGraph out = h;
    // c = a would create a loop.
    for (Mask rest = h.neighbors(b) & ~element_bit(a); rest != 0; rest &= rest - 1) {
      out.toggle_edge(a, std::countr_zero(rest) + 1);
    }
    return out;
  };
  SimpleGraph slid = slide(g);
  SimpleGraph both = slide(exchanged);
  return {std::move(exchanged), std::move(slid), std::move(both)};
}

}  // namespace dmat
