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

#include <utility>
#include <vector>

#include "dmat/gf2.hpp"
#include "dmat/polynomial.hpp"
#include "dmat/set_system.hpp"

namespace dmat {

/// Loopless undirected graph on vertices 1..n. Row v is the neighbor mask.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0);

  /// Throws on loops, repeated edges or out-of-range endpoints.
  static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static SimpleGraph complete(int n);

  int order() const { return static_cast<int>(rows_.size()); }
  Mask neighbors(int v) const { return rows_[v - 1]; }
  bool adjacent(int a, int b) const { return has_element(rows_[a - 1], b); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  void toggle_edge(int a, int b);

  /// Removes v and relabels the vertices above it down by one.
  SimpleGraph without_vertex(int v) const;
  Gf2SymMatrix adjacency() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
  friend auto operator<=>(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_vertex(int v) const;

  std::vector<Mask> rows_;
};

SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2);

/// Lexicographically smallest relabeled adjacency over all n! relabelings.
/// Throws CapacityError above 8 vertices.
SimpleGraph canonical_graph(const SimpleGraph& g);

/// Pivot on the edge ab: toggles every pair of vertices lying in two
/// different classes among N(a)\N(b), N(b)\N(a) and N(a)&N(b).
SimpleGraph pivot(const SimpleGraph& g, int a, int b);

/// Graph interlace polynomial: x^n without edges, otherwise
/// q(G\a) + q(G^ab \ b) on the lexicographically first edge ab.
/// Memoized on the canonical form for graphs of up to 8 vertices.
IntPolynomial graph_interlace(const SimpleGraph& g);

/// Same recursion, but the first step uses the given edge.
IntPolynomial graph_interlace_via(const SimpleGraph& g, int a, int b);

DeltaMatroid graph_delta_matroid(const SimpleGraph& g);

struct GraphMoves {
  SimpleGraph exchanged;  // adjacency of a and b switched
  SimpleGraph slid;       // a's adjacency switched toward every neighbor of b
  SimpleGraph both;
};

GraphMoves graph_moves(const SimpleGraph& g, int a, int b);

}  // namespace dmat
