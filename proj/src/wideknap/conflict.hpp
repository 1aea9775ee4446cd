// Copyright 2026 The wideknap Authors
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

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wideknap/geometry.hpp"
#include "wideknap/model.hpp"

namespace wideknap {

// Horizontal visibility segment [x_from, x_to] x {y2 / 2}; y2 is on the
// doubled grid and always odd. x_from is on the right side of the left
// rectangle, x_to on the left side of the right one. A zero-length segment
// means the rectangles touch.
struct Witness {
  int x_from = 0;
  int x_to = 0;
  int y2 = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

// a and b see each other if some horizontal segment joins the interior of
// the right side of one to the interior of the left side of the other
// without meeting any rectangle of others. The lowest half-integer level
// that works is returned.
std::optional<Witness> sees(const PlacedRect& a, const PlacedRect& b,
                            std::span<const PlacedRect> others);

struct UndirectedGraph {
  std::vector<std::vector<int>> adj;

  explicit UndirectedGraph(int n = 0) : adj(n) {}
  int size() const { return static_cast<int>(adj.size()); }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
};

// A graph whose vertices stand for rectangles; s and t are the box sides.
struct LabeledGraph {
  UndirectedGraph graph;
  std::vector<int> item_ids;  // per vertex, -1 for s and -2 for t
  int s = -1;
  int t = -1;

  int vertex_of(int item_id) const;
};

inline constexpr int kSourceId = -1;
inline constexpr int kSinkId = -2;

class ConflictGraph {
 public:
  // Vertices 0..n-1 follow the packing order; then s (left side, the
  // rectangle [-1, 0] x [0, n2]) and t (right side, [n1, n1 + 1] x [0, n2]).
  static ConflictGraph build(const Packing& packing, Box box);

  int vertex_count() const { return static_cast<int>(rects_.size()); }
  int source() const { return vertex_count() - 2; }
  int sink() const { return vertex_count() - 1; }
  const std::vector<int>& neighbors(int v) const { return graph_.adj[v]; }
  bool adjacent(int u, int v) const { return graph_.has_edge(u, v); }
  // Oriented left to right whatever the argument order.
  const Witness& witness(int u, int v) const;
  int item_id(int v) const;
  int vertex_of(int item_id) const;
  const PlacedRect& rect(int v) const { return rects_[v]; }
  const Packing& packing() const { return packing_; }
  Box box() const { return box_; }
  const UndirectedGraph& graph() const { return graph_; }
  std::vector<std::pair<int, int>> edges() const;

  // Induced subgraph on the given vertices; s and t are always kept.
  LabeledGraph induced(const std::vector<int>& vertices) const;
  LabeledGraph labeled() const;

 private:
  Packing packing_;
  Box box_;
  std::vector<PlacedRect> rects_;
  UndirectedGraph graph_;
  std::vector<std::vector<std::pair<int, Witness>>> witnesses_;
};

inline ConflictGraph build_conflict_graph(const Packing& packing, Box box) {
  return ConflictGraph::build(packing, box);
}

// Minimum set of vertices other than s and t meeting every s-t path, by
// unit vertex capacity max-flow. Throws if s and t are adjacent.
std::vector<int> min_vertex_separator(const UndirectedGraph& g, int s, int t);

// Vertex sequence from s to t.
using Path = std::vector<int>;

// Greedy shortest-first inclusion-wise maximal family of internally
// disjoint s-t paths with at most max_internal internal vertices, each
// stepping from a rectangle to one lying to its right. Ordered
// bottom to top by the height of the middle polyline at x = n1 / 2. Throws
// InvariantViolation when the middle polylines are not pairwise ordered.
std::vector<Path> short_disjoint_path_family(const ConflictGraph& g,
                                             int max_internal);

// Graphviz rendering with witness levels as edge labels.
std::string to_dot(const ConflictGraph& g);

}  // namespace wideknap
