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

// Layouts and generators shared by the unit tests and the acceptance run.

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "wideknap/conflict.hpp"
#include "wideknap/geometry.hpp"
#include "wideknap/model.hpp"

namespace wktest {

using namespace wideknap;

inline PlacedRect span(int x0, int y0, int x1, int y1) {
  return PlacedRect{Rect{x1 - x0, y1 - y0}, x0, y0};
}

inline Instance instance_of(Box box, const Packing& packing) {
  Instance inst;
  inst.box = box;
  for (const Placement& p : packing.placements) {
    inst.items.push_back(Item{p.id, p.placed.rect, std::nullopt});
  }
  inst.k = std::max<int>(1, static_cast<int>(packing.size()));
  return inst;
}

// Sixteen rectangles in a 70 x 20 box, ids 1..16, read off the conflict
// graph drawing.
inline Box figure_box() { return {70, 20}; }

inline Packing figure_layout() {
  const std::vector<PlacedRect> r{
      span(0, 3, 6, 9),     span(0, 9, 5, 12),    span(6, 6, 14, 15),
      span(14, 6, 20, 9),   span(14, 9, 20, 12),  span(14, 12, 20, 15),
      span(0, 15, 20, 17),  span(6, 3, 16, 6),    span(16, 2, 30, 6),
      span(20, 6, 36, 19),  span(36, 2, 50, 12),  span(36, 12, 43, 15),
      span(43, 12, 50, 15), span(50, 9, 60, 17),  span(50, 4, 60, 9),
      span(60, 6, 70, 13)};
  Packing p;
  for (std::size_t i = 0; i < r.size(); ++i) {
    p.placements.push_back({static_cast<int>(i) + 1, r[i]});
  }
  return p;
}

using IdEdge = std::pair<int, int>;  // ids; kSourceId / kSinkId for the sides

inline IdEdge normalized(int a, int b) { return {std::max(a, b), std::min(a, b)}; }

// The 31 edges drawn in the figure.
inline std::set<IdEdge> figure_edges() {
  const int s = kSourceId;
  const int t = kSinkId;
  const std::vector<IdEdge> raw{
      {s, 1},   {s, 9},   {s, 10},  {s, 2},   {s, 7},   {s, 3},   {2, 3},   {1, 3},
      {1, 8},   {3, 6},   {3, 5},   {3, 4},   {8, 9},   {7, 10},  {6, 10},  {5, 10},
      {4, 10},  {10, 12}, {10, 11}, {9, 11},  {10, 14}, {12, 13}, {13, 14}, {11, 15},
      {14, 16}, {15, 16}, {16, t},  {15, t},  {11, t},  {10, t},  {11, 14}};
  std::set<IdEdge> out;
  for (auto [a, b] : raw) out.insert(normalized(a, b));
  return out;
}

inline std::set<IdEdge> id_edges(const ConflictGraph& g) {
  std::set<IdEdge> out;
  for (auto [u, v] : g.edges()) out.insert(normalized(g.item_id(u), g.item_id(v)));
  return out;
}

// Five-rectangle path in a 60 x 20 box from the polyline drawing, with
// the witness levels s-R1, R1-R2, ..., R5-t in doubled units.
struct PolylineFigure {
  Box box{60, 20};
  std::vector<PlacedRect> rects{span(5, 6, 11, 14), span(20, 6, 30, 18), span(30, 2, 38, 12),
                                span(38, 9, 46, 16), span(46, 6, 54, 14)};
  std::vector<int> witness_y2{20, 20, 14, 20, 22, 20};
};

inline std::vector<Point> doubled(std::vector<Point> pts) {
  for (Point& p : pts) {
    p.x *= 2;
    p.y *= 2;
  }
  return pts;
}

// Random graph whose s-t paths all have at least `layers` internal vertices:
// inner vertices sit in layers, edges join a layer to itself or the next,
// s touches only the first layer and t only the last.
struct LayeredGraph {
  UndirectedGraph graph;
  int s = 0;
  int t = 0;
};

inline LayeredGraph layered_graph(std::mt19937_64& rng, int layers, int max_width,
                                  int edge_percent) {
  std::vector<std::vector<int>> layer(layers);
  int n = 0;
  for (auto& l : layer) {
    const int w = 1 + static_cast<int>(rng() % max_width);
    for (int i = 0; i < w; ++i) l.push_back(n++);
  }
  LayeredGraph out;
  out.s = n;
  out.t = n + 1;
  out.graph = UndirectedGraph(n + 2);
  auto maybe = [&](int u, int v) {
    if (static_cast<int>(rng() % 100) < edge_percent) out.graph.add_edge(u, v);
  };
  for (int v : layer.front()) maybe(out.s, v);
  for (int v : layer.back()) maybe(out.t, v);
  for (int i = 0; i < layers; ++i) {
    for (std::size_t a = 0; a < layer[i].size(); ++a) {
      for (std::size_t b = a + 1; b < layer[i].size(); ++b) maybe(layer[i][a], layer[i][b]);
      if (i + 1 < layers) {
        for (int v : layer[i + 1]) maybe(layer[i][a], v);
      }
    }
  }
  return out;
}

// Fewest internal vertices on an s-t path, or -1 when none exists.
inline int shortest_internal(const UndirectedGraph& g, int s, int t,
                             const std::vector<char>& removed = {}) {
  std::vector<int> dist(g.size(), -1);
  std::deque<int> q{s};
  dist[s] = 0;
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    for (int v : g.adj[u]) {
      if (dist[v] >= 0 || (!removed.empty() && removed[v])) continue;
      dist[v] = dist[u] + 1;
      q.push_back(v);
    }
  }
  return dist[t] < 0 ? -1 : dist[t] - 1;
}

// Smallest s-t separator by trying vertex subsets in increasing size.
inline int brute_force_separator_size(const UndirectedGraph& g, int s, int t) {
  std::vector<int> inner;
  for (int v = 0; v < g.size(); ++v) {
    if (v != s && v != t) inner.push_back(v);
  }
  const int m = static_cast<int>(inner.size());
  for (int size = 0; size <= m; ++size) {
    std::vector<char> pick(m, 0);
    std::fill(pick.end() - size, pick.end(), 1);
    do {
      std::vector<char> removed(g.size(), 0);
      for (int i = 0; i < m; ++i) removed[inner[i]] = pick[i];
      if (shortest_internal(g, s, t, removed) < 0) return size;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return -1;
}

}  // namespace wktest
