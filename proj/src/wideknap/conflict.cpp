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

#include "wideknap/conflict.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "wideknap/errors.hpp"
#include "wideknap/structure.hpp"

namespace wideknap {
namespace {

// Checks the half-integer levels of the common open y-range bottom up.
template <typename Blocked>
std::optional<Witness> lowest_witness(const PlacedRect& a, const PlacedRect& b,
                                      Blocked&& blocked) {
  const PlacedRect* left = &a;
  const PlacedRect* right = &b;
  if (b.right() <= a.left()) std::swap(left, right);
  if (left->right() > right->left()) return std::nullopt;
  const int y0 = std::max(a.bottom(), b.bottom());
  const int y1 = std::min(a.top(), b.top());
  for (int y = y0; y < y1; ++y) {
    const Witness w{left->right(), right->left(), 2 * y + 1};
    if (!blocked(w)) return w;
  }
  return std::nullopt;
}

// Closed rectangle meets the segment.
bool meets(const PlacedRect& r, const Witness& w) {
  return 2 * r.bottom() <= w.y2 && w.y2 <= 2 * r.top() &&
         r.left() <= w.x_to && w.x_from <= r.right();
}

}  // namespace

std::optional<Witness> sees(const PlacedRect& a, const PlacedRect& b,
                            std::span<const PlacedRect> others) {
  return lowest_witness(a, b, [&](const Witness& w) {
    for (const PlacedRect& o : others) {
      if (meets(o, w)) return true;
    }
    return false;
  });
}

void UndirectedGraph::add_edge(int u, int v) {
  if (u == v || has_edge(u, v)) return;
  adj[u].push_back(v);
  adj[v].push_back(u);
}

bool UndirectedGraph::has_edge(int u, int v) const {
  const auto& a = adj[u];
  return std::find(a.begin(), a.end(), v) != a.end();
}

int LabeledGraph::vertex_of(int item_id) const {
  for (std::size_t v = 0; v < item_ids.size(); ++v) {
    if (item_ids[v] == item_id) return static_cast<int>(v);
  }
  throw InvalidArgument("graph has no vertex for id " + std::to_string(item_id));
}

ConflictGraph ConflictGraph::build(const Packing& packing, Box box) {
  ConflictGraph g;
  g.packing_ = packing;
  g.box_ = box;
  for (const Placement& p : packing.placements) g.rects_.push_back(p.placed);
  g.rects_.push_back(PlacedRect{{1, box.n2}, -1, 0});
  g.rects_.push_back(PlacedRect{{1, box.n2}, box.n1, 0});
  const int n = g.vertex_count();
  g.graph_ = UndirectedGraph(n);
  g.witnesses_.assign(n, {});
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (u == g.source() && v == g.sink()) continue;
      auto w = lowest_witness(g.rects_[u], g.rects_[v], [&](const Witness& w) {
        for (int o = 0; o < n; ++o) {
          if (o != u && o != v && meets(g.rects_[o], w)) return true;
        }
        return false;
      });
      if (!w) continue;
      g.graph_.add_edge(u, v);
      g.witnesses_[u].push_back({v, *w});
      g.witnesses_[v].push_back({u, *w});
    }
  }
  return g;
}

const Witness& ConflictGraph::witness(int u, int v) const {
  for (const auto& [other, w] : witnesses_[u]) {
    if (other == v) return w;
  }
  throw InvalidArgument("conflict graph: vertices are not adjacent");
}

int ConflictGraph::item_id(int v) const {
  if (v == source()) return kSourceId;
  if (v == sink()) return kSinkId;
  return packing_.placements[v].id;
}

int ConflictGraph::vertex_of(int item_id) const {
  if (item_id == kSourceId) return source();
  if (item_id == kSinkId) return sink();
  for (std::size_t i = 0; i < packing_.placements.size(); ++i) {
    if (packing_.placements[i].id == item_id) return static_cast<int>(i);
  }
  throw InvalidArgument("conflict graph: unknown id " + std::to_string(item_id));
}

std::vector<std::pair<int, int>> ConflictGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : graph_.adj[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledGraph ConflictGraph::induced(const std::vector<int>& vertices) const {
  std::vector<int> keep = vertices;
  keep.push_back(source());
  keep.push_back(sink());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> index(vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  LabeledGraph lg;
  lg.graph = UndirectedGraph(static_cast<int>(keep.size()));
  for (int u : keep) {
    lg.item_ids.push_back(item_id(u));
    for (int v : graph_.adj[u]) {
      if (index[v] >= 0) lg.graph.add_edge(index[u], index[v]);
    }
  }
  lg.s = index[source()];
  lg.t = index[sink()];
  return lg;
}

LabeledGraph ConflictGraph::labeled() const {
  std::vector<int> all(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) all[v] = v;
  return induced(all);
}

std::vector<int> min_vertex_separator(const UndirectedGraph& g, int s, int t) {
  if (s == t) throw InvalidArgument("separator: s and t coincide");
  if (g.has_edge(s, t)) throw InvalidArgument("separator: s and t are adjacent");
  const int n = g.size();
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(2 * n);
  auto add = [&](int u, int v, int cap) {
    out[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, cap});
    out[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, 0});
  };
  // Vertex v becomes in = 2v and out = 2v + 1.
  for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? kInf : 1);
  for (int u = 0; u < n; ++u) {
    for (int v : g.adj[u]) add(2 * u + 1, 2 * v, kInf);
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  std::vector<int> via(2 * n);
  auto bfs = [&]() {
    std::fill(via.begin(), via.end(), -1);
    std::vector<char> seen(2 * n, 0);
    std::deque<int> queue{source};
    seen[source] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int a : out[u]) {
        const int v = arcs[a].to;
        if (arcs[a].cap > 0 && !seen[v]) {
          seen[v] = 1;
          via[v] = a;
          queue.push_back(v);
        }
      }
    }
    return seen;
  };
  while (true) {
    const std::vector<char> seen = bfs();
    if (!seen[sink]) {
      std::vector<int> cut;
      for (int v = 0; v < n; ++v) {
        if (v != s && v != t && seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
      }
      return cut;
    }
    // Every augmenting path crosses a unit arc, so push one unit.
    for (int v = sink; v != source;) {
      const int a = via[v];
      arcs[a].cap -= 1;
      arcs[a ^ 1].cap += 1;
      v = arcs[a ^ 1].to;
    }
  }
}

std::vector<Path> short_disjoint_path_family(const ConflictGraph& g,
                                             int max_internal) {
  if (max_internal < 1) {
    throw InvalidArgument("path family: max_internal must be positive");
  }
  const int n = g.vertex_count();
  const int s = g.source();
  const int t = g.sink();
  std::vector<char> removed(n, 0);
  std::vector<Path> family;
  while (true) {
    std::vector<int> parent(n, -1);
    std::deque<int> queue{s};
    parent[s] = s;
    while (!queue.empty() && parent[t] < 0) {
      const int u = queue.front();
      queue.pop_front();
      std::vector<int> next = g.neighbors(u);
      std::sort(next.begin(), next.end());
      for (int v : next) {
        if (removed[v] || parent[v] >= 0) continue;
        // Only left-to-right steps; the path polylines need them.
        if (g.rect(u).right() > g.rect(v).left()) continue;
        parent[v] = u;
        if (v != t) queue.push_back(v);
      }
    }
    if (parent[t] < 0) break;
    Path p;
    for (int v = t; v != s; v = parent[v]) p.push_back(v);
    p.push_back(s);
    std::reverse(p.begin(), p.end());
    if (static_cast<int>(p.size()) - 2 > max_internal) break;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) removed[p[i]] = 1;
    family.push_back(std::move(p));
  }

  struct Keyed {
    Path path;
    Polyline middle;
    int height;
    int tie;
  };
  std::vector<Keyed> keyed;
  for (Path& p : family) {
    PathPolylines pl = path_polylines(g, p);
    const int height = pl.middle.span_at(g.box().n1).first;
    int tie = std::numeric_limits<int>::max();
    int leftmost = std::numeric_limits<int>::max();
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (g.rect(p[i]).x < leftmost) {
        leftmost = g.rect(p[i]).x;
        tie = g.rect(p[i]).y;
      }
    }
    keyed.push_back({std::move(p), std::move(pl.middle), height, tie});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.height, a.tie) < std::tie(b.height, b.tie);
  });
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    for (std::size_t j = i + 1; j < keyed.size(); ++j) {
      if (!polyline_below(keyed[i].middle, keyed[j].middle)) {
        throw InvariantViolation("path family: middle polylines of paths " +
                                 std::to_string(i) + " and " + std::to_string(j) +
                                 " are not ordered bottom to top");
      }
    }
  }
  std::vector<Path> ordered;
  for (Keyed& k : keyed) ordered.push_back(std::move(k.path));
  return ordered;
}

std::string to_dot(const ConflictGraph& g) {
  auto name = [&](int v) {
    if (v == g.source()) return std::string("s");
    if (v == g.sink()) return std::string("t");
    return std::to_string(g.item_id(v));
  };
  std::ostringstream os;
  os << "graph conflict {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  \"" << name(v) << "\";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    const Witness& w = g.witness(u, v);
    os << "  \"" << name(u) << "\" -- \"" << name(v) << "\" [label=\"y="
       << w.y2 / 2 << ".5\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace wideknap
