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

#include "wideknap/structure.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "wideknap/errors.hpp"
#include "wideknap/exact.hpp"

namespace wideknap {
namespace {

bool light(std::size_t size, const Rational& eps) {
  return Rational(static_cast<std::int64_t>(size)) * eps * eps <= 1;
}

Polyline floor_line(Box doubled) { return Polyline::horizontal(0, doubled.n1); }
Polyline ceiling_line(Box doubled) {
  return Polyline::horizontal(doubled.n2, doubled.n1);
}

std::vector<Item> items_of(const Packing& p) {
  std::vector<Item> items;
  for (const Placement& pl : p.placements) items.push_back({pl.id, pl.placed.rect, {}});
  return items;
}

void check_inside(const Packing& out, const Region& zone, const char* what) {
  const ValidationReport r = validate_packing_in_region(items_of(out), out, zone);
  if (!r.ok) {
    throw InvariantViolation(std::string(what) + ": " + r.check + " " + r.detail);
  }
}

}  // namespace

PathPolylines path_polylines(const std::vector<PlacedRect>& internal,
                             const std::vector<int>& witness_y2, Box box) {
  if (witness_y2.size() != internal.size() + 1) {
    throw InvalidArgument("path polylines: need one witness per path edge");
  }
  for (std::size_t i = 1; i < internal.size(); ++i) {
    if (internal[i - 1].right() > internal[i].left()) {
      throw InvalidArgument("path polylines: path does not run left to right");
    }
  }
  std::vector<Point> bottom{{0, witness_y2[0]}};
  std::vector<Point> top{{0, witness_y2[0]}};
  std::vector<Point> middle{{0, witness_y2[0]}};
  for (std::size_t i = 0; i < internal.size(); ++i) {
    const PlacedRect r = scaled(internal[i], 2);
    const int in = witness_y2[i];
    const int out = witness_y2[i + 1];
    bottom.insert(bottom.end(), {{r.left(), in}, {r.left(), r.bottom()},
                                 {r.right(), r.bottom()}, {r.right(), out}});
    top.insert(top.end(), {{r.left(), in}, {r.left(), r.top()},
                           {r.right(), r.top()}, {r.right(), out}});
    const int cx = r.x + r.rect.w / 2;
    const int cy = r.y + r.rect.h / 2;
    middle.insert(middle.end(), {{cx, in}, {cx, cy}, {cx, out}});
  }
  const int end = 2 * box.n1;
  bottom.push_back({end, witness_y2.back()});
  top.push_back({end, witness_y2.back()});
  middle.push_back({end, witness_y2.back()});
  PathPolylines p;
  p.bottom = Polyline::from_points(std::move(bottom));
  p.top = Polyline::from_points(std::move(top));
  p.middle = Polyline::from_points(std::move(middle));
  p.internal_count = static_cast<int>(internal.size());
  return p;
}

PathPolylines path_polylines(const ConflictGraph& g, const Path& path) {
  if (path.size() < 3 || path.front() != g.source() || path.back() != g.sink()) {
    throw InvalidArgument("path polylines: path must run from s to t");
  }
  std::vector<PlacedRect> internal;
  std::vector<int> levels;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    levels.push_back(g.witness(path[i], path[i + 1]).y2);
    if (i > 0) internal.push_back(g.rect(path[i]));
  }
  return path_polylines(internal, levels, g.box());
}

PlacedRect widened(const PlacedRect& doubled, int ell2, Box doubled_box) {
  const int l = std::max(0, doubled.left() - ell2);
  const int r = std::min(doubled_box.n1, doubled.right() + ell2);
  return PlacedRect{{r - l, doubled.rect.h}, l, doubled.y};
}

std::vector<std::string> path_property_failures(const ConflictGraph& g,
                                                const std::vector<Path>& family,
                                                int ell2) {
  std::vector<std::string> out;
  const Box dbox = scaled(g.box(), 2);
  for (std::size_t f = 0; f < family.size(); ++f) {
    const Path& path = family[f];
    const PathPolylines pl = path_polylines(g, path);
    const int bound = 4 * pl.internal_count + 1;
    for (const Polyline* p : {&pl.bottom, &pl.top, &pl.middle}) {
      if (p->complexity() > bound) {
        out.push_back("path " + std::to_string(f) + ": complexity " +
                      std::to_string(p->complexity()) + " exceeds " +
                      std::to_string(bound));
      }
    }
    const std::set<int> on_path(path.begin(), path.end());
    for (int v = 0; v < g.source(); ++v) {
      if (on_path.count(v)) continue;
      const PlacedRect w = widened(scaled(g.rect(v), 2), ell2, dbox);
      if (polyline_crosses(pl.middle, w)) {
        out.push_back("path " + std::to_string(f) + ": middle polyline crosses "
                      "widened rectangle " + std::to_string(g.item_id(v)));
      }
    }
  }
  return out;
}

Packing repack_shift(const Packing& packing, const Region& zone, int ell,
                     const std::vector<int>& separator_ids,
                     const LabeledGraph& graph) {
  if (ell < 1) throw InvalidArgument("repack_shift: ell must be positive");
  const int n = graph.graph.size();
  std::vector<char> cut(n, 0);
  for (int id : separator_ids) cut[graph.vertex_of(id)] = 1;
  std::vector<char> reach(n, 0);
  std::deque<int> queue{graph.s};
  reach[graph.s] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : graph.graph.adj[u]) {
      if (!reach[v] && !cut[v]) {
        reach[v] = 1;
        queue.push_back(v);
      }
    }
  }
  if (reach[graph.t]) {
    throw InvalidArgument("repack_shift: separator does not separate s from t");
  }
  Packing out;
  for (const Placement& p : packing.placements) {
    const int v = graph.vertex_of(p.id);
    if (cut[v]) continue;
    Placement q = p;
    if (!reach[v]) q.placed.x -= ell;
    out.placements.push_back(q);
  }
  check_inside(out, shift_zone(zone, ell, ShiftDirection::negative),
               "repack_shift");
  return out;
}

Packing repack_round(const Packing& packing, const Region& zone, int ell,
                     const RoundingParams& params) {
  if (ell < 1) throw InvalidArgument("repack_round: ell must be positive");
  const Box& b = zone.bounds();
  for (const Point& c : zone.cells()) {
    if (c.x + 1 > b.n1 - ell) {
      throw InvalidArgument("repack_round: zone reaches the rightmost ell columns");
    }
  }
  Packing out;
  for (const Placement& p : packing.placements) {
    if (p.placed.rect.w < 2 * ell) {
      throw InvalidArgument("repack_round: rectangle narrower than 2 ell");
    }
    Placement q = p;
    q.placed.x = p.placed.x + static_cast<int>(
                                  static_cast<std::int64_t>(p.placed.x) * ell / b.n1);
    q.placed.rect = round_rect(p.placed.rect, params);
    out.placements.push_back(q);
  }
  check_inside(out, shift_zone(zone, ell, ShiftDirection::positive),
               "repack_round");
  return out;
}

StructuredPacking structural_transform(const Packing& packing, Box box,
                                       const Rational& eps, int ell) {
  if (eps <= 0 || eps > 1) throw InvalidArgument("structure: eps must lie in (0, 1]");
  if (ell < 1) throw InvalidArgument("structure: ell must be positive");
  for (const Placement& p : packing.placements) {
    if (p.placed.rect.w < 2 * ell) {
      throw InvalidArgument("structure: rectangle " + std::to_string(p.id) +
                            " is narrower than 2 ell");
    }
  }
  const ConflictGraph g = build_conflict_graph(packing, box);
  const int max_internal = static_cast<int>(floor_of(1 / eps));
  const std::vector<Path> family = short_disjoint_path_family(g, max_internal);
  const int m = static_cast<int>(family.size());
  const Box dbox = scaled(box, 2);

  StructuredPacking sp;
  sp.box = box;
  sp.eps = eps;
  sp.ell = ell;
  sp.family = family;
  sp.source_size = static_cast<int>(packing.size());
  std::vector<char> on_path(g.vertex_count(), 0);
  for (const Path& p : family) {
    sp.family_polylines.push_back(path_polylines(g, p));
    std::vector<int> ids;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      on_path[p[i]] = 1;
      ids.push_back(g.item_id(p[i]));
    }
    sp.family_ids.push_back(std::move(ids));
  }

  // Rectangles strictly between consecutive paths.
  auto zone_low = [&](int i) {
    return i == 0 ? floor_line(dbox) : sp.family_polylines[i - 1].top;
  };
  auto zone_high = [&](int i) {
    return i == m ? ceiling_line(dbox) : sp.family_polylines[i].bottom;
  };
  std::vector<std::vector<int>> between(m + 1);
  for (int v = 0; v < g.source(); ++v) {
    if (on_path[v]) continue;
    const PlacedRect r = scaled(g.rect(v), 2);
    int home = -1;
    for (int i = 0; i <= m && home < 0; ++i) {
      const std::vector<int> lo = zone_low(i).column_heights();
      const std::vector<int> hi = zone_high(i).column_heights();
      bool inside = true;
      for (int c = r.left(); c < r.right() && inside; ++c) {
        inside = lo[c] <= r.bottom() && r.top() <= hi[c];
      }
      if (inside) home = i;
    }
    if (home < 0) {
      throw InvariantViolation("structure: rectangle " + std::to_string(g.item_id(v)) +
                               " lies between no pair of consecutive paths");
    }
    between[home].push_back(v);
  }

  // Path i (1-based) contributes its bottom polyline when both neighbouring
  // regions are light and its middle polyline otherwise.
  std::vector<bool> heavy(m + 1);
  for (int i = 0; i <= m; ++i) heavy[i] = !light(between[i].size(), eps);
  for (int i = 1; i <= m; ++i) {
    const PathPolylines& pl = sp.family_polylines[i - 1];
    sp.polylines.push_back(!heavy[i - 1] && !heavy[i] ? pl.bottom : pl.middle);
  }
  sp.heavy = heavy;
  sp.rounded_witness.assign(m + 1, Packing{});

  const RoundingParams params = RoundingParams::make(Rational(ell), box.n1);
  for (int i = 0; i <= m; ++i) {
    std::vector<int> kept;
    if (!heavy[i]) {
      kept = between[i];
      if (i >= 1 && !heavy[i - 1]) {
        const Path& p = family[i - 1];
        kept.insert(kept.end(), p.begin() + 1, p.end() - 1);
      }
    } else {
      const LabeledGraph sub = g.induced(between[i]);
      std::vector<int> cut_ids;
      for (int v : min_vertex_separator(sub.graph, sub.s, sub.t)) {
        cut_ids.push_back(sub.item_ids[v]);
      }
      const std::set<int> cut(cut_ids.begin(), cut_ids.end());
      Packing zone_packing;
      for (int v : between[i]) {
        zone_packing.placements.push_back(packing.placements[v]);
        if (!cut.count(g.item_id(v))) kept.push_back(v);
      }
      const Region zone = cells_between(zone_low(i), zone_high(i), dbox).coarsened();
      const Packing shifted = repack_shift(zone_packing, zone, ell, cut_ids, sub);
      const Region shifted_zone = shift_zone(zone, ell, ShiftDirection::negative);
      sp.rounded_witness[i] = repack_round(shifted, shifted_zone, ell, params);
    }
    std::sort(kept.begin(), kept.end());
    for (int v : kept) {
      sp.packing.placements.push_back(packing.placements[v]);
      sp.region_of.push_back(i);
    }
  }
  return sp;
}

StructuredReport verify_structured(const StructuredPacking& sp,
                                   const std::vector<Item>& items, int k,
                                   std::uint64_t node_budget) {
  StructuredReport rep;
  auto fail = [&](std::string msg, int region = -1) {
    rep.ok = false;
    rep.failures.push_back(std::move(msg));
    if (region >= 0 && rep.failing_region < 0) rep.failing_region = region;
  };
  const Box dbox = scaled(sp.box, 2);
  Instance inst{sp.box, items, 1};
  const ValidationReport valid = validate_packing(inst, sp.packing);
  if (!valid.ok) fail("packing invalid: " + valid.check + " " + valid.detail);

  for (const Placement& p : sp.packing.placements) {
    if (p.placed.rect.w < 2 * sp.ell) {
      fail("rectangle " + std::to_string(p.id) + " narrower than 2 ell");
    }
  }
  const std::size_t m = sp.polylines.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Polyline& p = sp.polylines[i];
    if (p.width() != dbox.n1) {
      fail("polyline " + std::to_string(i) + " does not span the box");
      continue;
    }
    if (Rational(p.complexity()) * sp.eps > 4 + sp.eps) {
      fail("polyline " + std::to_string(i) + " has complexity " +
           std::to_string(p.complexity()) + " above 4/eps + 1");
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      if (sp.polylines[j].width() == p.width() &&
          !polyline_below(p, sp.polylines[j])) {
        fail("polylines " + std::to_string(i) + " and " + std::to_string(j) +
             " are not ordered");
      }
    }
    for (const Placement& q : sp.packing.placements) {
      if (polyline_crosses(p, scaled(q.placed, 2))) {
        fail("polyline " + std::to_string(i) + " crosses rectangle " +
             std::to_string(q.id));
      }
    }
  }
  if (!rep.ok) return rep;

  const RoundingParams params = RoundingParams::make(Rational(sp.ell), sp.box.n1);
  std::vector<int> home(sp.packing.size(), -1);
  for (std::size_t i = 0; i <= m; ++i) {
    const Polyline low = i == 0 ? floor_line(dbox) : sp.polylines[i - 1];
    const Polyline high = i == m ? ceiling_line(dbox) : sp.polylines[i];
    const Region cells = cells_between(low, high, dbox).coarsened();
    std::vector<ExactItem> members;
    for (std::size_t q = 0; q < sp.packing.size(); ++q) {
      const Placement& pl = sp.packing.placements[q];
      if (home[q] < 0 && cells.contains(pl.placed)) {
        home[q] = static_cast<int>(i);
        members.push_back({pl.id, round_rect(pl.placed.rect, params)});
      }
    }
    const int region = static_cast<int>(i);
    if (Rational(static_cast<std::int64_t>(members.size())) * sp.eps * sp.eps <= 2) {
      continue;
    }
    const ExactResult r = exact_pack({members, cells, node_budget});
    if (r.status == ExactStatus::infeasible) {
      fail("region " + std::to_string(i) + ": rounded rectangles do not pack",
           region);
    } else if (r.status == ExactStatus::budget) {
      fail("region " + std::to_string(i) + ": packing check ran out of budget",
           region);
    }
  }
  for (std::size_t q = 0; q < home.size(); ++q) {
    if (home[q] < 0) {
      fail("rectangle " + std::to_string(sp.packing.placements[q].id) +
           " lies in no region");
    }
  }
  if (k > 0) {
    const std::int64_t need = ceil_of((1 - 3 * sp.eps) * k);
    if (static_cast<std::int64_t>(sp.packing.size()) < need) {
      fail("kept " + std::to_string(sp.packing.size()) + " rectangles, need " +
           std::to_string(need));
    }
  }
  return rep;
}

}  // namespace wideknap
