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

#include <string>
#include <vector>

#include "wideknap/conflict.hpp"
#include "wideknap/geometry.hpp"
#include "wideknap/model.hpp"
#include "wideknap/rational.hpp"

namespace wideknap {

// Polylines along an s-t path of the conflict graph, on the doubled grid
// so that rectangle centers and witness levels are integral.
struct PathPolylines {
  Polyline bottom;
  Polyline top;
  Polyline middle;
  int internal_count = 0;
};

PathPolylines path_polylines(const ConflictGraph& g, const Path& path);
// internal: the path rectangles left to right; witness_y2: doubled witness
// levels s-R1, R1-R2, ..., Rm-t. Throws unless each rectangle lies left of
// the next.
PathPolylines path_polylines(const std::vector<PlacedRect>& internal,
                             const std::vector<int>& witness_y2, Box box);

// The rectangle widened by ell2 on both sides and clipped to the box, on the
// doubled grid.
PlacedRect widened(const PlacedRect& doubled, int ell2, Box doubled_box);

// Failures of the complexity bound (at most 4 m + 1 segments for m internal
// vertices) and of the middle polylines avoiding every other rectangle
// widened by ell2 (doubled units).
std::vector<std::string> path_property_failures(const ConflictGraph& g,
                                                const std::vector<Path>& family,
                                                int ell2);

// Moves every rectangle not reachable from s once the separator is removed
// ell units to the left and drops the separator. The result is checked to
// lie inside shift_zone(zone, ell, negative).
Packing repack_shift(const Packing& packing, const Region& zone, int ell,
                     const std::vector<int>& separator_ids,
                     const LabeledGraph& graph);

// x -> floor((1 + ell / n1) x) and widths rounded up to the granularity.
// The zone must avoid the rightmost ell columns; the result is checked to
// lie inside shift_zone(zone, ell, positive).
Packing repack_round(const Packing& packing, const Region& zone, int ell,
                     const RoundingParams& params);

struct StructuredPacking {
  Box box;
  Rational eps{1};
  int ell = 1;
  Packing packing;                 // kept rectangles at original positions
  std::vector<int> region_of;      // region index per placement
  std::vector<Polyline> polylines; // doubled grid, bottom to top
  std::vector<Path> family;        // conflict-graph vertices of each path
  std::vector<PathPolylines> family_polylines;
  std::vector<std::vector<int>> family_ids;
  std::vector<bool> heavy;         // per region
  std::vector<Packing> rounded_witness;  // per heavy region
  int source_size = 0;
};

// Turns a packing of rectangles of width >= 2 ell into a structured one:
// short disjoint conflict paths split the box into regions; regions with
// many rectangles lose a minimum separator and get a rounded repacking.
StructuredPacking structural_transform(const Packing& packing, Box box,
                                       const Rational& eps, int ell);

struct StructuredReport {
  bool ok = true;
  std::vector<std::string> failures;
  int failing_region = -1;
};

// Independent check of a structured packing. k <= 0 skips the size bound.
StructuredReport verify_structured(const StructuredPacking& sp,
                                   const std::vector<Item>& items, int k,
                                   std::uint64_t node_budget = 10'000'000);

}  // namespace wideknap
