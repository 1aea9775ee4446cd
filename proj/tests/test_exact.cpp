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

#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "wideknap/exact.hpp"
#include "wideknap/oracle.hpp"

using namespace wideknap;

namespace {

ExactQuery query(Region region, std::vector<Rect> rects) {
  ExactQuery q;
  q.region = std::move(region);
  int id = 1;
  for (const Rect& r : rects) q.rects.push_back({id++, r});
  return q;
}

std::vector<Item> items_of(const ExactQuery& q) {
  std::vector<Item> items;
  for (const ExactItem& e : q.rects) items.push_back(Item{e.id, e.rect, {}});
  return items;
}

Region l_shape() {
  Region r = Region::full({2, 2});
  r.erase(1, 1);
  return r;
}

}  // namespace

TEST_CASE("exact_pack examples") {
  const auto empty = exact_pack(query(Region::full({3, 3}), {}));
  CHECK(empty.status == ExactStatus::feasible);
  CHECK(empty.witness.size() == 0);

  const auto q2 = query(Region::full({2, 2}), {{2, 1}, {2, 1}});
  const auto stacked = exact_pack(q2);
  REQUIRE(stacked.status == ExactStatus::feasible);
  CHECK(validate_packing_in_region(items_of(q2), stacked.witness, q2.region).ok);

  CHECK(exact_pack(query(Region::full({2, 2}), {{2, 2}, {1, 1}})).status ==
        ExactStatus::infeasible);
  CHECK(exact_pack(query(l_shape(), {{2, 1}, {1, 2}})).status == ExactStatus::infeasible);
  CHECK(exact_pack(query(l_shape(), {{2, 1}, {1, 1}})).status == ExactStatus::feasible);
  // Region with a hole: a 3x3 ring takes four 2x1 dominoes.
  Region ring = Region::full({3, 3});
  ring.erase(1, 1);
  CHECK(exact_pack(query(ring, {{2, 1}, {2, 1}, {1, 2}, {1, 2}})).status ==
        ExactStatus::feasible);
  CHECK(exact_pack(query(ring, {{3, 1}, {3, 1}, {1, 3}})).status == ExactStatus::infeasible);
}

TEST_CASE("exact_pack reports budget exhaustion") {
  ExactQuery q = query(Region::full({6, 6}), std::vector<Rect>(8, Rect{2, 2}));
  q.rects.push_back({99, {1, 1}});
  q.node_budget = 5;
  CHECK(exact_pack(q).status == ExactStatus::budget);
}

TEST_CASE("is_flush and push_bottom_left") {
  const Region box = Region::full({4, 4});
  CHECK(is_flush({{2, 1}, 0, 0}, box));
  CHECK_FALSE(is_flush({{2, 1}, 1, 0}, box));
  CHECK_FALSE(is_flush({{2, 1}, 0, 1}, box));
  Packing p{{{1, {{2, 1}, 2, 3}}}};
  CHECK(push_bottom_left(p, box).placements[0].placed == PlacedRect{{2, 1}, 0, 0});
}

TEST_CASE("property: exact_pack agrees with the oracle, witnesses validate") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    const Box b{1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5)};
    Region region(b);
    for (int y = 0; y < b.n2; ++y) {
      for (int x = 0; x < b.n1; ++x) {
        if (rng() % 5 != 0) region.insert(x, y);
      }
    }
    std::vector<Rect> rects;
    const int n = static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) {
      rects.push_back({1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3)});
    }
    const ExactQuery q = query(region, rects);
    const ExactResult r = exact_pack(q);
    std::vector<oracle::OracleItem> orects;
    for (const ExactItem& e : q.rects) orects.push_back({e.id, e.rect});
    const auto o = oracle::feasible_subset(orects, region);
    REQUIRE(r.status != ExactStatus::budget);
    REQUIRE(o.status != oracle::OracleStatus::budget);
    CHECK((r.status == ExactStatus::feasible) == (o.status == oracle::OracleStatus::feasible));
    if (r.status == ExactStatus::feasible) {
      CHECK(validate_packing_in_region(items_of(q), r.witness, region).ok);
    }

    // Branching bound: every node places one shape at one cell.
    std::set<Rect> shapes(rects.begin(), rects.end());
    double bound = 1;
    double total = 1;
    for (int i = 0; i < n; ++i) {
      bound *= static_cast<double>(shapes.size()) * region.size();
      total += bound;
    }
    CHECK(static_cast<double>(r.nodes) <= total);

    // Pushing any oracle witness bottom-left leaves every rectangle flush.
    if (o.status == oracle::OracleStatus::feasible) {
      const Packing pushed = push_bottom_left(o.witness, region);
      CHECK(validate_packing_in_region(items_of(q), pushed, region).ok);
      for (std::size_t i = 0; i < pushed.size(); ++i) {
        Region free_cells = region;
        for (std::size_t j = 0; j < pushed.size(); ++j) {
          if (j != i) free_cells = carve(free_cells, pushed.placements[j].placed);
        }
        CHECK(is_flush(pushed.placements[i].placed, free_cells));
      }
    }
  }
}
