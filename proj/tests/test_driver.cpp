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
#include <vector>

#include "wideknap/driver.hpp"
#include "wideknap/errors.hpp"
#include "wideknap/oracle.hpp"

using namespace wideknap;

namespace {

Instance make(Box box, std::vector<Rect> rects, int k) {
  Instance inst;
  inst.box = box;
  int id = 1;
  for (const Rect& r : rects) inst.items.push_back(Item{id++, r, {}});
  inst.k = k;
  return inst;
}

}  // namespace

TEST_CASE("solve_small_k examples") {
  const Instance inst = make({4, 2}, {{4, 1}, {4, 1}, {2, 2}}, 1);
  const auto two = solve_small_k(inst, 2);
  REQUIRE(two);
  CHECK(two->size() == 2);
  CHECK(validate_packing(inst, *two).ok);
  CHECK_FALSE(solve_small_k(inst, 3));
  CHECK_FALSE(solve_small_k(inst, 4));
  CHECK_THROWS_AS(solve_small_k(inst, 0), InvalidArgument);
  // Oversized items are never used.
  CHECK_FALSE(solve_small_k(make({3, 3}, {{4, 1}}, 1), 1));
}

TEST_CASE("reduce_and_solve: enough thin items are stacked") {
  // delta = 2, k = 2: widths up to 40 / (2 * 4) = 5 are thin.
  const Instance inst = make({40, 20}, {{5, 5}, {4, 4}, {3, 1}, {30, 2}}, 2);
  const SolveReport r = reduce_and_solve(inst, 2, Rational(1, 4));
  CHECK(r.verdict == Verdict::packing);
  CHECK(r.trace.branch == "stacking");
  CHECK(r.trace.thin_count == 3);
  REQUIRE(r.packing);
  CHECK(r.packing->size() == 2);
  CHECK(r.packing->find(3));
  CHECK(r.packing->find(2));
  CHECK(validate_packing(inst, *r.packing).ok);
}

TEST_CASE("reduce_and_solve: without thin items the DP answers") {
  const Instance inst = make({4, 4}, {{4, 2}, {4, 2}, {3, 1}, {2, 2}}, 3);
  const SolveReport r = reduce_and_solve(inst, 3, Rational(1, 2));
  CHECK(r.trace.thin_count == 0);
  CHECK(r.trace.branch == "dp");
  REQUIRE(r.verdict == Verdict::packing);
  CHECK(static_cast<std::int64_t>(r.packing->size()) >= r.guarantee);
  CHECK(validate_packing(inst, *r.packing).ok);
}

TEST_CASE("pas_solve examples") {
  const Instance one = make({4, 2}, {{4, 2}}, 1);
  const SolveReport r1 = pas_solve(one, Rational(1, 2));
  CHECK(r1.verdict == Verdict::packing);
  CHECK(r1.trace.branch == "base-case");
  CHECK(r1.guarantee == 1);

  const Instance none = make({4, 2}, {{4, 2}, {4, 2}}, 2);
  const SolveReport r2 = pas_solve(none, Rational(1, 2));
  CHECK(r2.verdict == Verdict::no_packing);
  CHECK_FALSE(r2.packing);

  CHECK_THROWS_AS(pas_solve(one, Rational(1)), InvalidArgument);
  CHECK_THROWS_AS(pas_solve(one, Rational(0)), InvalidArgument);
  CHECK_THROWS_AS(pas_solve(make({4, 4}, {{1, 2}}, 1), Rational(1, 2)), InvalidArgument);

  const Instance budget = make({6, 6}, std::vector<Rect>(8, Rect{2, 2}), 8);
  SolveOptions tight;
  tight.exact_node_budget = 5;
  CHECK(pas_solve(budget, Rational(1, 9), tight).verdict == Verdict::inconclusive_budget);
}

TEST_CASE("property: pas_solve meets its guarantee against the oracle") {
  GeneratorProfile prof;
  prof.box_w_min = 4;
  prof.box_w_max = 8;
  prof.box_h_min = 2;
  prof.box_h_max = 5;
  prof.items_min = 3;
  prof.items_max = 7;
  prof.width_max = 8;
  int solved = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Instance inst = generate_instance(seed, prof);
    const auto opt = oracle::opt_pack(inst);
    REQUIRE(opt.status != oracle::OracleStatus::budget);
    if (opt.opt == 0) continue;
    for (Rational eps : {Rational(1, 2), Rational(1, 3), Rational(3, 4)}) {
      inst.k = opt.opt;
      const SolveReport r = pas_solve(inst, eps);
      if (r.verdict == Verdict::inconclusive_budget) continue;
      REQUIRE(r.verdict == Verdict::packing);
      CHECK(validate_packing(inst, *r.packing).ok);
      CHECK(static_cast<std::int64_t>(r.packing->size()) >= ceil_of((1 - eps) * opt.opt));
      ++solved;
      // One more than the optimum cannot be packed exactly, so any
      // no-packing verdict there is correct and a packing must still be valid.
      if (opt.opt < static_cast<int>(inst.items.size())) {
        inst.k = opt.opt + 1;
        const SolveReport over = pas_solve(inst, eps);
        if (over.verdict == Verdict::packing) {
          CHECK(validate_packing(inst, *over.packing).ok);
          CHECK(static_cast<std::int64_t>(over.packing->size()) >= over.guarantee);
        }
      }
    }
  }
  CHECK(solved > 40);
}

TEST_CASE("property: randomized runs are reproducible from the seed") {
  const Instance inst = make({6, 4}, {{6, 2}, {3, 2}, {3, 2}, {4, 1}, {2, 1}}, 4);
  SolveOptions opt;
  opt.coloring_mode = ColoringMode::randomized;
  opt.coloring_seed = 99;
  opt.failure_bound = 0.1;
  const SolveReport a = pas_solve(inst, Rational(1, 2), opt);
  const SolveReport b = pas_solve(inst, Rational(1, 2), opt);
  CHECK(a.verdict == b.verdict);
  CHECK(a.trace.colorings_tried == b.trace.colorings_tried);
  CHECK(a.trace.coloring_index == b.trace.coloring_index);
  if (a.packing && b.packing) CHECK(a.packing->placements == b.packing->placements);
  CHECK(a.trace.coloring_mode == "randomized");
}
