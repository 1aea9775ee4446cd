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

#include "wideknap/driver.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "wideknap/errors.hpp"
#include "wideknap/exact.hpp"

namespace wideknap {
namespace {

void require_wide(const Instance& instance) {
  for (const Item& it : instance.items) {
    if (!it.rect.is_wide()) {
      throw InvalidArgument("item " + std::to_string(it.id) + " is not wide");
    }
  }
}

void check_valid(const Instance& instance, const Packing& p, const char* what) {
  const ValidationReport r = validate_packing(instance, p);
  if (!r.ok) {
    throw InvariantViolation(std::string(what) + " produced an invalid packing: " +
                             r.check + " " + r.detail);
  }
}

// Items stacked bottom up at x = 0.
Packing stack_vertically(const std::vector<Item>& items, const Box& box) {
  Packing p;
  int y = 0;
  for (const Item& it : items) {
    p.placements.push_back({it.id, PlacedRect{it.rect, 0, y}});
    y += it.rect.h;
  }
  if (y > box.n2) throw InvariantViolation("stacking: cumulative height exceeds n2");
  return p;
}

}  // namespace

std::optional<Packing> solve_small_k(const Instance& instance, int k,
                                     std::uint64_t node_budget,
                                     std::uint64_t* nodes_used) {
  if (k < 1) throw InvalidArgument("solve_small_k: k must be positive");
  std::vector<Item> usable;
  for (const Item& it : instance.items) {
    if (it.rect.w <= instance.box.n1 && it.rect.h <= instance.box.n2) {
      usable.push_back(it);
    }
  }
  const int n = static_cast<int>(usable.size());
  if (n < k) return std::nullopt;
  const Region box = Region::full(instance.box);
  std::set<std::vector<Rect>> tried;
  std::uint64_t left = node_budget;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    ExactQuery q;
    q.region = box;
    std::vector<Rect> shapes;
    std::int64_t area = 0;
    for (int i : pick) {
      q.rects.push_back({usable[i].id, usable[i].rect});
      shapes.push_back(usable[i].rect);
      area += usable[i].rect.area();
    }
    std::sort(shapes.begin(), shapes.end());
    if (area <= box.size() && tried.insert(shapes).second) {
      q.node_budget = left;
      const ExactResult r = exact_pack(q);
      left = r.nodes >= left ? 0 : left - r.nodes;
      if (nodes_used) *nodes_used += r.nodes;
      if (r.status == ExactStatus::feasible) return r.witness;
      if (r.status == ExactStatus::budget) {
        throw BudgetExceeded("solve_small_k: node budget exhausted");
      }
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

SolveReport reduce_and_solve(const Instance& instance, int k, const Rational& eps,
                             const SolveOptions& options) {
  require_wide(instance);
  SolveReport rep;
  rep.guarantee = std::max<std::int64_t>(0, ceil_of((1 - 2 * eps) * k));
  rep.trace.eps_b = eps;
  rep.trace.eps_a = eps / 3;
  const Box& box = instance.box;
  const Rational delta = aspect_ratio(box);
  rep.trace.delta = delta;
  const Rational thin_width = Rational(box.n1) / (delta * k * k);
  std::vector<Item> thin;
  std::vector<Item> rest;
  for (const Item& it : instance.items) {
    (Rational(it.rect.w) <= thin_width ? thin : rest).push_back(it);
  }
  rep.trace.thin_count = static_cast<int>(thin.size());

  if (static_cast<int>(thin.size()) >= k) {
    std::sort(thin.begin(), thin.end(), [](const Item& a, const Item& b) {
      return std::tie(a.rect.h, a.id) < std::tie(b.rect.h, b.id);
    });
    thin.resize(k);
    rep.trace.branch = "stacking";
    rep.packing = stack_vertically(thin, box);
    check_valid(instance, *rep.packing, "stacking");
    rep.verdict = Verdict::packing;
    return rep;
  }

  // The swap loses one item, which the accounting only absorbs when
  // eps * k >= 1; below that the exact search is cheap anyway.
  if (!thin.empty() && eps * k <= 1) {
    rep.trace.branch = "base-case";
    try {
      rep.packing = solve_small_k(instance, k, options.exact_node_budget,
                                  &rep.trace.exact_nodes);
    } catch (const BudgetExceeded& e) {
      rep.verdict = Verdict::inconclusive_budget;
      rep.trace.budget_reason = e.what();
      return rep;
    }
    rep.verdict = rep.packing ? Verdict::packing : Verdict::no_packing;
    return rep;
  }

  const int k_inner = k - static_cast<int>(thin.size());
  rep.trace.k_inner = k_inner;
  Instance inner;
  inner.box = box;
  inner.items = rest;
  inner.k = k_inner;

  std::vector<int> ids;
  for (const Item& it : rest) ids.push_back(it.id);
  ColoringMode mode = ColoringMode::randomized;
  if (options.coloring_mode) {
    mode = *options.coloring_mode;
  } else {
    const double space = std::pow(static_cast<double>(k_inner),
                                  static_cast<double>(ids.size()));
    if (space <= static_cast<double>(options.exhaustive_budget)) {
      mode = ColoringMode::exhaustive;
    }
  }
  ColoringFamily family;
  try {
    family = ColoringFamily::build(ids, k_inner, mode, options.coloring_seed,
                                   options.failure_bound, options.exhaustive_budget);
  } catch (const BudgetExceeded& e) {
    rep.verdict = Verdict::inconclusive_budget;
    rep.trace.budget_reason = e.what();
    return rep;
  }
  rep.trace.coloring_mode = mode == ColoringMode::exhaustive ? "exhaustive" : "randomized";
  rep.trace.family_size = family.size();

  FeasibilityCache cache;
  DpConfig config;
  config.eps = eps / 3;
  config.alpha = delta * k * k;
  config.budgets = options.budgets;
  config.certified_shortcut = options.certified_shortcut;
  config.cache = &cache;
  const Rational tall = Rational(box.n1) / (delta * k);
  bool budget_hit = false;
  for (std::size_t c = 0; c < family.size(); ++c) {
    config.coloring = family.at(c);
    const DpResult r = dp_solve(inner, config);
    ++rep.trace.colorings_tried;
    rep.trace.dp.states += r.stats.states;
    rep.trace.dp.transitions += r.stats.transitions;
    rep.trace.dp.polylines = std::max(rep.trace.dp.polylines, r.stats.polylines);
    rep.trace.dp.subsets += r.stats.subsets;
    rep.trace.dp.exact_calls += r.stats.exact_calls;
    rep.trace.dp.shortcut_hits += r.stats.shortcut_hits;
    if (r.verdict == DpVerdict::budget) {
      budget_hit = true;
      rep.trace.budget_reason = r.budget_reason;
      continue;
    }
    if (r.verdict != DpVerdict::packing) continue;

    Packing result;
    if (thin.empty()) {
      rep.trace.branch = "dp";
      result = r.packing;
    } else {
      std::vector<Item> chosen;
      const Placement* tallest = nullptr;
      for (const Placement& p : r.packing.placements) {
        chosen.push_back(*inner.find(p.id));
        if (Rational(p.placed.rect.h) >= tall &&
            (!tallest || p.placed.rect.h > tallest->placed.rect.h)) {
          tallest = &p;
        }
      }
      if (!tallest) {
        rep.trace.branch = "dp+stacking";
        chosen.insert(chosen.end(), thin.begin(), thin.end());
        result = stack_vertically(chosen, box);
      } else {
        rep.trace.branch = "removal-swap";
        const PlacedRect slot = tallest->placed;
        int x = slot.x;
        for (const Placement& p : r.packing.placements) {
          if (&p != tallest) result.placements.push_back(p);
        }
        for (const Item& it : thin) {
          if (it.rect.h > slot.rect.h) {
            throw InvariantViolation("removal-swap: thin item taller than the slot");
          }
          result.placements.push_back({it.id, PlacedRect{it.rect, x, slot.y}});
          x += it.rect.w;
        }
        if (x > slot.right()) {
          throw InvariantViolation("removal-swap: thin items overflow the slot");
        }
      }
    }
    check_valid(instance, result, "reduce_and_solve");
    if (static_cast<std::int64_t>(result.size()) < rep.guarantee) continue;
    rep.packing = std::move(result);
    rep.trace.coloring_index = c;
    rep.verdict = Verdict::packing;
    return rep;
  }
  rep.trace.branch = thin.empty() ? "dp" : "dp-with-thin";
  if (budget_hit) {
    rep.verdict = Verdict::inconclusive_budget;
  } else {
    rep.verdict = Verdict::no_packing;
    if (mode == ColoringMode::randomized && k_inner > 1) {
      rep.trace.residual_failure_probability = options.failure_bound;
    }
  }
  return rep;
}

SolveReport pas_solve(const Instance& instance, const Rational& eps,
                      const SolveOptions& options) {
  instance.check();
  require_wide(instance);
  if (eps <= 0 || eps >= 1) throw InvalidArgument("pas_solve: eps must lie in (0, 1)");
  const int k = instance.k;
  SolveReport rep;
  if (eps * k <= 1) {
    rep.guarantee = ceil_of((1 - eps) * k);
    rep.trace.branch = "base-case";
    try {
      rep.packing = solve_small_k(instance, k, options.exact_node_budget,
                                  &rep.trace.exact_nodes);
      rep.verdict = rep.packing ? Verdict::packing : Verdict::no_packing;
    } catch (const BudgetExceeded& e) {
      rep.verdict = Verdict::inconclusive_budget;
      rep.trace.budget_reason = e.what();
    }
  } else {
    rep = reduce_and_solve(instance, k, eps / 2, options);
  }
  rep.trace.eps = eps;
  rep.guarantee = ceil_of((1 - eps) * k);
  if (rep.verdict == Verdict::packing) {
    check_valid(instance, *rep.packing, "pas_solve");
    if (static_cast<std::int64_t>(rep.packing->size()) < rep.guarantee) {
      throw InvariantViolation("pas_solve: packing below the guarantee");
    }
  }
  return rep;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::packing: return "packing";
    case Verdict::no_packing: return "no-packing";
    case Verdict::inconclusive_budget: return "inconclusive-budget";
  }
  return "unknown";
}

}  // namespace wideknap
