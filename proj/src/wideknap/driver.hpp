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

#include <cstdint>
#include <optional>
#include <string>

#include "wideknap/colorcode.hpp"
#include "wideknap/dp.hpp"
#include "wideknap/model.hpp"
#include "wideknap/rational.hpp"

namespace wideknap {

enum class Verdict { packing, no_packing, inconclusive_budget };

struct SolveOptions {
  // Unset: exhaustive when k^n fits the exhaustive budget, else randomized.
  std::optional<ColoringMode> coloring_mode;
  std::uint64_t coloring_seed = 1;
  double failure_bound = 0.01;
  std::uint64_t exhaustive_budget = kDefaultExhaustiveBudget;
  DpBudgets budgets;
  std::uint64_t exact_node_budget = kDefaultNodeBudget;
  bool certified_shortcut = true;
};

struct SolveTrace {
  std::string branch;  // base-case, stacking, dp, dp+stacking, removal-swap
  Rational eps{0};
  Rational eps_b{0};
  Rational eps_a{0};
  Rational delta{0};
  int thin_count = 0;
  int k_inner = 0;
  std::string coloring_mode;
  std::size_t family_size = 0;
  std::size_t colorings_tried = 0;
  std::optional<std::size_t> coloring_index;
  std::optional<double> residual_failure_probability;
  DpStats dp;
  std::uint64_t exact_nodes = 0;
  std::string budget_reason;
};

struct SolveReport {
  Verdict verdict = Verdict::no_packing;
  std::optional<Packing> packing;
  std::int64_t guarantee = 0;
  SolveTrace trace;
};

// Exact: a packing of k items iff one exists, trying every k-subset with
// distinct shape multisets. Throws BudgetExceeded when the shared node
// budget runs out.
std::optional<Packing> solve_small_k(const Instance& instance, int k,
                                     std::uint64_t node_budget = kDefaultNodeBudget,
                                     std::uint64_t* nodes_used = nullptr);

// Thin-item reduction around the DP, guarantee ceil((1 - 2 eps) k). Items of
// width at most n1 / (delta k^2), delta the box aspect ratio, are thin.
SolveReport reduce_and_solve(const Instance& instance, int k, const Rational& eps,
                             const SolveOptions& options = {});

// Packing of size at least ceil((1 - eps) k) or a verdict that none of size
// k exists. Uses the exact base case for k <= 1 / eps, otherwise
// reduce_and_solve at eps / 2 with the DP at eps / 6.
SolveReport pas_solve(const Instance& instance, const Rational& eps,
                      const SolveOptions& options = {});

const char* to_string(Verdict v);

}  // namespace wideknap
