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
#include <vector>

#include "wideknap/driver.hpp"
#include "wideknap/json_io.hpp"
#include "wideknap/model.hpp"
#include "wideknap/oracle.hpp"

namespace wideknap {

struct SuiteSpec {
  std::string name = "suite";
  GeneratorProfile profile;
  std::vector<Rational> epsilons;
  std::vector<std::uint64_t> seeds;
  SolveOptions options;
  std::uint64_t oracle_budget = oracle::kDefaultOracleBudget;
  // Any of "validity", "oracle-ratio", "structural", "paths".
  std::vector<std::string> properties{"validity", "oracle-ratio"};
  // When set, one SVG per case goes to <svg_dir>/<name>/<case>.svg.
  std::optional<std::string> svg_dir;
};

// {"name", "profile", "epsilons": ["1/2"], "seeds": [..] or
// {"from": a, "count": n}, "properties", "oracle_budget", "svg_dir",
// "coloring_mode", "coloring_seed", "failure_bound"}
SuiteSpec suite_from_json(const Json& j);

struct SuiteReport {
  Json json;
  std::string table;
  int passed = 0;
  int failed = 0;
  int inconclusive = 0;
  int skipped = 0;
  // Complexity and middle-polyline failures over every path examined.
  std::vector<std::string> path_failures;
  std::size_t paths_checked = 0;

  bool ok() const { return failed == 0; }
};

// For every seed: generate, compute the oracle optimum, set k to it and run
// pas_solve for every eps, checking the requested properties. Cases with an
// optimum of 0 are skipped; budget exhaustion marks a case inconclusive.
// Output carries no timings so that reruns are byte-identical.
SuiteReport run_suite(const SuiteSpec& spec);

}  // namespace wideknap
