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

#include <filesystem>

#include "wideknap/suite.hpp"

using namespace wideknap;

namespace {

SuiteSpec small_spec() {
  SuiteSpec s;
  s.name = "small";
  s.profile.box_w_min = 4;
  s.profile.box_w_max = 6;
  s.profile.box_h_min = 2;
  s.profile.box_h_max = 4;
  s.profile.items_max = 5;
  s.epsilons = {Rational(1, 2), Rational(1, 3)};
  for (std::uint64_t seed = 1; seed <= 6; ++seed) s.seeds.push_back(seed);
  s.properties = {"validity", "oracle-ratio", "paths"};
  return s;
}

}  // namespace

TEST_CASE("empty suite passes") {
  SuiteSpec s;
  const SuiteReport r = run_suite(s);
  CHECK(r.ok());
  CHECK(r.json.at("cases").empty());
  CHECK(r.json.at("summary").at("pass").get<bool>());
}

TEST_CASE("single trivial case") {
  SuiteSpec s;
  s.profile.box_w_min = s.profile.box_w_max = 4;
  s.profile.box_h_min = s.profile.box_h_max = 2;
  s.profile.items_min = s.profile.items_max = 1;
  s.profile.width_min = s.profile.width_max = 4;
  s.epsilons = {Rational(1, 2)};
  s.seeds = {7};
  const SuiteReport r = run_suite(s);
  REQUIRE(r.json.at("cases").size() == 1);
  const Json& c = r.json.at("cases")[0];
  CHECK(c.at("opt") == 1);
  CHECK(c.at("status") == "pass");
  CHECK(c.at("ratio") == "1.000");
  CHECK(r.passed == 1);
}

TEST_CASE("suite from json") {
  const Json j = Json::parse(R"({"name":"x","epsilons":["1/2","2/3"],
    "seeds":{"from":5,"count":3},"properties":["validity"],
    "coloring_mode":"randomized","coloring_seed":4})");
  const SuiteSpec s = suite_from_json(j);
  CHECK(s.name == "x");
  CHECK(s.epsilons == std::vector<Rational>{Rational(1, 2), Rational(2, 3)});
  CHECK(s.seeds == std::vector<std::uint64_t>{5, 6, 7});
  CHECK(s.options.coloring_mode == ColoringMode::randomized);
  CHECK(s.options.coloring_seed == 4);
  CHECK_THROWS(suite_from_json(Json::parse(R"({"coloring_mode":"sometimes"})")));
}

TEST_CASE("reruns are byte-identical and pass") {
  const SuiteSpec s = small_spec();
  const SuiteReport a = run_suite(s);
  const SuiteReport b = run_suite(s);
  CHECK(a.json.dump() == b.json.dump());
  CHECK(a.table == b.table);
  CHECK(a.ok());
  CHECK(a.passed > 0);
  CHECK(a.path_failures.empty());
}

TEST_CASE("svg output per case") {
  SuiteSpec s = small_spec();
  s.seeds = {1, 2};
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "wideknap_suite_svg";
  std::filesystem::remove_all(dir);
  s.svg_dir = dir.string();
  const SuiteReport r = run_suite(s);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir / "small")) {
    CHECK(e.path().extension() == ".svg");
    ++files;
  }
  CHECK(files == static_cast<std::size_t>(r.passed));
  std::filesystem::remove_all(dir);
}
