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

// Command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

#include "wideknap/wideknap.h"

namespace {

// Exit codes: 0 success, 1 negative outcome (invalid packing, failed suite),
// otherwise 10 + wk_status.
constexpr int kExitNegative = 1;
constexpr int kExitIo = 10 + WK_ERROR_IO;

struct CliError : std::runtime_error {
  int code;
  CliError(int c, const std::string& m) : std::runtime_error(m), code(c) {}
};

void check(wk_status s) {
  if (s != WK_OK) {
    throw CliError(10 + s, std::string(wk_status_name(s)) + ": " + wk_last_error());
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw CliError(kExitIo, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw CliError(kExitIo, "cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

struct StringDeleter {
  void operator()(char* p) const { wk_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct InstanceDeleter {
  void operator()(wk_instance* p) const { wk_instance_free(p); }
};
using OwnedInstance = std::unique_ptr<wk_instance, InstanceDeleter>;

struct PackingDeleter {
  void operator()(wk_packing* p) const { wk_packing_free(p); }
};
using OwnedPacking = std::unique_ptr<wk_packing, PackingDeleter>;

std::string take(char* raw) { return OwnedString(raw).get(); }

OwnedInstance load_instance(const std::string& path) {
  wk_instance* inst = nullptr;
  check(wk_instance_parse(read_input(path).c_str(), &inst));
  return OwnedInstance(inst);
}

OwnedPacking load_packing(const wk_instance* inst, const std::string& path) {
  wk_packing* p = nullptr;
  check(wk_packing_parse(inst, read_input(path).c_str(), &p));
  return OwnedPacking(p);
}

void parse_epsilon(const std::string& text, int64_t& num, int64_t& den) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      num = std::stoll(text, &used);
      den = 1;
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      num = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument(text);
      const std::string rest = text.substr(slash + 1);
      den = std::stoll(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw CliError(10 + WK_ERROR_INVALID_ARGUMENT, "bad epsilon '" + text + "', expected p/q");
  }
  if (den <= 0 || num <= 0 || num >= den) {
    throw CliError(10 + WK_ERROR_INVALID_ARGUMENT, "epsilon must lie in (0,1)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Packing solver for wide rectangles"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wk_version()));

  std::string output;
  std::string epsilon = "1/2";
  uint64_t node_budget = 0;

  wk_solve_options opts;
  wk_solve_options_init(&opts);
  node_budget = opts.exact_node_budget;

  // solve
  auto* solve = app.add_subcommand("solve", "Run the approximation scheme on an instance");
  std::string instance_path;
  std::string packing_output;
  std::string coloring_mode = "auto";
  solve->add_option("instance", instance_path, "Instance JSON ('-' for stdin)")->required();
  solve->add_option("--epsilon", epsilon, "Accuracy as p/q")->capture_default_str();
  solve->add_option("--coloring-mode", coloring_mode, "Coloring family")
      ->check(CLI::IsMember({"auto", "exhaustive", "randomized"}))
      ->capture_default_str();
  solve->add_option("--coloring-seed,--seed", opts.coloring_seed, "Seed for randomized colorings")
      ->capture_default_str();
  solve->add_option("--coloring-failure-bound", opts.failure_bound,
                    "Target failure probability of randomized colorings")
      ->capture_default_str();
  solve->add_option("--budget-exhaustive", opts.exhaustive_budget,
                    "Largest exhaustive coloring family used in auto mode")
      ->capture_default_str();
  solve->add_option("--budget-nodes", opts.exact_node_budget, "Node budget of exact searches")
      ->capture_default_str();
  solve->add_option("--budget-polylines", opts.dp_max_polylines, "Polyline enumeration budget")
      ->capture_default_str();
  solve->add_option("--budget-transitions", opts.dp_max_transitions, "DP transition budget")
      ->capture_default_str();
  solve->add_option("--budget-subsets", opts.dp_max_subsets, "DP item subset budget")
      ->capture_default_str();
  solve->add_option("--output,-o", output, "Report destination (default stdout)");
  solve->add_option("--packing-output", packing_output, "Also write the packing here");

  // exact
  auto* exact = app.add_subcommand("exact", "Decide whether rectangles fit into a cell region");
  std::string query_path;
  exact->add_option("query", query_path, "Query JSON with box, optional cells, rects")->required();
  exact->add_option("--budget-nodes", node_budget, "Search node budget")->capture_default_str();
  exact->add_option("--output,-o", output, "Destination (default stdout)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force optimum of a small instance");
  oracle->add_option("instance", instance_path, "Instance JSON")->required();
  oracle->add_option("--budget-nodes", node_budget, "Search node budget")->capture_default_str();
  oracle->add_option("--output,-o", output, "Destination (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Validate a packing against its instance");
  std::string packing_path;
  verify->add_option("instance", instance_path, "Instance JSON")->required();
  verify->add_option("packing", packing_path, "Packing JSON")->required();
  verify->add_option("--output,-o", output, "Destination (default stdout)");

  // structure
  auto* structure = app.add_subcommand("structure", "Build the structured form of a packing");
  int ell = 1;
  structure->add_option("instance", instance_path, "Instance JSON")->required();
  structure->add_option("packing", packing_path, "Packing JSON")->required();
  structure->add_option("--epsilon", epsilon, "Accuracy as p/q")->capture_default_str();
  structure->add_option("--ell", ell, "Width parameter; item widths must be at least 2*ell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  structure->add_option("--output,-o", output, "Destination (default stdout)");

  // inspect
  auto* inspect = app.add_subcommand("inspect", "Print the conflict graph of a packing as DOT");
  inspect->add_option("instance", instance_path, "Instance JSON")->required();
  inspect->add_option("packing", packing_path, "Packing JSON")->required();
  inspect->add_option("--output,-o", output, "Destination (default stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  uint64_t seed = 1;
  std::string profile_path;
  gen->add_option("--seed", seed, "Generator seed")->capture_default_str();
  gen->add_option("--profile", profile_path, "Generator profile JSON");
  gen->add_option("--output,-o", output, "Destination (default stdout)");

  // render
  auto* render = app.add_subcommand("render", "Render a packing or a structured dump as SVG");
  std::string render_input;
  std::string render_instance;
  render->add_option("input", render_input, "Packing JSON, or a structured dump")->required();
  render->add_option("--instance", render_instance,
                     "Instance JSON; required when the input is a plain packing");
  render->add_option("--output,-o", output, "Destination (default stdout)");

  // suite
  auto* suite = app.add_subcommand("suite", "Run a seeded reproducibility suite");
  std::string suite_path;
  std::string svg_dir;
  std::string table_output;
  suite->add_option("spec", suite_path, "Suite JSON")->required();
  suite->add_option("--svg-dir", svg_dir, "Write SVG gallery under DIR/<suite>/");
  suite->add_option("--table", table_output, "Write the text table here ('-' for stdout)");
  suite->add_option("--output,-o", output, "Report destination (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      parse_epsilon(epsilon, opts.epsilon_num, opts.epsilon_den);
      opts.coloring_mode = coloring_mode == "exhaustive"   ? WK_COLORING_EXHAUSTIVE
                           : coloring_mode == "randomized" ? WK_COLORING_RANDOMIZED
                                                           : WK_COLORING_AUTO;
      auto inst = load_instance(instance_path);
      char* report = nullptr;
      wk_packing* raw = nullptr;
      check(wk_solve(inst.get(), &opts, &report, &raw));
      OwnedPacking packing(raw);
      write_output(output, take(report));
      if (!packing_output.empty() && packing) {
        char* text = nullptr;
        check(wk_packing_to_json(packing.get(), &text));
        write_output(packing_output, take(text));
      }
    } else if (*exact) {
      char* result = nullptr;
      check(wk_exact(read_input(query_path).c_str(), node_budget, &result));
      write_output(output, take(result));
    } else if (*oracle) {
      auto inst = load_instance(instance_path);
      char* result = nullptr;
      check(wk_oracle(inst.get(), node_budget, &result));
      write_output(output, take(result));
    } else if (*verify) {
      auto inst = load_instance(instance_path);
      auto packing = load_packing(inst.get(), packing_path);
      char* report = nullptr;
      check(wk_verify(inst.get(), packing.get(), &report));
      const std::string text = take(report);
      write_output(output, text);
      if (!nlohmann::json::parse(text).value("valid", false)) return kExitNegative;
    } else if (*structure) {
      int64_t num = 0;
      int64_t den = 1;
      parse_epsilon(epsilon, num, den);
      auto inst = load_instance(instance_path);
      auto packing = load_packing(inst.get(), packing_path);
      char* dump = nullptr;
      check(wk_structure(inst.get(), packing.get(), num, den, ell, &dump));
      write_output(output, take(dump));
    } else if (*inspect) {
      auto inst = load_instance(instance_path);
      auto packing = load_packing(inst.get(), packing_path);
      char* dot = nullptr;
      check(wk_inspect(inst.get(), packing.get(), &dot));
      write_output(output, take(dot));
    } else if (*gen) {
      std::string profile;
      if (!profile_path.empty()) profile = read_input(profile_path);
      wk_instance* raw = nullptr;
      check(wk_instance_generate(seed, profile_path.empty() ? nullptr : profile.c_str(), &raw));
      OwnedInstance inst(raw);
      char* text = nullptr;
      check(wk_instance_to_json(inst.get(), &text));
      write_output(output, take(text));
    } else if (*render) {
      char* svg = nullptr;
      if (render_instance.empty()) {
        check(wk_render_structured(read_input(render_input).c_str(), &svg));
      } else {
        auto inst = load_instance(render_instance);
        auto packing = load_packing(inst.get(), render_input);
        check(wk_render_packing(inst.get(), packing.get(), &svg));
      }
      write_output(output, take(svg));
    } else if (*suite) {
      char* report = nullptr;
      char* table = nullptr;
      check(wk_run_suite(read_input(suite_path).c_str(),
                         svg_dir.empty() ? nullptr : svg_dir.c_str(), &report, &table));
      const std::string report_text = take(report);
      const std::string table_text = take(table);
      write_output(output, report_text);
      if (!table_text.empty() && !table_output.empty()) write_output(table_output, table_text);
      if (!nlohmann::json::parse(report_text).at("summary").value("pass", false)) {
        return kExitNegative;
      }
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code;
  }
  return 0;
}
