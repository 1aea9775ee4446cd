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

#include "wideknap/suite.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wideknap/conflict.hpp"
#include "wideknap/errors.hpp"
#include "wideknap/structure.hpp"
#include "wideknap/svg.hpp"

namespace wideknap {
namespace {

bool wants(const SuiteSpec& spec, const char* property) {
  return std::find(spec.properties.begin(), spec.properties.end(), property) !=
         spec.properties.end();
}

std::string case_name(std::uint64_t seed, const Rational& eps) {
  return "seed" + std::to_string(seed) + "_eps" + std::to_string(eps.numerator()) +
         "-" + std::to_string(eps.denominator());
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

SuiteSpec suite_from_json(const Json& j) {
  SuiteSpec s;
  try {
    s.name = j.value("name", s.name);
    if (j.contains("profile")) s.profile = profile_from_json(j.at("profile"));
    if (j.contains("epsilons")) {
      for (const Json& e : j.at("epsilons")) {
        s.epsilons.push_back(parse_rational(e.get<std::string>()));
      }
    }
    if (j.contains("seeds")) {
      const Json& seeds = j.at("seeds");
      if (seeds.is_array()) {
        for (const Json& v : seeds) s.seeds.push_back(v.get<std::uint64_t>());
      } else {
        const auto from = seeds.at("from").get<std::uint64_t>();
        const auto count = seeds.at("count").get<std::uint64_t>();
        for (std::uint64_t i = 0; i < count; ++i) s.seeds.push_back(from + i);
      }
    }
    if (j.contains("properties")) {
      s.properties = j.at("properties").get<std::vector<std::string>>();
    }
    s.oracle_budget = j.value("oracle_budget", s.oracle_budget);
    if (j.contains("svg_dir")) s.svg_dir = j.at("svg_dir").get<std::string>();
    if (j.contains("coloring_mode")) {
      const std::string mode = j.at("coloring_mode").get<std::string>();
      if (mode == "exhaustive") {
        s.options.coloring_mode = ColoringMode::exhaustive;
      } else if (mode == "randomized") {
        s.options.coloring_mode = ColoringMode::randomized;
      } else if (mode != "auto") {
        throw ParseError("unknown coloring mode '" + mode + "'");
      }
    }
    s.options.coloring_seed = j.value("coloring_seed", s.options.coloring_seed);
    s.options.failure_bound = j.value("failure_bound", s.options.failure_bound);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("suite spec: ") + e.what());
  }
  return s;
}

SuiteReport run_suite(const SuiteSpec& spec) {
  SuiteReport rep;
  Json cases = Json::array();
  std::ostringstream table;
  table << "case                     box   n  opt  verdict              size  need  ratio  status\n";
  for (std::uint64_t seed : spec.seeds) {
    Instance inst = generate_instance(seed, spec.profile);
    const oracle::OptResult opt = oracle::opt_pack(inst, spec.oracle_budget);
    for (const Rational& eps : spec.epsilons) {
      const std::string name = case_name(seed, eps);
      Json c{{"case", name},
             {"seed", seed},
             {"epsilon", to_string(eps)},
             {"box", {{"w", inst.box.n1}, {"h", inst.box.n2}}},
             {"items", inst.items.size()},
             {"opt", opt.opt}};
      std::string status;
      std::string verdict = "-";
      std::int64_t size = 0;
      std::int64_t need = 0;
      double ratio = 0.0;
      std::vector<std::string> notes;
      if (opt.status == oracle::OracleStatus::budget) {
        status = "inconclusive";
        notes.push_back("oracle budget");
      } else if (opt.opt == 0) {
        status = "skipped";
      } else {
        inst.k = opt.opt;
        const SolveReport sr = pas_solve(inst, eps, spec.options);
        verdict = to_string(sr.verdict);
        need = sr.guarantee;
        c["branch"] = sr.trace.branch;
        c["colorings_tried"] = sr.trace.colorings_tried;
        if (sr.verdict == Verdict::inconclusive_budget) {
          status = "inconclusive";
          notes.push_back(sr.trace.budget_reason);
        } else if (sr.verdict == Verdict::no_packing) {
          status = "fail";
          notes.push_back("no-packing verdict although the oracle packs k items");
        } else {
          size = static_cast<std::int64_t>(sr.packing->size());
          ratio = static_cast<double>(size) / opt.opt;
          status = "pass";
          if (wants(spec, "validity") && !validate_packing(inst, *sr.packing).ok) {
            status = "fail";
            notes.push_back("invalid packing");
          }
          if (wants(spec, "oracle-ratio") && size < need) {
            status = "fail";
            notes.push_back("below the guarantee");
          }
          if (spec.svg_dir) {
            const std::filesystem::path dir =
                std::filesystem::path(*spec.svg_dir) / spec.name;
            std::filesystem::create_directories(dir);
            std::ofstream(dir / (name + ".svg"))
                << render_svg(inst.box, *sr.packing, {}, 2, SvgOptions{40, 12, name});
          }
        }
        int min_width = inst.box.n1;
        for (const Placement& p : opt.packing.placements) {
          min_width = std::min(min_width, p.placed.rect.w);
        }
        if (wants(spec, "paths")) {
          const ConflictGraph g = build_conflict_graph(opt.packing, inst.box);
          const auto family =
              short_disjoint_path_family(g, static_cast<int>(floor_of(1 / eps)));
          rep.paths_checked += family.size();
          for (const std::string& f : path_property_failures(g, family, min_width)) {
            rep.path_failures.push_back(name + ": " + f);
            notes.push_back(f);
            status = "fail";
          }
        }
        if (wants(spec, "structural") && min_width >= 2) {
          const StructuredPacking sp =
              structural_transform(opt.packing, inst.box, eps, min_width / 2);
          const StructuredReport vr = verify_structured(sp, inst.items, opt.opt);
          c["structural"] = vr.ok ? "pass" : "fail";
          if (!vr.ok) {
            status = "fail";
            notes.insert(notes.end(), vr.failures.begin(), vr.failures.end());
          }
        }
      }
      c["verdict"] = verdict;
      c["size"] = size;
      c["guarantee"] = need;
      c["ratio"] = fixed(ratio);
      c["status"] = status;
      if (!notes.empty()) c["notes"] = notes;
      cases.push_back(c);
      if (status == "pass") ++rep.passed;
      if (status == "fail") ++rep.failed;
      if (status == "inconclusive") ++rep.inconclusive;
      if (status == "skipped") ++rep.skipped;
      char line[160];
      std::snprintf(line, sizeof(line), "%-24s %2dx%-2d %2zu %4d  %-20s %4lld %5lld  %5s  %s\n",
                    name.c_str(), inst.box.n1, inst.box.n2, inst.items.size(), opt.opt,
                    verdict.c_str(), static_cast<long long>(size),
                    static_cast<long long>(need), fixed(ratio).c_str(), status.c_str());
      table << line;
    }
  }
  table << "passed " << rep.passed << ", failed " << rep.failed << ", inconclusive "
        << rep.inconclusive << ", skipped " << rep.skipped << "\n";
  rep.table = table.str();
  rep.json = Json{{"suite", spec.name},
                  {"cases", cases},
                  {"summary",
                   {{"cases", cases.size()},
                    {"passed", rep.passed},
                    {"failed", rep.failed},
                    {"inconclusive", rep.inconclusive},
                    {"skipped", rep.skipped},
                    {"paths_checked", rep.paths_checked},
                    {"pass", rep.ok()}}}};
  return rep;
}

}  // namespace wideknap
