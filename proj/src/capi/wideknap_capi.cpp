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

#include "wideknap/wideknap.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "wideknap/conflict.hpp"
#include "wideknap/errors.hpp"
#include "wideknap/exact.hpp"
#include "wideknap/json_io.hpp"
#include "wideknap/oracle.hpp"
#include "wideknap/reports.hpp"
#include "wideknap/structure.hpp"
#include "wideknap/suite.hpp"
#include "wideknap/svg.hpp"

struct wk_instance {
  wideknap::Instance value;
};

struct wk_packing {
  wideknap::Packing value;
};

namespace {

thread_local std::string last_error;

wk_status fail(wk_status status, const char* message) {
  last_error = message;
  return status;
}

// Maps core exceptions to status codes.
template <typename F>
wk_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return WK_OK;
  } catch (const wideknap::ParseError& e) {
    return fail(WK_ERROR_PARSE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(WK_ERROR_PARSE, e.what());
  } catch (const wideknap::BudgetExceeded& e) {
    return fail(WK_ERROR_BUDGET, e.what());
  } catch (const wideknap::InvariantViolation& e) {
    return fail(WK_ERROR_INVARIANT, e.what());
  } catch (const wideknap::InvalidArgument& e) {
    return fail(WK_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(WK_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WK_ERROR_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw wideknap::InvalidArgument(what);
}

wideknap::Rational epsilon(int64_t num, int64_t den) {
  require(den != 0, "epsilon denominator is zero");
  return wideknap::Rational(num, den);
}

}  // namespace

extern "C" {

void wk_solve_options_init(wk_solve_options* options) {
  if (!options) return;
  const wideknap::SolveOptions d;
  options->epsilon_num = 1;
  options->epsilon_den = 2;
  options->coloring_mode = WK_COLORING_AUTO;
  options->coloring_seed = d.coloring_seed;
  options->failure_bound = d.failure_bound;
  options->exhaustive_budget = d.exhaustive_budget;
  options->exact_node_budget = d.exact_node_budget;
  options->dp_max_polylines = d.budgets.max_polylines;
  options->dp_max_transitions = d.budgets.max_transitions;
  options->dp_max_subsets = d.budgets.max_subsets;
}

const char* wk_version(void) { return "0.1.0"; }

const char* wk_status_name(wk_status status) {
  switch (status) {
    case WK_OK: return "ok";
    case WK_ERROR_INVALID_ARGUMENT: return "invalid-argument";
    case WK_ERROR_PARSE: return "parse-error";
    case WK_ERROR_BUDGET: return "budget-exceeded";
    case WK_ERROR_INVARIANT: return "invariant-violation";
    case WK_ERROR_IO: return "io-error";
    case WK_ERROR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* wk_last_error(void) { return last_error.c_str(); }

void wk_string_free(char* text) { std::free(text); }

wk_status wk_instance_parse(const char* json, wk_instance** out) {
  return guarded([&] {
    require(json && out, "null argument");
    auto inst = wideknap::instance_from_json(wideknap::parse_json_text(json));
    *out = new wk_instance{std::move(inst)};
  });
}

wk_status wk_instance_generate(uint64_t seed, const char* profile_json,
                               wk_instance** out) {
  return guarded([&] {
    require(out, "null argument");
    wideknap::GeneratorProfile profile;
    if (profile_json) {
      profile = wideknap::profile_from_json(wideknap::parse_json_text(profile_json));
    }
    *out = new wk_instance{wideknap::generate_instance(seed, profile)};
  });
}

wk_status wk_instance_to_json(const wk_instance* instance, char** out) {
  return guarded([&] {
    require(instance && out, "null argument");
    *out = copy_out(wideknap::to_json(instance->value).dump(2));
  });
}

size_t wk_instance_item_count(const wk_instance* instance) {
  return instance ? instance->value.items.size() : 0;
}

void wk_instance_free(wk_instance* instance) { delete instance; }

wk_status wk_packing_parse(const wk_instance* instance, const char* json,
                           wk_packing** out) {
  return guarded([&] {
    require(instance && json && out, "null argument");
    auto p = wideknap::packing_from_json(wideknap::parse_json_text(json),
                                         instance->value);
    *out = new wk_packing{std::move(p)};
  });
}

wk_status wk_packing_to_json(const wk_packing* packing, char** out) {
  return guarded([&] {
    require(packing && out, "null argument");
    *out = copy_out(wideknap::to_json(packing->value).dump(2));
  });
}

size_t wk_packing_size(const wk_packing* packing) {
  return packing ? packing->value.size() : 0;
}

void wk_packing_free(wk_packing* packing) { delete packing; }

wk_status wk_solve(const wk_instance* instance, const wk_solve_options* options,
                   char** report_json, wk_packing** packing_out) {
  return guarded([&] {
    require(instance && report_json, "null argument");
    wk_solve_options o;
    wk_solve_options_init(&o);
    if (options) o = *options;
    wideknap::SolveOptions so;
    if (o.coloring_mode == WK_COLORING_EXHAUSTIVE) {
      so.coloring_mode = wideknap::ColoringMode::exhaustive;
    } else if (o.coloring_mode == WK_COLORING_RANDOMIZED) {
      so.coloring_mode = wideknap::ColoringMode::randomized;
    }
    so.coloring_seed = o.coloring_seed;
    so.failure_bound = o.failure_bound;
    so.exhaustive_budget = o.exhaustive_budget;
    so.exact_node_budget = o.exact_node_budget;
    so.budgets.exact_node_budget = o.exact_node_budget;
    so.budgets.max_polylines = o.dp_max_polylines;
    so.budgets.max_transitions = o.dp_max_transitions;
    so.budgets.max_subsets = o.dp_max_subsets;
    const wideknap::SolveReport rep = wideknap::pas_solve(
        instance->value, epsilon(o.epsilon_num, o.epsilon_den), so);
    std::string text = wideknap::to_json(rep).dump(2);
    wk_packing* p = nullptr;
    if (packing_out && rep.packing) p = new wk_packing{*rep.packing};
    *report_json = copy_out(text);
    if (packing_out) *packing_out = p;
  });
}

wk_status wk_exact(const char* query_json, uint64_t node_budget, char** result_json) {
  return guarded([&] {
    require(query_json && result_json, "null argument");
    const wideknap::Json j = wideknap::parse_json_text(query_json);
    wideknap::ExactQuery q;
    q.region = wideknap::region_from_json(j);
    q.node_budget = node_budget;
    int next_id = 1;
    for (const wideknap::Json& r : j.at("rects")) {
      const int id = r.contains("id") ? r.at("id").get<int>() : next_id;
      next_id = id + 1;
      q.rects.push_back({id, wideknap::Rect{r.at("w").get<int>(), r.at("h").get<int>()}});
      require(q.rects.back().rect.w >= 1 && q.rects.back().rect.h >= 1,
              "rectangle dimensions must be positive");
    }
    *result_json = copy_out(wideknap::to_json(wideknap::exact_pack(q)).dump(2));
  });
}

wk_status wk_oracle(const wk_instance* instance, uint64_t node_budget,
                    char** result_json) {
  return guarded([&] {
    require(instance && result_json, "null argument");
    const auto r = wideknap::oracle::opt_pack(instance->value, node_budget);
    *result_json = copy_out(wideknap::to_json(r).dump(2));
  });
}

wk_status wk_verify(const wk_instance* instance, const wk_packing* packing,
                    char** report_json) {
  return guarded([&] {
    require(instance && packing && report_json, "null argument");
    const auto r = wideknap::validate_packing(instance->value, packing->value);
    wideknap::Json j = wideknap::to_json(r);
    j["size"] = packing->value.size();
    j["k"] = instance->value.k;
    j["meets_k"] = r.ok && static_cast<int>(packing->value.size()) >= instance->value.k;
    *report_json = copy_out(j.dump(2));
  });
}

wk_status wk_structure(const wk_instance* instance, const wk_packing* packing,
                       int64_t epsilon_num, int64_t epsilon_den, int ell,
                       char** dump_json) {
  return guarded([&] {
    require(instance && packing && dump_json, "null argument");
    const auto valid = wideknap::validate_packing(instance->value, packing->value);
    require(valid.ok, ("packing is invalid: " + valid.check).c_str());
    const auto sp = wideknap::structural_transform(
        packing->value, instance->value.box, epsilon(epsilon_num, epsilon_den), ell);
    const auto rep = wideknap::verify_structured(
        sp, instance->value.items, static_cast<int>(packing->value.size()));
    wideknap::Json j = wideknap::to_json(sp);
    j["verification"] = wideknap::to_json(rep);
    *dump_json = copy_out(j.dump(2));
  });
}

wk_status wk_inspect(const wk_instance* instance, const wk_packing* packing,
                     char** dot) {
  return guarded([&] {
    require(instance && packing && dot, "null argument");
    const auto g = wideknap::build_conflict_graph(packing->value, instance->value.box);
    *dot = copy_out(wideknap::to_dot(g));
  });
}

wk_status wk_render_packing(const wk_instance* instance, const wk_packing* packing,
                            char** svg) {
  return guarded([&] {
    require(instance && packing && svg, "null argument");
    *svg = copy_out(wideknap::render_svg(instance->value.box, packing->value));
  });
}

wk_status wk_render_structured(const char* dump_json, char** svg) {
  return guarded([&] {
    require(dump_json && svg, "null argument");
    const wideknap::Json j = wideknap::parse_json_text(dump_json);
    const wideknap::Box box{j.at("box").at("w").get<int>(), j.at("box").at("h").get<int>()};
    wideknap::Packing p;
    for (const wideknap::Json& e : j.at("placements")) {
      p.placements.push_back(
          {e.at("id").get<int>(),
           wideknap::PlacedRect{{e.at("w").get<int>(), e.at("h").get<int>()},
                                e.at("x").get<int>(),
                                e.at("y").get<int>()}});
    }
    std::vector<wideknap::Polyline> lines;
    if (j.contains("polylines")) {
      for (const wideknap::Json& pl : j.at("polylines")) {
        std::vector<wideknap::Point> pts;
        for (const wideknap::Json& q : pl) pts.push_back({q[0].get<int>(), q[1].get<int>()});
        lines.push_back(wideknap::Polyline::from_points(std::move(pts)));
      }
    }
    const int scale = j.value("coordinate_scale", 1);
    *svg = copy_out(wideknap::render_svg(box, p, lines, scale));
  });
}

wk_status wk_run_suite(const char* suite_json, const char* svg_dir,
                       char** report_json, char** table) {
  return guarded([&] {
    require(suite_json && report_json, "null argument");
    wideknap::SuiteSpec spec = wideknap::suite_from_json(wideknap::parse_json_text(suite_json));
    if (svg_dir) spec.svg_dir = svg_dir;
    const wideknap::SuiteReport rep = wideknap::run_suite(spec);
    std::string text = rep.json.dump(2);
    if (table) *table = copy_out(rep.table);
    *report_json = copy_out(text);
  });
}

}  // extern "C"
