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

#include "wideknap/reports.hpp"

namespace wideknap {

Json to_json(const SolveReport& report) {
  const SolveTrace& t = report.trace;
  Json trace{{"branch", t.branch},
             {"epsilon", to_string(t.eps)},
             {"epsilon_reduction", to_string(t.eps_b)},
             {"epsilon_dp", to_string(t.eps_a)},
             {"delta", to_string(t.delta)},
             {"thin_items", t.thin_count},
             {"k_dp", t.k_inner},
             {"coloring_mode", t.coloring_mode},
             {"coloring_family_size", t.family_size},
             {"colorings_tried", t.colorings_tried},
             {"dp_states", t.dp.states},
             {"dp_transitions", t.dp.transitions},
             {"dp_polylines", t.dp.polylines},
             {"dp_subsets", t.dp.subsets},
             {"dp_exact_calls", t.dp.exact_calls},
             {"dp_shortcut_hits", t.dp.shortcut_hits},
             {"exact_nodes", t.exact_nodes}};
  trace["coloring_index"] = t.coloring_index ? Json(*t.coloring_index) : Json(nullptr);
  if (t.residual_failure_probability) {
    trace["residual_failure_probability"] = *t.residual_failure_probability;
  }
  if (!t.budget_reason.empty()) trace["budget_reason"] = t.budget_reason;
  Json j{{"verdict", to_string(report.verdict)},
         {"guarantee", report.guarantee},
         {"trace", trace}};
  j["packing"] = report.packing ? to_json(*report.packing) : Json(nullptr);
  return j;
}

Json to_json(const ExactResult& result) {
  Json j{{"status", to_string(result.status)}, {"nodes", result.nodes}};
  if (result.status == ExactStatus::feasible) {
    Json pl = Json::array();
    for (const Placement& p : result.witness.placements) {
      pl.push_back(Json{{"id", p.id}, {"x", p.placed.x}, {"y", p.placed.y},
                        {"w", p.placed.rect.w}, {"h", p.placed.rect.h}});
    }
    j["witness"] = Json{{"placements", pl}};
  }
  return j;
}

Json to_json(const oracle::OptResult& result) {
  Json j{{"status", result.status == oracle::OracleStatus::budget ? "budget" : "ok"},
         {"opt", result.opt},
         {"nodes", result.nodes},
         {"packing", to_json(result.packing)}};
  return j;
}

Json to_json(const ValidationReport& report) {
  Json j{{"valid", report.ok}};
  if (!report.ok) {
    j["check"] = report.check;
    j["detail"] = report.detail;
  }
  return j;
}

Json to_json(const StructuredPacking& sp) {
  Json placements = Json::array();
  for (std::size_t i = 0; i < sp.packing.size(); ++i) {
    const Placement& p = sp.packing.placements[i];
    placements.push_back(Json{{"id", p.id}, {"x", p.placed.x}, {"y", p.placed.y},
                              {"w", p.placed.rect.w}, {"h", p.placed.rect.h},
                              {"region", sp.region_of[i]}});
  }
  Json polylines = Json::array();
  for (const Polyline& p : sp.polylines) polylines.push_back(to_json(p));
  Json paths = Json::array();
  for (const auto& ids : sp.family_ids) paths.push_back(ids);
  Json regions = Json::array();
  for (std::size_t i = 0; i < sp.heavy.size(); ++i) {
    Json r{{"index", i}, {"heavy", static_cast<bool>(sp.heavy[i])}};
    if (sp.heavy[i]) {
      Json w = Json::array();
      for (const Placement& p : sp.rounded_witness[i].placements) {
        w.push_back(Json{{"id", p.id}, {"x", p.placed.x}, {"y", p.placed.y},
                         {"w", p.placed.rect.w}, {"h", p.placed.rect.h}});
      }
      r["rounded_witness"] = w;
    }
    regions.push_back(r);
  }
  return Json{{"box", {{"w", sp.box.n1}, {"h", sp.box.n2}}},
              {"epsilon", to_string(sp.eps)},
              {"ell", sp.ell},
              {"source_size", sp.source_size},
              {"coordinate_scale", 2},
              {"placements", placements},
              {"polylines", polylines},
              {"paths", paths},
              {"regions", regions}};
}

Json to_json(const StructuredReport& report) {
  Json j{{"valid", report.ok}, {"failures", report.failures}};
  if (report.failing_region >= 0) j["failing_region"] = report.failing_region;
  return j;
}

}  // namespace wideknap
