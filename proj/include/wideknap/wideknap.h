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

#ifndef WIDEKNAP_WIDEKNAP_H_
#define WIDEKNAP_WIDEKNAP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(WK_BUILDING_LIBRARY)
#define WK_API __attribute__((visibility("default")))
#else
#define WK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wk_status {
  WK_OK = 0,
  WK_ERROR_INVALID_ARGUMENT = 1,
  WK_ERROR_PARSE = 2,
  WK_ERROR_BUDGET = 3,
  WK_ERROR_INVARIANT = 4,
  WK_ERROR_IO = 5,
  WK_ERROR_INTERNAL = 6
} wk_status;

typedef struct wk_instance wk_instance;
typedef struct wk_packing wk_packing;

typedef enum wk_coloring_mode {
  WK_COLORING_AUTO = 0,
  WK_COLORING_EXHAUSTIVE = 1,
  WK_COLORING_RANDOMIZED = 2
} wk_coloring_mode;

typedef struct wk_solve_options {
  int64_t epsilon_num;
  int64_t epsilon_den;
  wk_coloring_mode coloring_mode;
  uint64_t coloring_seed;
  double failure_bound;
  uint64_t exhaustive_budget;
  uint64_t exact_node_budget;
  uint64_t dp_max_polylines;
  uint64_t dp_max_transitions;
  uint64_t dp_max_subsets;
} wk_solve_options;

/* Fills in the defaults: epsilon 1/2, automatic coloring mode, seed 1,
 * failure bound 0.01 and the library's default budgets. */
WK_API void wk_solve_options_init(wk_solve_options* options);

WK_API const char* wk_version(void);
WK_API const char* wk_status_name(wk_status status);
/* Message of the last failed call on this thread; empty after success. */
WK_API const char* wk_last_error(void);
/* Releases strings returned through char** out parameters. */
WK_API void wk_string_free(char* text);

/* Instances: {"box":{"w":W,"h":H},"k":K,"items":[{"id":I,"w":W,"h":H}]} */
WK_API wk_status wk_instance_parse(const char* json, wk_instance** out);
WK_API wk_status wk_instance_generate(uint64_t seed, const char* profile_json,
                                      wk_instance** out);
WK_API wk_status wk_instance_to_json(const wk_instance* instance, char** out);
WK_API size_t wk_instance_item_count(const wk_instance* instance);
WK_API void wk_instance_free(wk_instance* instance);

/* Packings: {"placements":[{"id":I,"x":X,"y":Y}]}, ids from the instance. */
WK_API wk_status wk_packing_parse(const wk_instance* instance, const char* json,
                                  wk_packing** out);
WK_API wk_status wk_packing_to_json(const wk_packing* packing, char** out);
WK_API size_t wk_packing_size(const wk_packing* packing);
WK_API void wk_packing_free(wk_packing* packing);

/* Runs the approximation scheme. report_json receives the verdict, the
 * guarantee and the trace. packing_out may be NULL; otherwise it receives
 * the packing, or NULL when the verdict is not "packing". */
WK_API wk_status wk_solve(const wk_instance* instance,
                          const wk_solve_options* options, char** report_json,
                          wk_packing** packing_out);

/* query: {"box":{"w","h"},"cells":[[x,y],...]?,"rects":[{"w","h","id"?}]} */
WK_API wk_status wk_exact(const char* query_json, uint64_t node_budget,
                          char** result_json);
WK_API wk_status wk_oracle(const wk_instance* instance, uint64_t node_budget,
                           char** result_json);
WK_API wk_status wk_verify(const wk_instance* instance, const wk_packing* packing,
                           char** report_json);
/* Structured dump of the packing; widths must be at least 2 ell. */
WK_API wk_status wk_structure(const wk_instance* instance,
                              const wk_packing* packing, int64_t epsilon_num,
                              int64_t epsilon_den, int ell, char** dump_json);
/* Conflict graph of the packing in Graphviz format. */
WK_API wk_status wk_inspect(const wk_instance* instance,
                            const wk_packing* packing, char** dot);
WK_API wk_status wk_render_packing(const wk_instance* instance,
                                   const wk_packing* packing, char** svg);
WK_API wk_status wk_render_structured(const char* dump_json, char** svg);
/* svg_dir may be NULL. table may be NULL. */
WK_API wk_status wk_run_suite(const char* suite_json, const char* svg_dir,
                              char** report_json, char** table);

#ifdef __cplusplus
}
#endif

#endif  // WIDEKNAP_WIDEKNAP_H_
