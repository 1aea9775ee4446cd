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

#include "wideknap/driver.hpp"
#include "wideknap/exact.hpp"
#include "wideknap/json_io.hpp"
#include "wideknap/oracle.hpp"
#include "wideknap/structure.hpp"

namespace wideknap {

Json to_json(const SolveReport& report);
Json to_json(const ExactResult& result);
Json to_json(const oracle::OptResult& result);
Json to_json(const ValidationReport& report);
// Polylines stay on the doubled grid; "coordinate_scale" says so.
Json to_json(const StructuredPacking& sp);
Json to_json(const StructuredReport& report);

}  // namespace wideknap
