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

#include <string>
#include <vector>

#include "wideknap/geometry.hpp"
#include "wideknap/model.hpp"

namespace wideknap {

struct SvgOptions {
  int unit = 40;  // pixels per grid unit
  int margin = 12;
  std::string title;
};

// Box outline, placements as filled rectangles labelled with their ids and
// polylines (coordinates divided by polyline_scale) as colored chains.
std::string render_svg(const Box& box, const Packing& packing,
                       const std::vector<Polyline>& polylines = {},
                       int polyline_scale = 2, const SvgOptions& options = {});

}  // namespace wideknap
