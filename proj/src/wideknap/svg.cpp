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

#include "wideknap/svg.hpp"

#include <array>
#include <sstream>

namespace wideknap {
namespace {

constexpr std::array<const char*, 8> kFill = {"#8dd3c7", "#ffffb3", "#bebada",
                                              "#fb8072", "#80b1d3", "#fdb462",
                                              "#b3de69", "#fccde5"};
constexpr std::array<const char*, 5> kStroke = {"#d62728", "#1f77b4", "#2ca02c",
                                                "#9467bd", "#ff7f0e"};

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::string render_svg(const Box& box, const Packing& packing,
                       const std::vector<Polyline>& polylines, int polyline_scale,
                       const SvgOptions& options) {
  const int u = options.unit;
  const int m = options.margin;
  const int width = box.n1 * u + 2 * m;
  const int height = box.n2 * u + 2 * m;
  auto sx = [&](double x) { return m + x * u; };
  auto sy = [&](double y) { return m + (box.n2 - y) * u; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
     << "\">\n";
  if (!options.title.empty()) os << "  <title>" << options.title << "</title>\n";
  os << "  <rect x=\"" << m << "\" y=\"" << m << "\" width=\"" << box.n1 * u
     << "\" height=\"" << box.n2 * u
     << "\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (const Placement& p : packing.placements) {
    const PlacedRect& r = p.placed;
    const char* fill = kFill[static_cast<std::size_t>(p.id) % kFill.size()];
    os << "  <rect x=\"" << sx(r.x) << "\" y=\"" << sy(r.top()) << "\" width=\""
       << r.rect.w * u << "\" height=\"" << r.rect.h * u << "\" fill=\"" << fill
       << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    os << "  <text x=\"" << num(sx(r.x + r.rect.w / 2.0)) << "\" y=\""
       << num(sy(r.y + r.rect.h / 2.0)) << "\" font-size=\"" << u / 3
       << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << p.id
       << "</text>\n";
  }
  for (std::size_t i = 0; i < polylines.size(); ++i) {
    os << "  <polyline fill=\"none\" stroke=\"" << kStroke[i % kStroke.size()]
       << "\" stroke-width=\"3\" points=\"";
    bool first = true;
    for (const Point& q : polylines[i].breakpoints()) {
      if (!first) os << ' ';
      first = false;
      os << num(sx(static_cast<double>(q.x) / polyline_scale)) << ','
         << num(sy(static_cast<double>(q.y) / polyline_scale));
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace wideknap
