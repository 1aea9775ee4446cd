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

#include "wideknap/geometry.hpp"

#include <algorithm>
#include <limits>

#include "wideknap/errors.hpp"

namespace wideknap {

bool overlaps(const PlacedRect& a, const PlacedRect& b) {
  return std::max(a.left(), b.left()) < std::min(a.right(), b.right()) &&
         std::max(a.bottom(), b.bottom()) < std::min(a.top(), b.top());
}

bool inside_box(const PlacedRect& r, const Box& box) {
  return r.x >= 0 && r.y >= 0 && r.right() <= box.n1 && r.top() <= box.n2;
}

PlacedRect scaled(const PlacedRect& r, int factor) {
  return PlacedRect{{r.rect.w * factor, r.rect.h * factor},
                    r.x * factor,
                    r.y * factor};
}

Box scaled(const Box& b, int factor) {
  return Box{b.n1 * factor, b.n2 * factor};
}

Region::Region(Box bounds)
    : bounds_(bounds),
      cells_(static_cast<std::size_t>(std::max(bounds.n1, 0)) *
                 std::max(bounds.n2, 0),
             0) {}

Region Region::full(Box bounds) {
  Region r(bounds);
  std::fill(r.cells_.begin(), r.cells_.end(), 1);
  r.count_ = static_cast<int>(r.cells_.size());
  return r;
}

Region Region::from_rect(Box bounds, const PlacedRect& rect) {
  Region r(bounds);
  r.insert(rect);
  return r;
}

bool Region::contains(int cx, int cy) const {
  if (cx < 0 || cy < 0 || cx >= bounds_.n1 || cy >= bounds_.n2) return false;
  return cells_[index(cx, cy)] != 0;
}

bool Region::contains(const PlacedRect& r) const {
  if (!inside_box(r, bounds_)) return false;
  for (int cy = r.bottom(); cy < r.top(); ++cy) {
    for (int cx = r.left(); cx < r.right(); ++cx) {
      if (!cells_[index(cx, cy)]) return false;
    }
  }
  return true;
}

bool Region::contains(const Region& other) const {
  for (const Point& p : other.cells()) {
    if (!contains(p.x, p.y)) return false;
  }
  return true;
}

void Region::insert(int cx, int cy) {
  if (cx < 0 || cy < 0 || cx >= bounds_.n1 || cy >= bounds_.n2) {
    throw InvalidArgument("cell outside the region bounds");
  }
  auto& c = cells_[index(cx, cy)];
  if (!c) {
    c = 1;
    ++count_;
  }
}

void Region::erase(int cx, int cy) {
  if (!contains(cx, cy)) return;
  cells_[index(cx, cy)] = 0;
  --count_;
}

void Region::insert(const PlacedRect& r) {
  for (int cy = r.bottom(); cy < r.top(); ++cy) {
    for (int cx = r.left(); cx < r.right(); ++cx) insert(cx, cy);
  }
}

std::vector<Point> Region::cells() const {
  std::vector<Point> out;
  out.reserve(count_);
  for (int cy = 0; cy < bounds_.n2; ++cy) {
    for (int cx = 0; cx < bounds_.n1; ++cx) {
      if (cells_[index(cx, cy)]) out.push_back({cx, cy});
    }
  }
  return out;
}

Region Region::coarsened() const {
  Region out(Box{bounds_.n1 / 2, bounds_.n2 / 2});
  for (int cy = 0; cy < out.bounds_.n2; ++cy) {
    for (int cx = 0; cx < out.bounds_.n1; ++cx) {
      if (contains(2 * cx, 2 * cy) && contains(2 * cx + 1, 2 * cy) &&
          contains(2 * cx, 2 * cy + 1) && contains(2 * cx + 1, 2 * cy + 1)) {
        out.insert(cx, cy);
      }
    }
  }
  return out;
}

Region Region::refined() const {
  Region out(scaled(bounds_, 2));
  for (const Point& p : cells()) {
    out.insert(PlacedRect{{2, 2}, 2 * p.x, 2 * p.y});
  }
  return out;
}

std::string Region::key() const {
  std::string k;
  k.reserve(8 + (cells_.size() + 7) / 8);
  k.append(reinterpret_cast<const char*>(&bounds_.n1), sizeof(int));
  k.append(reinterpret_cast<const char*>(&bounds_.n2), sizeof(int));
  for (std::size_t i = 0; i < cells_.size(); i += 8) {
    unsigned char byte = 0;
    for (std::size_t j = 0; j < 8 && i + j < cells_.size(); ++j) {
      if (cells_[i + j]) byte |= static_cast<unsigned char>(1u << j);
    }
    k.push_back(static_cast<char>(byte));
  }
  return k;
}

Region carve(const Region& region, const PlacedRect& r) {
  if (!region.contains(r)) {
    throw InvalidArgument("carve: rectangle is not contained in the region");
  }
  Region out = region;
  for (int cy = r.bottom(); cy < r.top(); ++cy) {
    for (int cx = r.left(); cx < r.right(); ++cx) out.erase(cx, cy);
  }
  return out;
}

int boundary_complexity(const Region& region) {
  if (region.empty()) {
    throw InvalidArgument("boundary_complexity: empty region");
  }
  const Box& b = region.bounds();
  int corners = 0;
  for (int vy = 0; vy <= b.n2; ++vy) {
    for (int vx = 0; vx <= b.n1; ++vx) {
      const bool bl = region.contains(vx - 1, vy - 1);
      const bool br = region.contains(vx, vy - 1);
      const bool tl = region.contains(vx - 1, vy);
      const bool tr = region.contains(vx, vy);
      const int n = bl + br + tl + tr;
      if (n == 1 || n == 3) {
        corners += 1;
      } else if (n == 2 && bl == tr) {
        corners += 2;
      }
    }
  }
  return corners;
}

Region shift_zone(const Region& region, int ell, ShiftDirection direction) {
  if (ell < 1) throw InvalidArgument("shift_zone: ell must be positive");
  const Box& b = region.bounds();
  Region out(b);
  // A negative shift pulls cells in from the right, a positive one from
  // the left.
  const int lo = direction == ShiftDirection::negative ? 0 : -ell;
  const int hi = direction == ShiftDirection::positive ? 0 : ell;
  const int max_right =
      direction == ShiftDirection::negative ? b.n1 - ell : b.n1;
  for (int cy = 0; cy < b.n2; ++cy) {
    for (int cx = 0; cx + 1 <= max_right; ++cx) {
      for (int d = lo; d <= hi; ++d) {
        if (region.contains(cx + d, cy)) {
          out.insert(cx, cy);
          break;
        }
      }
    }
  }
  return out;
}

Polyline Polyline::from_points(std::vector<Point> points) {
  if (points.empty()) throw InvalidArgument("polyline: no breakpoints");
  if (points.front().x != 0) {
    throw InvalidArgument("polyline: must start at x = 0");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    const Point& a = points[i - 1];
    const Point& b = points[i];
    if (a.x != b.x && a.y != b.y) {
      throw InvalidArgument("polyline: segment is not axis-parallel");
    }
    if (b.x < a.x) throw InvalidArgument("polyline: not x-monotone");
  }
  std::vector<Point> out;
  auto collinear = [](const Point& a, const Point& b, const Point& c) {
    return (a.x == b.x && b.x == c.x) || (a.y == b.y && b.y == c.y);
  };
  for (const Point& p : points) {
    out.push_back(p);
    bool changed = true;
    while (changed) {
      changed = false;
      if (out.size() >= 2 && out[out.size() - 1] == out[out.size() - 2]) {
        out.pop_back();
        changed = true;
      } else if (out.size() >= 3 &&
                 collinear(out[out.size() - 3], out[out.size() - 2],
                           out.back())) {
        out.erase(out.end() - 2);
        changed = true;
      }
    }
  }
  Polyline pl;
  pl.points_ = std::move(out);
  if (pl.points_.size() < 2) {
    throw InvalidArgument("polyline: degenerate chain");
  }
  return pl;
}

Polyline Polyline::horizontal(int y, int width) {
  return from_points({{0, y}, {width, y}});
}

Polyline Polyline::from_heights(const std::vector<int>& heights) {
  if (heights.empty()) throw InvalidArgument("polyline: no columns");
  std::vector<Point> pts;
  pts.push_back({0, heights[0]});
  for (std::size_t c = 1; c < heights.size(); ++c) {
    if (heights[c] != heights[c - 1]) {
      const int x = static_cast<int>(c);
      pts.push_back({x, heights[c - 1]});
      pts.push_back({x, heights[c]});
    }
  }
  pts.push_back({static_cast<int>(heights.size()), heights.back()});
  return from_points(std::move(pts));
}

std::pair<int, int> Polyline::span_at(int x) const {
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const Point& a = points_[i - 1];
    const Point& b = points_[i];
    if (x < a.x || x > b.x) continue;
    lo = std::min({lo, a.y, b.y});
    hi = std::max({hi, a.y, b.y});
  }
  if (lo > hi) throw InvalidArgument("polyline: abscissa outside the chain");
  return {lo, hi};
}

int Polyline::column_height(int cx) const {
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const Point& a = points_[i - 1];
    const Point& b = points_[i];
    if (a.y == b.y && a.x <= cx && cx + 1 <= b.x) return a.y;
  }
  throw InvalidArgument("polyline: column outside the chain");
}

std::vector<int> Polyline::column_heights() const {
  std::vector<int> h;
  h.reserve(width());
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const Point& a = points_[i - 1];
    const Point& b = points_[i];
    if (a.y != b.y) continue;
    for (int x = a.x; x < b.x; ++x) h.push_back(a.y);
  }
  return h;
}

Polyline Polyline::scaled(int factor) const {
  std::vector<Point> pts = points_;
  for (Point& p : pts) {
    p.x *= factor;
    p.y *= factor;
  }
  return from_points(std::move(pts));
}

bool polyline_below(const Polyline& low, const Polyline& high) {
  if (low.width() != high.width()) {
    throw InvalidArgument("polyline_below: polylines span different widths");
  }
  // Column by column, so that a polyline is below itself even where it
  // has vertical segments.
  const std::vector<int> lo = low.column_heights();
  const std::vector<int> hi = high.column_heights();
  for (std::size_t cx = 0; cx < lo.size(); ++cx) {
    if (lo[cx] > hi[cx]) return false;
  }
  return true;
}

Region container_between(const Polyline& low, const Polyline& high, Box box) {
  if (low.width() != box.n1 || high.width() != box.n1) {
    throw InvalidArgument("container_between: polyline width differs from box");
  }
  if (!polyline_below(low, high)) {
    throw InvalidArgument("container_between: lower polyline is not below");
  }
  return cells_between(low, high, box);
}

Region cells_between(const Polyline& low, const Polyline& high, Box box) {
  if (low.width() != box.n1 || high.width() != box.n1) {
    throw InvalidArgument("cells_between: polyline width differs from box");
  }
  const std::vector<int> lo = low.column_heights();
  const std::vector<int> hi = high.column_heights();
  Region out(box);
  for (int cx = 0; cx < box.n1; ++cx) {
    const int from = std::max(lo[cx], 0);
    const int to = std::min(hi[cx], box.n2);
    for (int cy = from; cy < to; ++cy) out.insert(cx, cy);
  }
  return out;
}

bool polyline_crosses(const Polyline& p, const PlacedRect& r) {
  const auto& pts = p.breakpoints();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const Point& a = pts[i - 1];
    const Point& b = pts[i];
    if (a.y == b.y) {
      if (r.bottom() < a.y && a.y < r.top() &&
          std::max(a.x, r.left()) < std::min(b.x, r.right())) {
        return true;
      }
    } else {
      const int y0 = std::min(a.y, b.y);
      const int y1 = std::max(a.y, b.y);
      if (r.left() < a.x && a.x < r.right() &&
          std::max(y0, r.bottom()) < std::min(y1, r.top())) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace wideknap
