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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wideknap {

struct Rect {
  int w = 1;
  int h = 1;

  std::int64_t area() const { return static_cast<std::int64_t>(w) * h; }
  bool is_wide() const { return w >= h; }
  friend auto operator<=>(const Rect&, const Rect&) = default;
};

// Occupies [x, x + w] x [y, y + h].
struct PlacedRect {
  Rect rect;
  int x = 0;
  int y = 0;

  int left() const { return x; }
  int right() const { return x + rect.w; }
  int bottom() const { return y; }
  int top() const { return y + rect.h; }
  friend bool operator==(const PlacedRect&, const PlacedRect&) = default;
};

struct Box {
  int n1 = 1;
  int n2 = 1;
  friend bool operator==(const Box&, const Box&) = default;
};

struct Point {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

// Open interiors intersect.
bool overlaps(const PlacedRect& a, const PlacedRect& b);
bool inside_box(const PlacedRect& r, const Box& box);

PlacedRect scaled(const PlacedRect& r, int factor);
Box scaled(const Box& b, int factor);

// A set of unit cells [cx, cx + 1] x [cy, cy + 1] inside a bounding box.
class Region {
 public:
  Region() = default;
  explicit Region(Box bounds);

  static Region full(Box bounds);
  static Region from_rect(Box bounds, const PlacedRect& r);

  const Box& bounds() const { return bounds_; }
  bool contains(int cx, int cy) const;
  // Every cell of the rectangle is in the region.
  bool contains(const PlacedRect& r) const;
  bool contains(const Region& other) const;
  void insert(int cx, int cy);
  void erase(int cx, int cy);
  void insert(const PlacedRect& r);

  int size() const { return count_; }
  bool empty() const { return count_ == 0; }
  std::vector<Point> cells() const;
  const std::vector<std::uint8_t>& bits() const { return cells_; }

  // A cell of the coarse grid is kept iff all four of its subcells are.
  Region coarsened() const;
  Region refined() const;

  std::string key() const;

  friend bool operator==(const Region& a, const Region& b) {
    return a.bounds_ == b.bounds_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t index(int cx, int cy) const {
    return static_cast<std::size_t>(cy) * bounds_.n1 + cx;
  }

  Box bounds_{0, 0};
  std::vector<std::uint8_t> cells_;
  int count_ = 0;
};

// Throws InvalidArgument if the rectangle is not contained in the region.
Region carve(const Region& region, const PlacedRect& r);

// Number of maximal boundary segments. A pinch vertex where two cells meet
// diagonally contributes two corners.
int boundary_complexity(const Region& region);

enum class ShiftDirection { negative, positive, both };

// Horizontal extension by ell units, clipped to [0, n1 - ell] x [0, n2] for
// negative and to the bounding box otherwise.
Region shift_zone(const Region& region, int ell, ShiftDirection direction);

// x-monotone chain of alternating horizontal and vertical segments from
// x = 0 to x = width(). Always stored in canonical form: no zero-length
// segments, no two consecutive collinear segments.
class Polyline {
 public:
  Polyline() = default;

  static Polyline from_points(std::vector<Point> points);
  static Polyline horizontal(int y, int width);
  // heights[c] is the height over the open column (c, c + 1).
  static Polyline from_heights(const std::vector<int>& heights);

  const std::vector<Point>& breakpoints() const { return points_; }
  int complexity() const { return static_cast<int>(points_.size()) - 1; }
  int width() const { return points_.empty() ? 0 : points_.back().x; }

  // Closed y-interval occupied at integer abscissa x.
  std::pair<int, int> span_at(int x) const;
  int column_height(int cx) const;
  std::vector<int> column_heights() const;

  Polyline scaled(int factor) const;

  friend bool operator==(const Polyline&, const Polyline&) = default;

 private:
  std::vector<Point> points_;
};

// Every column height of low is at most the one of high, i.e. the cells
// below low are a subset of the cells below high.
bool polyline_below(const Polyline& low, const Polyline& high);

// Cells whose interiors lie above low and below high. Throws if low is not
// below high or the widths disagree with the box.
Region container_between(const Polyline& low, const Polyline& high, Box box);
// Same cell rule without the ordering check.
Region cells_between(const Polyline& low, const Polyline& high, Box box);

// The polyline meets the open interior of the rectangle.
bool polyline_crosses(const Polyline& p, const PlacedRect& r);

}  // namespace wideknap
