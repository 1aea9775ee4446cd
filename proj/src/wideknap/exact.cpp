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

#include "wideknap/exact.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

namespace wideknap {
namespace {

// Free cells as one bit row per y.
class Grid {
 public:
  explicit Grid(const Region& r)
      : n1_(r.bounds().n1), n2_(r.bounds().n2), words_((n1_ + 63) / 64),
        bits_(static_cast<std::size_t>(words_) * n2_, 0) {
    for (const Point& p : r.cells()) set(p.x, p.y);
    free_ = r.size();
  }

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int free_cells() const { return free_; }

  bool get(int x, int y) const {
    if (x < 0 || y < 0 || x >= n1_ || y >= n2_) return false;
    return (word(x, y) >> (x & 63)) & 1u;
  }

  bool row_all(int y, int x0, int x1) const {
    for (int x = x0; x < x1; ++x) {
      if ((x & 63) == 0 && x + 64 <= x1) {
        if (word(x, y) != ~std::uint64_t{0}) return false;
        x += 63;
        continue;
      }
      if (!get(x, y)) return false;
    }
    return true;
  }

  bool fits(int x, int y, const Rect& r) const {
    if (x < 0 || y < 0 || x + r.w > n1_ || y + r.h > n2_) return false;
    for (int yy = y; yy < y + r.h; ++yy) {
      if (!row_all(yy, x, x + r.w)) return false;
    }
    return true;
  }

  bool flush(int x, int y, const Rect& r) const {
    bool blocked_left = x == 0;
    for (int yy = y; !blocked_left && yy < y + r.h; ++yy) {
      blocked_left = !get(x - 1, yy);
    }
    if (!blocked_left) return false;
    if (y == 0) return true;
    for (int xx = x; xx < x + r.w; ++xx) {
      if (!get(xx, y - 1)) return true;
    }
    return false;
  }

  void fill(int x, int y, const Rect& r, bool value) {
    for (int yy = y; yy < y + r.h; ++yy) {
      for (int xx = x; xx < x + r.w; ++xx) {
        std::uint64_t& w = bits_[static_cast<std::size_t>(yy) * words_ + (xx >> 6)];
        const std::uint64_t m = std::uint64_t{1} << (xx & 63);
        if (value) w |= m; else w &= ~m;
      }
    }
    free_ += value ? static_cast<int>(r.area()) : -static_cast<int>(r.area());
  }

  void append_key(std::string& out) const {
    out.append(reinterpret_cast<const char*>(bits_.data()),
               bits_.size() * sizeof(std::uint64_t));
  }

 private:
  std::uint64_t word(int x, int y) const {
    return bits_[static_cast<std::size_t>(y) * words_ + (x >> 6)];
  }
  void set(int x, int y) {
    bits_[static_cast<std::size_t>(y) * words_ + (x >> 6)] |=
        std::uint64_t{1} << (x & 63);
  }

  int n1_;
  int n2_;
  int words_;
  std::vector<std::uint64_t> bits_;
  int free_ = 0;
};

struct Shape {
  Rect rect;
  std::vector<int> ids;  // unused ids of this shape, consumed from the back
};

class Search {
 public:
  Search(const ExactQuery& q, std::vector<Shape> shapes)
      : grid_(q.region), shapes_(std::move(shapes)), budget_(q.node_budget) {
    for (const Shape& s : shapes_) remaining_area_ += s.rect.area() * s.ids.size();
  }

  // 1 found, 0 exhausted, -1 out of budget
  int run() { return solve(); }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Placement>& stack() const { return stack_; }

 private:
  std::string state_key() const {
    std::string k;
    grid_.append_key(k);
    for (const Shape& s : shapes_) k.push_back(static_cast<char>(s.ids.size()));
    return k;
  }

  int solve() {
    if (++nodes_ > budget_) return -1;
    if (remaining_area_ == 0) return 1;
    if (remaining_area_ > grid_.free_cells()) return 0;
    const std::string key = state_key();
    if (failed_.count(key)) return 0;
    for (Shape& s : shapes_) {
      if (s.ids.empty()) continue;
      const Rect r = s.rect;
      for (int y = 0; y + r.h <= grid_.n2(); ++y) {
        for (int x = 0; x + r.w <= grid_.n1(); ++x) {
          if (!grid_.fits(x, y, r) || !grid_.flush(x, y, r)) continue;
          const int id = s.ids.back();
          s.ids.pop_back();
          grid_.fill(x, y, r, false);
          remaining_area_ -= r.area();
          stack_.push_back({id, PlacedRect{r, x, y}});
          const int res = solve();
          if (res != 0) return res;
          stack_.pop_back();
          remaining_area_ += r.area();
          grid_.fill(x, y, r, true);
          s.ids.push_back(id);
        }
      }
    }
    failed_.insert(key);
    return 0;
  }

  Grid grid_;
  std::vector<Shape> shapes_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::int64_t remaining_area_ = 0;
  std::vector<Placement> stack_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

ExactResult exact_pack(const ExactQuery& query) {
  std::map<Rect, std::vector<int>> by_shape;
  for (const ExactItem& it : query.rects) by_shape[it.rect].push_back(it.id);
  std::vector<Shape> shapes;
  for (auto& [rect, ids] : by_shape) {
    std::reverse(ids.begin(), ids.end());
    shapes.push_back({rect, ids});
  }
  // Large pieces first fail faster.
  std::stable_sort(shapes.begin(), shapes.end(),
                   [](const Shape& a, const Shape& b) {
                     return a.rect.area() > b.rect.area();
                   });
  Search search(query, std::move(shapes));
  const int res = search.run();
  ExactResult out;
  out.nodes = search.nodes();
  if (res == 1) {
    out.status = ExactStatus::feasible;
    out.witness.placements = search.stack();
  } else {
    out.status = res == 0 ? ExactStatus::infeasible : ExactStatus::budget;
  }
  return out;
}

bool is_flush(const PlacedRect& r, const Region& free_cells) {
  if (!free_cells.contains(r)) return false;
  const bool left_moves =
      r.x > 0 && free_cells.contains(PlacedRect{r.rect, r.x - 1, r.y});
  const bool down_moves =
      r.y > 0 && free_cells.contains(PlacedRect{r.rect, r.x, r.y - 1});
  return !left_moves && !down_moves;
}

Packing push_bottom_left(Packing packing, const Region& region) {
  auto& pl = packing.placements;
  auto movable = [&](std::size_t i, const PlacedRect& moved) {
    if (!region.contains(moved)) return false;
    for (std::size_t j = 0; j < pl.size(); ++j) {
      if (j != i && overlaps(pl[j].placed, moved)) return false;
    }
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pl.size(); ++i) {
      PlacedRect left = pl[i].placed;
      --left.x;
      if (movable(i, left)) {
        pl[i].placed = left;
        changed = true;
        continue;
      }
      PlacedRect down = pl[i].placed;
      --down.y;
      if (movable(i, down)) {
        pl[i].placed = down;
        changed = true;
      }
    }
  }
  return packing;
}

const char* to_string(ExactStatus s) {
  switch (s) {
    case ExactStatus::feasible: return "feasible";
    case ExactStatus::infeasible: return "infeasible";
    case ExactStatus::budget: return "budget";
  }
  return "unknown";
}

}  // namespace wideknap
