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

#include "wideknap/model.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "wideknap/errors.hpp"

namespace wideknap {
namespace {

// mt19937_64 output is fully specified by the standard, unlike the
// distributions, so draws stay identical across standard libraries.
int draw(std::mt19937_64& rng, int lo, int hi) {
  if (hi < lo) throw InvalidArgument("generator: empty range");
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

ValidationReport fail(std::string check, std::string detail) {
  return ValidationReport{false, std::move(check), std::move(detail)};
}

std::string describe(const Placement& p) {
  return "id " + std::to_string(p.id) + " at (" + std::to_string(p.placed.x) +
         "," + std::to_string(p.placed.y) + ")";
}

ValidationReport validate_common(std::span<const Item> items,
                                 const Packing& packing,
                                 const Region& region) {
  std::map<int, const Item*> by_id;
  for (const Item& it : items) by_id[it.id] = &it;
  std::set<int> seen;
  for (const Placement& p : packing.placements) {
    auto it = by_id.find(p.id);
    if (it == by_id.end()) return fail("unknown_id", describe(p));
    if (!seen.insert(p.id).second) return fail("duplicate_id", describe(p));
    if (p.placed.rect != it->second->rect) {
      return fail("dimension_mismatch", describe(p));
    }
    if (!region.contains(p.placed)) return fail("out_of_region", describe(p));
  }
  const auto& pl = packing.placements;
  for (std::size_t i = 0; i < pl.size(); ++i) {
    for (std::size_t j = i + 1; j < pl.size(); ++j) {
      if (overlaps(pl[i].placed, pl[j].placed)) {
        return fail("overlap", describe(pl[i]) + " and " + describe(pl[j]));
      }
    }
  }
  return {};
}

}  // namespace

const Item* Instance::find(int id) const {
  for (const Item& it : items) {
    if (it.id == id) return &it;
  }
  return nullptr;
}

void Instance::check() const {
  if (box.n1 < 1 || box.n2 < 1) throw InvalidArgument("box must be non-empty");
  std::set<int> ids;
  for (const Item& it : items) {
    if (it.rect.w < 1 || it.rect.h < 1) {
      throw InvalidArgument("item " + std::to_string(it.id) +
                            " has a non-positive dimension");
    }
    if (!ids.insert(it.id).second) {
      throw InvalidArgument("duplicate item id " + std::to_string(it.id));
    }
  }
  if (k < 1 || k > static_cast<int>(items.size())) {
    throw InvalidArgument("k must lie in [1, number of items]");
  }
}

const Placement* Packing::find(int id) const {
  for (const Placement& p : placements) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

RoundingParams RoundingParams::make(const Rational& ell, int n1) {
  if (ell <= 0) throw InvalidArgument("rounding: ell must be positive");
  if (n1 < 1) throw InvalidArgument("rounding: box width must be positive");
  const std::int64_t c = floor_of(ell * ell / Rational(n1));
  return RoundingParams{ell, static_cast<int>(std::max<std::int64_t>(1, c))};
}

Rational aspect_ratio(const Box& box) {
  if (box.n1 < 1 || box.n2 < 1) throw InvalidArgument("box must be non-empty");
  const Rational r(box.n1, box.n2);
  return std::max(r, 1 / r);
}

Rect round_rect(const Rect& r, const RoundingParams& params) {
  const int c = params.granularity;
  return Rect{c * ((r.w + c - 1) / c), r.h};
}

std::vector<Item> round_items(std::span<const Item> items,
                              const RoundingParams& params) {
  std::vector<Item> out(items.begin(), items.end());
  for (Item& it : out) it.rect = round_rect(it.rect, params);
  return out;
}

std::vector<Item> reduce_k(std::span<const Item> items, int k) {
  if (k < 1) throw InvalidArgument("reduce_k: k must be positive");
  std::map<std::pair<int, int>, std::vector<const Item*>> classes;
  for (const Item& it : items) {
    if (!it.color) {
      throw InvalidArgument("reduce_k: item " + std::to_string(it.id) +
                            " has no color");
    }
    classes[{it.rect.w, *it.color}].push_back(&it);
  }
  std::vector<Item> out;
  for (auto& [key, members] : classes) {
    std::sort(members.begin(), members.end(),
              [](const Item* a, const Item* b) {
                return std::tie(a->rect.h, a->id) < std::tie(b->rect.h, b->id);
              });
    const std::size_t keep = std::min<std::size_t>(members.size(), k);
    for (std::size_t i = 0; i < keep; ++i) out.push_back(*members[i]);
  }
  std::sort(out.begin(), out.end(),
            [](const Item& a, const Item& b) { return a.id < b.id; });
  return out;
}

ValidationReport validate_packing(const Instance& instance,
                                  const Packing& packing) {
  return validate_common(instance.items, packing, Region::full(instance.box));
}

ValidationReport validate_packing_in_region(std::span<const Item> items,
                                            const Packing& packing,
                                            const Region& region) {
  return validate_common(items, packing, region);
}

Instance generate_instance(std::uint64_t seed,
                           const GeneratorProfile& profile) {
  if (profile.width_min > profile.box_w_max) {
    throw InvalidArgument("generator: minimum item width exceeds box width");
  }
  std::mt19937_64 rng(seed);
  Instance inst;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 10000) {
      throw InvalidArgument("generator: no box satisfies the aspect bound");
    }
    inst.box.n1 = draw(rng, std::max(profile.box_w_min, profile.width_min),
                       profile.box_w_max);
    inst.box.n2 = draw(rng, profile.box_h_min, profile.box_h_max);
    if (aspect_ratio(inst.box) <= profile.max_aspect) break;
  }
  const int n = draw(rng, profile.items_min, profile.items_max);
  for (int i = 0; i < n; ++i) {
    Item it;
    it.id = i + 1;
    it.rect.w = draw(rng, profile.width_min,
                     std::min(profile.width_max, inst.box.n1));
    const int h_max =
        profile.wide_only ? std::min(it.rect.w, inst.box.n2) : inst.box.n2;
    it.rect.h = draw(rng, 1, h_max);
    inst.items.push_back(it);
  }
  inst.k = std::clamp(profile.k, 1, std::max(1, n));
  return inst;
}

std::pair<Instance, Packing> generate_packing(std::uint64_t seed,
                                              const PackingProfile& profile) {
  if (profile.min_width > profile.box.n1) {
    throw InvalidArgument("generator: minimum width exceeds box width");
  }
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.box = profile.box;
  Packing packing;
  for (int a = 0; a < profile.attempts &&
                  static_cast<int>(packing.size()) < profile.max_items;
       ++a) {
    const int w = draw(rng, profile.min_width,
                       std::min(profile.max_width, profile.box.n1));
    const int h = draw(rng, 1, std::min({w, profile.max_height, profile.box.n2}));
    const int x = draw(rng, 0, profile.box.n1 - w);
    const int y = draw(rng, 0, profile.box.n2 - h);
    const PlacedRect r{{w, h}, x, y};
    bool clash = false;
    for (const Placement& p : packing.placements) {
      if (overlaps(p.placed, r)) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    const int id = static_cast<int>(packing.size()) + 1;
    packing.placements.push_back({id, r});
    inst.items.push_back(Item{id, r.rect, std::nullopt});
  }
  inst.k = std::max<int>(1, static_cast<int>(packing.size()));
  return {inst, packing};
}

}  // namespace wideknap
