#pragma once

#include <cstdint>
#include <vector>

#include "nucgrow/lattice.hpp"

namespace nucgrow::detail {

// Union-find over region sites carrying per-root coordinate bounding boxes.
// Supports the incremental cluster statistics the engines and the witness
// search need: current maximal sup-diameter and face contact per axis.
class BBoxForest {
 public:
  explicit BBoxForest(const BoxRegion& region)
      : region_(&region),
        d_(region.dimension()),
        parent_(region.volume(), kNone),
        lo_(static_cast<std::size_t>(d_) * region.volume()),
        hi_(static_cast<std::size_t>(d_) * region.volume()) {}

  bool active(std::uint64_t site) const { return parent_[site] != kNone; }

  // Registers an occupied site as its own singleton cluster.
  void activate(std::uint64_t site, const Coord& coord) {
    parent_[site] = site;
    for (int a = 0; a < d_; ++a) {
      lo_[site * d_ + a] = coord[a];
      hi_[site * d_ + a] = coord[a];
    }
  }

  std::uint64_t find(std::uint64_t site) {
    auto root = site;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[site] != root) {
      const auto next = parent_[site];
      parent_[site] = root;
      site = next;
    }
    return root;
  }

  // Merges the clusters of a and b; returns the surviving root.
  std::uint64_t unite(std::uint64_t a, std::uint64_t b) {
    auto ra = find(a), rb = find(b);
    if (ra == rb) return ra;
    if (ra > rb) std::swap(ra, rb);  // smaller index survives: deterministic
    parent_[rb] = ra;
    for (int i = 0; i < d_; ++i) {
      lo_[ra * d_ + i] = std::min(lo_[ra * d_ + i], lo_[rb * d_ + i]);
      hi_[ra * d_ + i] = std::max(hi_[ra * d_ + i], hi_[rb * d_ + i]);
    }
    return ra;
  }

  std::int64_t diameter(std::uint64_t root) const {
    std::int64_t diam = 0;
    for (int a = 0; a < d_; ++a)
      diam = std::max(diam, hi_[root * d_ + a] - lo_[root * d_ + a]);
    return diam;
  }

  bool crosses(std::uint64_t root, int axis) const {
    return lo_[root * d_ + axis] == region_->offset[axis] &&
           hi_[root * d_ + axis] ==
               region_->offset[axis] + region_->sides[axis] - 1;
  }

  BoxRegion bounding_box(std::uint64_t root) const {
    Coord off(d_);
    std::vector<std::int64_t> sides(d_);
    for (int a = 0; a < d_; ++a) {
      off[a] = lo_[root * d_ + a];
      sides[a] = hi_[root * d_ + a] - lo_[root * d_ + a] + 1;
    }
    return BoxRegion(std::move(off), std::move(sides));
  }

 private:
  static constexpr std::uint64_t kNone = ~std::uint64_t{0};
  const BoxRegion* region_;
  int d_;
  std::vector<std::uint64_t> parent_;
  std::vector<std::int64_t> lo_, hi_;
};

}  // namespace nucgrow::detail
