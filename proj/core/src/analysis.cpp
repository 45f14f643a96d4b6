#include "nucgrow/analysis.hpp"

#include <stdexcept>

#include "bbox_forest.hpp"

namespace nucgrow {

Configuration project_columns(const Configuration& config, int axis) {
  const auto& region = config.region();
  const int d = region.dimension();
  if (d == 0) throw std::domain_error("cannot project a point lattice");
  if (axis < 0 || axis >= d)
    throw std::domain_error("projection axis outside dimension");

  Coord off;
  std::vector<std::int64_t> sides;
  for (int a = 0; a < d; ++a) {
    if (a == axis) continue;
    off.push_back(region.offset[a]);
    sides.push_back(region.sides[a]);
  }
  Configuration out(BoxRegion(std::move(off), std::move(sides)));
  config.for_each_occupied([&](std::uint64_t idx) {
    const auto site = region.coord_of(idx);
    Coord projected;
    projected.reserve(d - 1);
    for (int a = 0; a < d; ++a)
      if (a != axis) projected.push_back(site[a]);
    out.set(projected);
  });
  return out;
}

std::int64_t max_cluster_diameter(const Configuration& config) {
  if (config.empty()) return 0;
  const auto& region = config.region();
  detail::BBoxForest forest(region);
  std::int64_t max_diam = 0;
  Coord n;
  config.for_each_occupied([&](std::uint64_t idx) {
    const auto site = region.coord_of(idx);
    forest.activate(idx, site);
    std::uint64_t root = idx;
    n = site;
    for (int a = 0; a < region.dimension(); ++a) {
      // Ascending site order: each edge is united at its larger endpoint.
      n[a] = site[a] - 1;
      if (region.contains(n) && config.test(n))
        root = forest.unite(root, region.index_of(n));
      n[a] = site[a];
    }
    max_diam = std::max(max_diam, forest.diameter(root));
  });
  return max_diam;
}

bool contains(const Configuration& a, const Configuration& b) {
  if (!(a.region() == b.region()))
    throw std::domain_error("containment needs matching regions");
  bool ok = true;
  a.for_each_occupied([&](std::uint64_t idx) {
    if (!b.test(idx)) ok = false;
  });
  return ok;
}

}  // namespace nucgrow
