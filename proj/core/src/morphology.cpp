#include "nucgrow/morphology.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "bbox_forest.hpp"

namespace nucgrow {

namespace {

// In-region neighbour indices written to out; returns how many.
int neighbor_indices(const BoxRegion& region, const Coord& site,
                     std::uint64_t* out) {
  int count = 0;
  Coord n = site;
  for (int a = 0; a < region.dimension(); ++a) {
    for (int step : {-1, +1}) {
      n[a] = site[a] + step;
      if (region.contains(n)) out[count++] = region.index_of(n);
    }
    n[a] = site[a];
  }
  return count;
}

int occupied_in_region(const Configuration& c, const Coord& site) {
  int count = 0;
  Coord n = site;
  for (int a = 0; a < c.region().dimension(); ++a) {
    for (int step : {-1, +1}) {
      n[a] = site[a] + step;
      if (c.region().contains(n) && c.test(n)) ++count;
    }
    n[a] = site[a];
  }
  return count;
}

}  // namespace

Configuration bootstrap_closure(const Configuration& config) {
  const auto& region = config.region();
  Configuration out = config;
  const int d = region.dimension();
  std::vector<std::uint64_t> buf(2 * std::max(1, d));
  std::vector<std::uint64_t> work;

  // Seed the work queue with the vacant neighbours of occupied sites.
  out.for_each_occupied([&](std::uint64_t idx) {
    const int n = neighbor_indices(region, region.coord_of(idx), buf.data());
    for (int i = 0; i < n; ++i)
      if (!out.test(buf[i])) work.push_back(buf[i]);
  });

  while (!work.empty()) {
    const auto idx = work.back();
    work.pop_back();
    if (out.test(idx)) continue;
    const auto site = region.coord_of(idx);
    if (occupied_in_region(out, site) < 2) continue;
    out.set(idx);
    const int n = neighbor_indices(region, site, buf.data());
    for (int i = 0; i < n; ++i)
      if (!out.test(buf[i])) work.push_back(buf[i]);
  }
  return out;
}

Configuration dilate(const Configuration& config, std::int64_t l) {
  if (l < 0) throw std::domain_error("dilation distance must be >= 0");
  const auto& region = config.region();
  if (l == 0) return Configuration(region);
  const auto r = l - 1;  // sup-ball radius
  if (r == 0) return config;

  // The sup-norm ball is a box, so dilation separates into one sliding
  // window pass per axis.
  Configuration cur = config;
  const int d = region.dimension();
  for (int a = 0; a < d; ++a) {
    const auto n = region.sides[a];
    std::uint64_t stride = 1;
    for (int b = 0; b < a; ++b)
      stride *= static_cast<std::uint64_t>(region.sides[b]);
    const std::uint64_t lines = region.volume() / static_cast<std::uint64_t>(n);

    Configuration next(region);
    std::vector<std::int64_t> dist(static_cast<std::size_t>(n));
    for (std::uint64_t line = 0; line < lines; ++line) {
      // Base index of this line: delete axis a from the mixed radix.
      const std::uint64_t low = line % stride;
      const std::uint64_t high = line / stride;
      const std::uint64_t base =
          low + high * stride * static_cast<std::uint64_t>(n);

      // Sentinel for "no occupied site on this side yet"; must stay above
      // any radius, so cap instead of incrementing past it.
      const std::int64_t none = std::numeric_limits<std::int64_t>::max() / 2;
      std::int64_t left = none;
      for (std::int64_t i = 0; i < n; ++i) {
        left = cur.test(base + static_cast<std::uint64_t>(i) * stride)
                   ? 0
                   : std::min(left + 1, none);
        dist[static_cast<std::size_t>(i)] = left;
      }
      std::int64_t right = none;
      for (std::int64_t i = n - 1; i >= 0; --i) {
        right = cur.test(base + static_cast<std::uint64_t>(i) * stride)
                    ? 0
                    : std::min(right + 1, none);
        if (std::min(dist[static_cast<std::size_t>(i)], right) <= r)
          next.set(base + static_cast<std::uint64_t>(i) * stride);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Configuration erode(const Configuration& config, std::int64_t l) {
  const auto& region = config.region();
  Configuration flipped(region);
  const auto volume = region.volume();
  for (std::uint64_t i = 0; i < volume; ++i)
    if (!config.test(i)) flipped.set(i);
  const auto grown = dilate(flipped, l);
  Configuration out(region);
  for (std::uint64_t i = 0; i < volume; ++i)
    if (!grown.test(i)) out.set(i);
  return out;
}

bool internally_spanned(const Configuration& config, const BoxRegion& subbox) {
  const auto& region = config.region();
  if (subbox.dimension() != region.dimension())
    throw std::domain_error("sub-box dimension mismatch");
  for (int a = 0; a < region.dimension(); ++a) {
    if (subbox.offset[a] < region.offset[a] ||
        subbox.offset[a] + subbox.sides[a] >
            region.offset[a] + region.sides[a])
      throw std::domain_error("sub-box not inside region");
  }
  Configuration restricted(subbox);
  const auto volume = subbox.volume();
  for (std::uint64_t i = 0; i < volume; ++i) {
    const auto site = subbox.coord_of(i);
    if (config.test(site)) restricted.set(i);
  }
  return bootstrap_closure(restricted).is_full();
}

namespace {

// Grows a connected subset of `cluster` site by site (breadth first from its
// minimal-index site) until the bounding box reaches diameter k, which it
// hits exactly since each added site stretches it by at most one.
BoxRegion trim_to_diameter(const BoxRegion& region,
                           const std::vector<std::uint64_t>& cluster,
                           std::int64_t k) {
  std::set<std::uint64_t> in_cluster(cluster.begin(), cluster.end());
  std::vector<std::uint64_t> queue{cluster.front()};
  std::set<std::uint64_t> taken;
  Coord lo = region.coord_of(cluster.front());
  Coord hi = lo;
  std::vector<std::uint64_t> buf(2 *
                                 static_cast<std::size_t>(region.dimension()));
  std::size_t head = 0;
  while (head < queue.size()) {
    const auto idx = queue[head++];
    if (!taken.insert(idx).second) continue;
    const auto site = region.coord_of(idx);
    std::int64_t diam = 0;
    for (int a = 0; a < region.dimension(); ++a) {
      lo[a] = std::min(lo[a], site[a]);
      hi[a] = std::max(hi[a], site[a]);
      diam = std::max(diam, hi[a] - lo[a]);
    }
    if (diam >= k) break;
    const int n = neighbor_indices(region, site, buf.data());
    for (int i = 0; i < n; ++i)
      if (in_cluster.count(buf[i]) && !taken.count(buf[i]))
        queue.push_back(buf[i]);
  }
  Coord off(lo);
  std::vector<std::int64_t> sides(region.dimension());
  for (int a = 0; a < region.dimension(); ++a) sides[a] = hi[a] - lo[a] + 1;
  return BoxRegion(std::move(off), std::move(sides));
}

}  // namespace

std::optional<BoxRegion> al_witness(const Configuration& config,
                                    std::int64_t k) {
  if (k <= 0) throw std::domain_error("witness scale k must be >= 1");
  const auto& region = config.region();
  const int d = region.dimension();

  // Precondition: the closure must contain a component beyond 2k+1.
  {
    const auto closure = bootstrap_closure(config);
    detail::BBoxForest forest(region);
    std::int64_t max_diam = 0;
    std::vector<std::uint64_t> buf(2 * std::max(1, d));
    closure.for_each_occupied([&](std::uint64_t idx) {
      const auto site = region.coord_of(idx);
      forest.activate(idx, site);
      std::uint64_t root = idx;
      const int n = neighbor_indices(region, site, buf.data());
      for (int i = 0; i < n; ++i)
        if (buf[i] < idx && forest.active(buf[i]))
          root = forest.unite(root, buf[i]);
      max_diam = std::max(max_diam, forest.diameter(root));
    });
    if (max_diam <= 2 * k + 1) return std::nullopt;
  }

  // Original clusters already at scale k: trim one down to diameter k.
  {
    std::vector<std::uint64_t> best;
    for (const auto& cluster : connected_clusters(config)) {
      Cluster c = cluster;
      if (diameter_sup(c) >= k) {
        best.reserve(c.sites.size());
        for (const auto& s : c.sites) best.push_back(region.index_of(s));
        break;  // clusters arrive ordered by minimal index
      }
    }
    if (!best.empty()) return trim_to_diameter(region, best, k);
  }

  // Otherwise realize the closure one site at a time (smallest eligible
  // index first) and return the first cluster whose diameter reaches k.
  Configuration cur = config;
  detail::BBoxForest forest(region);
  std::vector<std::uint64_t> buf(2 * std::max(1, d));
  std::set<std::uint64_t> eligible;

  const auto consider = [&](std::uint64_t idx) {
    if (!cur.test(idx) &&
        occupied_in_region(cur, region.coord_of(idx)) >= 2)
      eligible.insert(idx);
  };

  cur.for_each_occupied([&](std::uint64_t idx) {
    const auto site = region.coord_of(idx);
    forest.activate(idx, site);
    const int n = neighbor_indices(region, site, buf.data());
    for (int i = 0; i < n; ++i) {
      if (cur.test(buf[i])) {
        if (buf[i] < idx) forest.unite(idx, buf[i]);
      } else {
        consider(buf[i]);
      }
    }
  });

  while (!eligible.empty()) {
    const auto idx = *eligible.begin();
    eligible.erase(eligible.begin());
    const auto site = region.coord_of(idx);
    cur.set(idx);
    forest.activate(idx, site);
    std::uint64_t root = idx;
    const int n = neighbor_indices(region, site, buf.data());
    for (int i = 0; i < n; ++i) {
      if (cur.test(buf[i])) {
        root = forest.unite(root, buf[i]);
      } else {
        consider(buf[i]);
      }
    }
    if (forest.diameter(root) >= k) {
      const auto box = forest.bounding_box(root);
      // The jump past k is bounded, and the cluster spans its box.
      if (forest.diameter(root) > 2 * k + 1 ||
          !internally_spanned(config, box))
        throw std::logic_error("witness construction violated its bound");
      return box;
    }
  }
  throw std::logic_error("closure exceeded 2k+1 but no cluster reached k");
}

DominationEnvelopes domination_pipeline(const Configuration& config,
                                        std::int64_t l) {
  if (l < 2) throw std::domain_error("pipeline distance must be >= 2");
  DominationEnvelopes out;
  out.outer = bootstrap_closure(dilate(config, l));
  out.inner = erode(out.outer, (l + 1) / 2);
  return out;
}

}  // namespace nucgrow
