#include "nucgrow/lattice.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "nucgrow/boundary.hpp"

namespace nucgrow {

BoxRegion::BoxRegion(Coord offset_, std::vector<std::int64_t> sides_)
    : offset(std::move(offset_)), sides(std::move(sides_)) {
  if (offset.size() != sides.size())
    throw std::invalid_argument("region offset and sides lengths differ");
  for (auto s : sides)
    if (s < 1) throw std::invalid_argument("region sides must be >= 1");
  volume();  // reject boxes whose site count overflows
}

BoxRegion BoxRegion::centered_cube(int dimension, std::int64_t side) {
  if (dimension < 0) throw std::invalid_argument("dimension must be >= 0");
  Coord off(dimension, -(side / 2));
  return BoxRegion(std::move(off), std::vector<std::int64_t>(dimension, side));
}

std::uint64_t BoxRegion::volume() const {
  std::uint64_t v = 1;
  for (auto s : sides) {
    const auto u = static_cast<std::uint64_t>(s);
    if (v > std::numeric_limits<std::uint64_t>::max() / u)
      throw std::overflow_error("region volume overflows 64 bits");
    v *= u;
  }
  return v;
}

bool BoxRegion::contains(const Coord& site) const {
  if (site.size() != offset.size()) return false;
  for (std::size_t a = 0; a < sides.size(); ++a) {
    const auto rel = site[a] - offset[a];
    if (rel < 0 || rel >= sides[a]) return false;
  }
  return true;
}

std::uint64_t BoxRegion::index_of(const Coord& site) const {
  if (!contains(site)) throw std::domain_error("site outside region");
  std::uint64_t idx = 0, stride = 1;
  for (std::size_t a = 0; a < sides.size(); ++a) {
    idx += static_cast<std::uint64_t>(site[a] - offset[a]) * stride;
    stride *= static_cast<std::uint64_t>(sides[a]);
  }
  return idx;
}

Coord BoxRegion::coord_of(std::uint64_t index) const {
  if (index >= volume()) throw std::domain_error("index outside region");
  Coord site(sides.size());
  for (std::size_t a = 0; a < sides.size(); ++a) {
    const auto s = static_cast<std::uint64_t>(sides[a]);
    site[a] = offset[a] + static_cast<std::int64_t>(index % s);
    index /= s;
  }
  return site;
}

BoxRegion BoxRegion::inflated(std::int64_t r) const {
  if (r < 0) throw std::invalid_argument("inflation radius must be >= 0");
  BoxRegion out = *this;
  for (std::size_t a = 0; a < sides.size(); ++a) {
    out.offset[a] -= r;
    out.sides[a] += 2 * r;
  }
  return out;
}

Configuration::Configuration(BoxRegion region)
    : region_(std::move(region)), words_((region_.volume() + 63) / 64, 0) {}

Configuration Configuration::full(BoxRegion region) {
  Configuration c(std::move(region));
  const auto v = c.volume();
  for (std::uint64_t i = 0; i < v / 64; ++i) c.words_[i] = ~std::uint64_t{0};
  if (v % 64) c.words_[v / 64] = (std::uint64_t{1} << (v % 64)) - 1;
  c.count_ = v;
  return c;
}

bool Configuration::set(std::uint64_t index) {
  auto& w = words_[index >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (index & 63);
  if (w & bit) return false;
  w |= bit;
  ++count_;
  return true;
}

void Configuration::reset(std::uint64_t index) {
  auto& w = words_[index >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (index & 63);
  if (w & bit) {
    w &= ~bit;
    --count_;
  }
}

void Configuration::for_each_occupied(
    const std::function<void(std::uint64_t)>& fn) const {
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      const int b = std::countr_zero(w);
      fn((static_cast<std::uint64_t>(wi) << 6) + static_cast<unsigned>(b));
      w &= w - 1;
    }
  }
}

bool Configuration::operator==(const Configuration& other) const {
  return region_ == other.region_ && words_ == other.words_;
}

std::vector<Coord> neighbors(const BoxRegion& region, const Coord& site) {
  if (!region.contains(site)) throw std::domain_error("site outside region");
  std::vector<Coord> out;
  out.reserve(2 * region.dimension());
  Coord n = site;
  for (int a = 0; a < region.dimension(); ++a) {
    for (int step : {-1, +1}) {
      n[a] = site[a] + step;
      if (region.contains(n)) out.push_back(n);
    }
    n[a] = site[a];
  }
  return out;
}

namespace {

// Linear indices of in-region neighbours, cheaper than the coordinate form.
inline int neighbor_indices(const BoxRegion& region, const Coord& site,
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

}  // namespace

std::vector<Cluster> connected_clusters(const Configuration& config) {
  const auto& region = config.region();
  const auto volume = region.volume();
  std::vector<bool> seen(volume, false);
  std::vector<Cluster> clusters;
  std::vector<std::uint64_t> stack, members;
  std::vector<std::uint64_t> buf(2 * static_cast<std::size_t>(
                                         std::max(1, region.dimension())));

  for (std::uint64_t start = 0; start < volume; ++start) {
    if (!config.test(start) || seen[start]) continue;
    members.clear();
    stack.assign(1, start);
    seen[start] = true;
    while (!stack.empty()) {
      const auto idx = stack.back();
      stack.pop_back();
      members.push_back(idx);
      const Coord site = region.coord_of(idx);
      const int n = neighbor_indices(region, site, buf.data());
      for (int i = 0; i < n; ++i) {
        const auto ni = buf[i];
        if (config.test(ni) && !seen[ni]) {
          seen[ni] = true;
          stack.push_back(ni);
        }
      }
    }
    std::sort(members.begin(), members.end());
    Cluster c;
    c.sites.reserve(members.size());
    for (auto idx : members) c.sites.push_back(region.coord_of(idx));
    clusters.push_back(std::move(c));
  }
  return clusters;
}

std::int64_t diameter_sup(const Cluster& cluster) {
  if (cluster.sites.empty())
    throw std::domain_error("diameter of an empty cluster");
  const auto d = cluster.sites.front().size();
  std::int64_t diam = 0;
  for (std::size_t a = 0; a < d; ++a) {
    std::int64_t lo = cluster.sites.front()[a], hi = lo;
    for (const auto& s : cluster.sites) {
      lo = std::min(lo, s[a]);
      hi = std::max(hi, s[a]);
    }
    diam = std::max(diam, hi - lo);
  }
  return diam;
}

bool crosses(const Configuration& config, int axis) {
  const auto& region = config.region();
  if (axis < 0 || axis >= region.dimension())
    throw std::domain_error("crossing axis outside dimension");
  const auto lo = region.offset[axis];
  const auto hi = region.offset[axis] + region.sides[axis] - 1;
  for (const auto& cluster : connected_clusters(config)) {
    bool touch_lo = false, touch_hi = false;
    for (const auto& s : cluster.sites) {
      touch_lo |= s[axis] == lo;
      touch_hi |= s[axis] == hi;
      if (touch_lo && touch_hi) return true;
    }
  }
  return false;
}

BoundaryCondition BoundaryCondition::empty() { return {}; }

BoundaryCondition BoundaryCondition::floor(int axis) {
  BoundaryCondition b;
  b.kind_ = Kind::Floor;
  b.axis_ = axis;
  return b;
}

BoundaryCondition BoundaryCondition::sandwich(int axis) {
  BoundaryCondition b;
  b.kind_ = Kind::Sandwich;
  b.axis_ = axis;
  return b;
}

BoundaryCondition BoundaryCondition::external(Configuration shell) {
  BoundaryCondition b;
  b.kind_ = Kind::External;
  b.shell_ = std::move(shell);
  return b;
}

bool BoundaryCondition::occupied(const BoxRegion& region,
                                 const Coord& position) const {
  switch (kind_) {
    case Kind::Empty:
      return false;
    case Kind::Floor:
    case Kind::Sandwich: {
      if (axis_ < 0 || axis_ >= region.dimension())
        throw std::domain_error("boundary axis outside dimension");
      const auto below = region.offset[axis_] - 1;
      const auto above = region.offset[axis_] + region.sides[axis_];
      if (position[axis_] != below &&
          (kind_ == Kind::Floor || position[axis_] != above))
        return false;
      // Layers span the region footprint in the remaining axes.
      for (int a = 0; a < region.dimension(); ++a) {
        if (a == axis_) continue;
        const auto rel = position[a] - region.offset[a];
        if (rel < 0 || rel >= region.sides[a]) return false;
      }
      return true;
    }
    case Kind::External:
      return shell_.region().contains(position) && shell_.test(position);
  }
  return false;
}

bool BoundaryCondition::touches(const BoxRegion& region) const {
  switch (kind_) {
    case Kind::Empty:
      return false;
    case Kind::Floor:
    case Kind::Sandwich:
      return region.dimension() > 0;
    case Kind::External: {
      bool hit = false;
      shell_.for_each_occupied([&](std::uint64_t idx) {
        if (hit) return;
        Coord pos = shell_.region().coord_of(idx);
        if (region.contains(pos)) return;
        for (std::size_t a = 0; a < pos.size() && !hit; ++a) {
          for (int step : {-1, +1}) {
            pos[a] += step;
            if (region.contains(pos)) hit = true;
            pos[a] -= step;
          }
        }
      });
      return hit;
    }
  }
  return false;
}

int occupied_neighbor_count(const Configuration& config,
                            const BoundaryCondition& boundary,
                            const Coord& site) {
  const auto& region = config.region();
  if (!region.contains(site)) throw std::domain_error("site outside region");
  int count = 0;
  Coord n = site;
  for (int a = 0; a < region.dimension(); ++a) {
    for (int step : {-1, +1}) {
      n[a] = site[a] + step;
      if (region.contains(n)) {
        count += config.test(n) ? 1 : 0;
      } else {
        count += boundary.occupied(region, n) ? 1 : 0;
      }
    }
    n[a] = site[a];
  }
  return count;
}

}  // namespace nucgrow
