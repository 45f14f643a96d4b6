#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nucgrow {

/// Site coordinates. The vector length is the lattice dimension; a
/// zero-dimensional lattice has a single site with no coordinates.
using Coord = std::vector<std::int64_t>;

/// Axis-aligned box of integer sites: { offset + x : 0 <= x_a < sides_a }.
/// Dimension zero is allowed and denotes the singleton lattice.
struct BoxRegion {
  Coord offset;
  std::vector<std::int64_t> sides;

  BoxRegion() = default;
  BoxRegion(Coord offset_, std::vector<std::int64_t> sides_);

  /// Cube of the given side centred on the origin (offset -side/2 per axis).
  static BoxRegion centered_cube(int dimension, std::int64_t side);

  int dimension() const { return static_cast<int>(sides.size()); }

  /// Number of sites. The empty product makes the d = 0 volume 1.
  std::uint64_t volume() const;

  bool contains(const Coord& site) const;

  /// Row-major linear index, axis 0 fastest. The layout is part of the
  /// serialization contract and must not change.
  std::uint64_t index_of(const Coord& site) const;
  Coord coord_of(std::uint64_t index) const;

  /// Box grown by r sites in every direction along every axis.
  BoxRegion inflated(std::int64_t r) const;

  bool operator==(const BoxRegion& other) const = default;
};

/// Occupation field over a box region, packed 64 sites per word in the
/// region's row-major site order.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(BoxRegion region);

  static Configuration full(BoxRegion region);

  const BoxRegion& region() const { return region_; }
  std::uint64_t volume() const { return region_.volume(); }

  bool test(std::uint64_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }
  bool test(const Coord& site) const { return test(region_.index_of(site)); }

  /// Sets a site; returns false if it was already occupied.
  bool set(std::uint64_t index);
  bool set(const Coord& site) { return set(region_.index_of(site)); }
  void reset(std::uint64_t index);

  std::uint64_t occupied_count() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool is_full() const { return count_ == volume(); }

  void for_each_occupied(const std::function<void(std::uint64_t)>& fn) const;

  bool operator==(const Configuration& other) const;

 private:
  BoxRegion region_;
  std::vector<std::uint64_t> words_;
  std::uint64_t count_ = 0;
};

/// Nearest-neighbour cluster; sites are listed in increasing linear index.
struct Cluster {
  std::vector<Coord> sites;
};

/// In-region nearest neighbours of a site, in fixed order: axis by axis,
/// the -1 shift before the +1 shift. Throws std::domain_error if the site
/// lies outside the region.
std::vector<Coord> neighbors(const BoxRegion& region, const Coord& site);

/// Maximal nearest-neighbour connected components of the occupied set,
/// ordered by their minimal linear index.
std::vector<Cluster> connected_clusters(const Configuration& config);

/// Sup-norm diameter: max over axes of (max - min) coordinate. Zero for a
/// singleton, and zero in dimension zero where no axis exists.
std::int64_t diameter_sup(const Cluster& cluster);

/// True if one cluster touches both the minimal and the maximal face of the
/// region along the axis.
bool crosses(const Configuration& config, int axis);

}  // namespace nucgrow
