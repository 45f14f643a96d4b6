#pragma once

#include "nucgrow/lattice.hpp"

namespace nucgrow {

/// Fixed occupancy outside the simulated region. The dynamics never writes
/// to it; it only feeds neighbour counts of edge sites.
class BoundaryCondition {
 public:
  enum class Kind { Empty, Floor, Sandwich, External };

  /// Everything outside the region is vacant.
  static BoundaryCondition empty();
  /// One occupied layer immediately below the region along the axis
  /// (coordinate offset_axis - 1; the layer at -1 for regions based at 0).
  static BoundaryCondition floor(int axis);
  /// Occupied layers immediately below and above the region along the axis.
  static BoundaryCondition sandwich(int axis);
  /// Explicit occupancy on a shell region around the simulated box.
  static BoundaryCondition external(Configuration shell);

  Kind kind() const { return kind_; }
  int axis() const { return axis_; }
  const Configuration& shell() const { return shell_; }

  /// Occupancy of an out-of-region position adjacent to `region`.
  bool occupied(const BoxRegion& region, const Coord& position) const;

  /// True if some occupied boundary site is adjacent to the region
  /// (always true for Floor/Sandwich on a nonempty region).
  bool touches(const BoxRegion& region) const;

 private:
  Kind kind_ = Kind::Empty;
  int axis_ = 0;
  Configuration shell_;
};

/// Occupied neighbours of an in-region site, counting both in-region
/// occupancy and the boundary occupancy of out-of-region neighbours.
int occupied_neighbor_count(const Configuration& config,
                            const BoundaryCondition& boundary,
                            const Coord& site);

}  // namespace nucgrow
