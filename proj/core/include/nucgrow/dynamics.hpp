#pragma once

#include <cstdint>
#include <vector>

#include "nucgrow/boundary.hpp"
#include "nucgrow/lattice.hpp"
#include "nucgrow/model.hpp"
#include "nucgrow/random_field.hpp"

namespace nucgrow {

/// NonNucleating pins the zero-neighbour rate to zero and leaves every
/// other rate untouched, so growth can only spread from existing occupancy.
enum class ProcessVariant { Full, NonNucleating };

/// Occupation rate with the variant applied.
double variant_rate(const ModelParams& params, ProcessVariant variant, int n);

enum class StopKind {
  OriginOccupied,
  SiteOccupied,
  BoxFull,
  MaxClusterDiameter,
  Crossed,
  TimeLimit,
};

/// A stopping condition: one clause, or a first-of composition built with
/// operator|. Clauses are evaluated in composition order after every
/// occupation; time limits are checked against the next arrival instead.
/// A rule none of whose clauses is reachable for the given run is rejected
/// when the run starts.
class StopRule {
 public:
  struct Atom {
    StopKind kind;
    Coord site{};                 // SiteOccupied
    std::int64_t threshold = 0;   // MaxClusterDiameter; 0 = first occupation
    int axis = -1;                // Crossed
    double limit = 0.0;           // TimeLimit
  };

  static StopRule origin_occupied();
  static StopRule site_occupied(Coord site);
  static StopRule box_full();
  static StopRule max_cluster_diameter(std::int64_t m);
  static StopRule crossed(int axis);
  static StopRule time_limit(double t);

  const std::vector<Atom>& atoms() const { return atoms_; }

  friend StopRule operator|(StopRule a, const StopRule& b) {
    a.atoms_.insert(a.atoms_.end(), b.atoms_.begin(), b.atoms_.end());
    return a;
  }

 private:
  StopRule() = default;
  std::vector<Atom> atoms_;
};

/// One accepted occupation.
struct Event {
  double time;
  std::uint64_t site;
};

/// Outcome of a single run. Event times strictly increase and every site
/// appears at most once; final_config equals the initial configuration plus
/// the events. A TimeLimit stop pins final_time to the limit itself.
struct Trajectory {
  std::vector<Event> events;
  Configuration final_config;
  StopKind stop_reason = StopKind::TimeLimit;
  double final_time = 0.0;
  std::uint64_t arrivals_processed = 0;
  bool events_recorded = true;
};

struct RunOptions {
  bool record_events = true;
};

/// Exact realization of the graphical construction: arrivals are examined
/// in global time order (ties broken by site index), an arrival occupies
/// its empty site iff its mark is at most the current variant rate for the
/// site's occupied-neighbour count. Deterministic given the field.
Trajectory run_graphical(const BoxRegion& region, const ModelParams& params,
                         const BoundaryCondition& boundary,
                         ProcessVariant variant, const Configuration& initial,
                         const GraphicalField& field, const StopRule& stop,
                         const RunOptions& options = {});

/// Next-reaction engine with the same trajectory law as run_graphical but
/// no pathwise guarantee: every empty site holds one candidate occupation
/// time, resampled whenever its neighbour count changes.
Trajectory run_fast(const BoxRegion& region, const ModelParams& params,
                    const BoundaryCondition& boundary, ProcessVariant variant,
                    const Configuration& initial, const GraphicalField& field,
                    const StopRule& stop, const RunOptions& options = {});

struct CoupledRun {
  BoundaryCondition boundary;
  ProcessVariant variant;
  Configuration initial;
  StopRule stop;
};

/// Runs every entry against the identical field with the exact engine, so
/// ordered inputs yield pathwise-ordered trajectories.
std::vector<Trajectory> run_coupled(const BoxRegion& region,
                                    const ModelParams& params,
                                    const std::vector<CoupledRun>& runs,
                                    const GraphicalField& field,
                                    const RunOptions& options = {});

/// Partitions the region into height-2 slices along the axis, runs each
/// slice independently to the horizon (sandwich boundaries, non-nucleating
/// rates, shared field) and concatenates the final configurations. The
/// extent along the axis must be even.
Configuration multilayer_run(const BoxRegion& region,
                             const ModelParams& params, int slice_axis,
                             const GraphicalField& field, double horizon);

/// Configuration at an intermediate time, reconstructed from the event log
/// (requires a trajectory recorded with record_events).
Configuration configuration_at(const Trajectory& trajectory, double t);

}  // namespace nucgrow
