#include "nucgrow/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "bbox_forest.hpp"
#include "nucgrow/analysis.hpp"

namespace nucgrow {

namespace {

// Neighbour scan by index arithmetic; avoids per-call coordinate vectors.
class NeighborWalk {
 public:
  explicit NeighborWalk(const BoxRegion& region) : sides_(region.sides) {
    strides_.resize(sides_.size());
    std::uint64_t s = 1;
    for (std::size_t a = 0; a < sides_.size(); ++a) {
      strides_[a] = s;
      s *= static_cast<std::uint64_t>(sides_[a]);
    }
  }

  template <typename F>
  void for_each(std::uint64_t idx, F&& f) const {
    for (std::size_t a = 0; a < sides_.size(); ++a) {
      const auto side = static_cast<std::uint64_t>(sides_[a]);
      const auto q = (idx / strides_[a]) % side;
      if (q > 0) f(idx - strides_[a]);
      if (q + 1 < side) f(idx + strides_[a]);
    }
  }

 private:
  std::vector<std::int64_t> sides_;
  std::vector<std::uint64_t> strides_;
};

std::vector<double> rate_table(const ModelParams& params, ProcessVariant v) {
  std::vector<double> rates(static_cast<std::size_t>(2 * params.dimension + 1));
  for (int n = 0; n <= 2 * params.dimension; ++n)
    rates[static_cast<std::size_t>(n)] = variant_rate(params, v, n);
  return rates;
}

std::int64_t full_box_diameter(const BoxRegion& region) {
  std::int64_t m = 0;
  for (const auto s : region.sides) m = std::max(m, s - 1);
  return m;
}

Coord origin_coord(int d) { return Coord(static_cast<std::size_t>(d), 0); }

// Per-site occupied-neighbour contribution from the boundary alone; the
// in-region part is counted live by the engines.
std::vector<std::uint8_t> boundary_contribution(
    const BoxRegion& region, const BoundaryCondition& boundary) {
  std::vector<std::uint8_t> contrib(region.volume(), 0);
  if (boundary.kind() == BoundaryCondition::Kind::Empty) return contrib;
  const Configuration vacant(region);
  for (std::uint64_t i = 0; i < region.volume(); ++i)
    contrib[i] = static_cast<std::uint8_t>(
        occupied_neighbor_count(vacant, boundary, region.coord_of(i)));
  return contrib;
}

// Incremental evaluation of the stop clauses. Cluster geometry is kept in
// a union-find with bounding boxes only when some clause needs it.
class StopTracker {
 public:
  StopTracker(const StopRule& rule, const BoxRegion& region,
              const Configuration& initial)
      : rule_(&rule),
        region_(&region),
        crossed_(static_cast<std::size_t>(region.dimension()), 0) {
    site_index_.reserve(rule.atoms().size());
    for (const auto& atom : rule.atoms()) {
      std::uint64_t idx = 0;
      switch (atom.kind) {
        case StopKind::TimeLimit:
          limit_ = std::min(limit_, atom.limit);
          break;
        case StopKind::OriginOccupied:
          idx = region.index_of(origin_coord(region.dimension()));
          break;
        case StopKind::SiteOccupied:
          idx = region.index_of(atom.site);
          break;
        case StopKind::MaxClusterDiameter:
          if (atom.threshold > 0) needs_forest_ = true;
          break;
        case StopKind::Crossed:
          needs_forest_ = true;
          break;
        case StopKind::BoxFull:
          break;
      }
      site_index_.push_back(idx);
    }
    if (needs_forest_) {
      forest_.emplace(region);
      walk_.emplace(region);
    }
    initial.for_each_occupied(
        [&](std::uint64_t idx) { note_occupied(initial, idx); });
  }

  double time_limit() const { return limit_; }

  void note_occupied(const Configuration& config, std::uint64_t idx) {
    any_occupied_ = true;
    if (!forest_) return;
    forest_->activate(idx, region_->coord_of(idx));
    std::uint64_t root = idx;
    walk_->for_each(idx, [&](std::uint64_t nb) {
      if (config.test(nb) && forest_->active(nb))
        root = forest_->unite(root, nb);
    });
    max_diam_ = std::max(max_diam_, forest_->diameter(root));
    for (std::size_t a = 0; a < crossed_.size(); ++a)
      if (!crossed_[a] && forest_->crosses(root, static_cast<int>(a)))
        crossed_[a] = 1;
  }

  // First satisfied non-time clause in composition order. Time limits are
  // enforced against arrival times by the engine loop instead.
  std::optional<StopKind> first_satisfied(const Configuration& config) const {
    const auto& atoms = rule_->atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      switch (atoms[i].kind) {
        case StopKind::OriginOccupied:
        case StopKind::SiteOccupied:
          if (config.test(site_index_[i])) return atoms[i].kind;
          break;
        case StopKind::BoxFull:
          if (config.is_full()) return StopKind::BoxFull;
          break;
        case StopKind::MaxClusterDiameter:
          if (any_occupied_ && max_diam_ >= atoms[i].threshold)
            return StopKind::MaxClusterDiameter;
          break;
        case StopKind::Crossed:
          if (crossed_[static_cast<std::size_t>(atoms[i].axis)])
            return StopKind::Crossed;
          break;
        case StopKind::TimeLimit:
          break;
      }
    }
    return std::nullopt;
  }

 private:
  const StopRule* rule_;
  const BoxRegion* region_;
  std::vector<std::uint64_t> site_index_;
  std::vector<std::uint8_t> crossed_;
  std::optional<detail::BBoxForest> forest_;
  std::optional<NeighborWalk> walk_;
  std::int64_t max_diam_ = 0;
  double limit_ = std::numeric_limits<double>::infinity();
  bool needs_forest_ = false;
  bool any_occupied_ = false;
};

void validate_stop(const StopRule& rule, const BoxRegion& region,
                   ProcessVariant variant, const BoundaryCondition& boundary,
                   const Configuration& initial) {
  if (rule.atoms().empty())
    throw std::invalid_argument("stop rule has no clauses");
  const int d = region.dimension();
  for (const auto& atom : rule.atoms()) {
    switch (atom.kind) {
      case StopKind::OriginOccupied:
        if (!region.contains(origin_coord(d)))
          throw std::invalid_argument("origin lies outside the region");
        break;
      case StopKind::SiteOccupied:
        if (static_cast<int>(atom.site.size()) != d ||
            !region.contains(atom.site))
          throw std::invalid_argument("stop site lies outside the region");
        break;
      case StopKind::MaxClusterDiameter:
        if (atom.threshold < 0)
          throw std::invalid_argument("diameter threshold must be >= 0");
        break;
      case StopKind::Crossed:
        if (atom.axis < 0 || atom.axis >= d)
          throw std::invalid_argument(
              "crossing axis outside the region's dimensionality");
        break;
      case StopKind::TimeLimit:
        if (!std::isfinite(atom.limit) || atom.limit < 0)
          throw std::invalid_argument("time limit must be finite and >= 0");
        break;
      case StopKind::BoxFull:
        break;
    }
  }

  // A clause is reachable if the initial state already satisfies it, or if
  // the occupied set is guaranteed to keep growing until the box is full
  // (always true for the full process; true for the non-nucleating one as
  // soon as anything is occupied or the boundary feeds an edge site).
  const bool can_grow = variant == ProcessVariant::Full || !initial.empty() ||
                        boundary.touches(region);
  const std::int64_t full_diam = full_box_diameter(region);
  const std::int64_t initial_diam =
      initial.empty() ? -1 : max_cluster_diameter(initial);
  for (const auto& atom : rule.atoms()) {
    switch (atom.kind) {
      case StopKind::TimeLimit:
        return;
      case StopKind::OriginOccupied:
        if (can_grow || initial.test(origin_coord(d))) return;
        break;
      case StopKind::SiteOccupied:
        if (can_grow || initial.test(atom.site)) return;
        break;
      case StopKind::BoxFull:
        if (can_grow || initial.is_full()) return;
        break;
      case StopKind::MaxClusterDiameter:
        if (initial_diam >= atom.threshold) return;
        if (can_grow && atom.threshold <= full_diam) return;
        break;
      case StopKind::Crossed:
        if (can_grow || crosses(initial, atom.axis)) return;
        break;
    }
  }
  throw std::invalid_argument("no stop clause is reachable; add a time limit");
}

void check_run_inputs(const BoxRegion& region, const ModelParams& params,
                      const BoundaryCondition& boundary,
                      const Configuration& initial,
                      const GraphicalField& field) {
  require_valid(params);
  if (params.dimension != region.dimension())
    throw std::invalid_argument("params dimension does not match the region");
  if ((boundary.kind() == BoundaryCondition::Kind::Floor ||
       boundary.kind() == BoundaryCondition::Kind::Sandwich) &&
      (boundary.axis() < 0 || boundary.axis() >= region.dimension()))
    throw std::invalid_argument(
        "boundary axis outside the region's dimensionality");
  if (!(initial.region() == region))
    throw std::domain_error("initial configuration lives on a different region");
  const auto& fr = field.region();
  if (fr.dimension() != region.dimension())
    throw std::domain_error("field dimension does not match the region");
  for (int a = 0; a < region.dimension(); ++a)
    if (region.offset[a] < fr.offset[a] ||
        region.offset[a] + region.sides[a] > fr.offset[a] + fr.sides[a])
      throw std::domain_error("field does not cover the region");
}

}  // namespace

double variant_rate(const ModelParams& params, ProcessVariant variant, int n) {
  if (variant == ProcessVariant::NonNucleating && n == 0) return 0.0;
  return rate(params, n);
}

StopRule StopRule::origin_occupied() {
  StopRule r;
  r.atoms_.push_back({StopKind::OriginOccupied, {}, 0, -1, 0.0});
  return r;
}

StopRule StopRule::site_occupied(Coord site) {
  StopRule r;
  r.atoms_.push_back({StopKind::SiteOccupied, std::move(site), 0, -1, 0.0});
  return r;
}

StopRule StopRule::box_full() {
  StopRule r;
  r.atoms_.push_back({StopKind::BoxFull, {}, 0, -1, 0.0});
  return r;
}

StopRule StopRule::max_cluster_diameter(std::int64_t m) {
  StopRule r;
  r.atoms_.push_back({StopKind::MaxClusterDiameter, {}, m, -1, 0.0});
  return r;
}

StopRule StopRule::crossed(int axis) {
  StopRule r;
  r.atoms_.push_back({StopKind::Crossed, {}, 0, axis, 0.0});
  return r;
}

StopRule StopRule::time_limit(double t) {
  StopRule r;
  r.atoms_.push_back({StopKind::TimeLimit, {}, 0, -1, t});
  return r;
}

Trajectory run_graphical(const BoxRegion& region, const ModelParams& params,
                         const BoundaryCondition& boundary,
                         ProcessVariant variant, const Configuration& initial,
                         const GraphicalField& field, const StopRule& stop,
                         const RunOptions& options) {
  check_run_inputs(region, params, boundary, initial, field);
  validate_stop(stop, region, variant, boundary, initial);

  const auto volume = region.volume();
  const NeighborWalk walk(region);
  const auto rates = rate_table(params, variant);
  const auto contrib = boundary_contribution(region, boundary);

  Trajectory traj;
  traj.events_recorded = options.record_events;
  Configuration config = initial;
  StopTracker tracker(stop, region, initial);
  const double limit = tracker.time_limit();

  if (auto reason = tracker.first_satisfied(config)) {
    traj.final_config = std::move(config);
    traj.stop_reason = *reason;
    return traj;
  }

  std::vector<SiteStream> streams;
  streams.reserve(volume);
  for (std::uint64_t i = 0; i < volume; ++i)
    streams.emplace_back(field.stream(region.coord_of(i)));
  std::vector<double> pending_mark(volume, 0.0);

  using Entry = std::pair<double, std::uint64_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  for (std::uint64_t i = 0; i < volume; ++i) {
    if (config.test(i)) continue;
    const Arrival a = streams[i].next();
    pending_mark[i] = a.mark;
    heap.push({a.time, i});
  }

  bool stopped = false;
  while (!heap.empty()) {
    const auto [t, x] = heap.top();
    if (t > limit) {
      traj.stop_reason = StopKind::TimeLimit;
      traj.final_time = limit;
      stopped = true;
      break;
    }
    heap.pop();
    ++traj.arrivals_processed;
    int n = contrib[x];
    walk.for_each(x, [&](std::uint64_t nb) { n += config.test(nb) ? 1 : 0; });
    if (pending_mark[x] <= rates[static_cast<std::size_t>(n)]) {
      config.set(x);
      if (options.record_events) traj.events.push_back({t, x});
      tracker.note_occupied(config, x);
      if (auto reason = tracker.first_satisfied(config)) {
        traj.stop_reason = *reason;
        traj.final_time = t;
        stopped = true;
        break;
      }
    } else {
      const Arrival a = streams[x].next();
      pending_mark[x] = a.mark;
      heap.push({a.time, x});
    }
  }
  if (!stopped) {
    if (!std::isfinite(limit))
      throw std::logic_error("run ended with no stop clause satisfied");
    traj.stop_reason = StopKind::TimeLimit;
    traj.final_time = limit;
  }
  traj.final_config = std::move(config);
  return traj;
}

Trajectory run_fast(const BoxRegion& region, const ModelParams& params,
                    const BoundaryCondition& boundary, ProcessVariant variant,
                    const Configuration& initial, const GraphicalField& field,
                    const StopRule& stop, const RunOptions& options) {
  check_run_inputs(region, params, boundary, initial, field);
  validate_stop(stop, region, variant, boundary, initial);

  const auto volume = region.volume();
  const NeighborWalk walk(region);
  const auto rates = rate_table(params, variant);
  const auto contrib = boundary_contribution(region, boundary);

  Trajectory traj;
  traj.events_recorded = options.record_events;
  Configuration config = initial;
  StopTracker tracker(stop, region, initial);
  const double limit = tracker.time_limit();

  if (auto reason = tracker.first_satisfied(config)) {
    traj.final_config = std::move(config);
    traj.stop_reason = *reason;
    return traj;
  }

  std::vector<SiteStream> streams;
  streams.reserve(volume);
  for (std::uint64_t i = 0; i < volume; ++i)
    streams.emplace_back(field.stream(region.coord_of(i)));

  std::vector<std::uint16_t> ncount(volume, 0);
  std::vector<std::uint32_t> epoch(volume, 0);
  for (std::uint64_t i = 0; i < volume; ++i) {
    int n = contrib[i];
    walk.for_each(i, [&](std::uint64_t nb) { n += config.test(nb) ? 1 : 0; });
    ncount[i] = static_cast<std::uint16_t>(n);
  }

  using Entry = std::tuple<double, std::uint64_t, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  // Candidate occupation time from the site's own stream; memorylessness
  // makes discarding a stale candidate and redrawing law-preserving.
  const auto schedule = [&](std::uint64_t x, double now) {
    const double r = rates[ncount[x]];
    if (r <= 0.0) return;
    const double cand = now + streams[x].next_gap_only() / r;
    ++traj.arrivals_processed;
    // A candidate past the limit can never fire; a neighbour change
    // reschedules from a fresh draw, so dropping it is law-preserving.
    if (cand > limit) return;
    heap.push({cand, x, epoch[x]});
  };
  for (std::uint64_t i = 0; i < volume; ++i)
    if (!config.test(i)) schedule(i, 0.0);

  bool stopped = false;
  while (!heap.empty()) {
    const auto [t, x, ep] = heap.top();
    if (config.test(x) || ep != epoch[x]) {
      heap.pop();
      continue;
    }
    if (t > limit) {
      traj.stop_reason = StopKind::TimeLimit;
      traj.final_time = limit;
      stopped = true;
      break;
    }
    heap.pop();
    config.set(x);
    if (options.record_events) traj.events.push_back({t, x});
    tracker.note_occupied(config, x);
    if (auto reason = tracker.first_satisfied(config)) {
      traj.stop_reason = *reason;
      traj.final_time = t;
      stopped = true;
      break;
    }
    walk.for_each(x, [&](std::uint64_t nb) {
      if (config.test(nb)) return;
      ++ncount[nb];
      ++epoch[nb];
      schedule(nb, t);
    });
  }
  if (!stopped) {
    if (!std::isfinite(limit))
      throw std::logic_error("run ended with no stop clause satisfied");
    traj.stop_reason = StopKind::TimeLimit;
    traj.final_time = limit;
  }
  traj.final_config = std::move(config);
  return traj;
}

std::vector<Trajectory> run_coupled(const BoxRegion& region,
                                    const ModelParams& params,
                                    const std::vector<CoupledRun>& runs,
                                    const GraphicalField& field,
                                    const RunOptions& options) {
  for (const auto& run : runs)
    if (!(run.initial.region() == region))
      throw std::domain_error("coupled run initial on a different region");
  std::vector<Trajectory> out;
  out.reserve(runs.size());
  for (const auto& run : runs)
    out.push_back(run_graphical(region, params, run.boundary, run.variant,
                                run.initial, field, run.stop, options));
  return out;
}

Configuration multilayer_run(const BoxRegion& region,
                             const ModelParams& params, int slice_axis,
                             const GraphicalField& field, double horizon) {
  require_valid(params);
  if (params.dimension != region.dimension())
    throw std::invalid_argument("params dimension does not match the region");
  if (slice_axis < 0 || slice_axis >= region.dimension())
    throw std::domain_error("slice axis outside the region's dimensionality");
  if (region.sides[slice_axis] % 2 != 0)
    throw std::domain_error("slice axis extent must be even");
  if (!(horizon >= 0)) throw std::domain_error("horizon must be >= 0");

  Configuration out(region);
  for (std::int64_t h = 0; h < region.sides[slice_axis]; h += 2) {
    BoxRegion slice = region;
    slice.offset[slice_axis] += h;
    slice.sides[slice_axis] = 2;
    const Trajectory traj = run_graphical(
        slice, params, BoundaryCondition::sandwich(slice_axis),
        ProcessVariant::NonNucleating, Configuration(slice), field,
        StopRule::time_limit(horizon), RunOptions{.record_events = false});
    traj.final_config.for_each_occupied([&](std::uint64_t idx) {
      out.set(region.index_of(traj.final_config.region().coord_of(idx)));
    });
  }
  return out;
}

Configuration configuration_at(const Trajectory& trajectory, double t) {
  if (!trajectory.events_recorded)
    throw std::logic_error("trajectory did not record events");
  Configuration out = trajectory.final_config;
  for (auto it = trajectory.events.rbegin();
       it != trajectory.events.rend() && it->time > t; ++it)
    out.reset(it->site);
  return out;
}

}  // namespace nucgrow
