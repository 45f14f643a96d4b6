#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "nucgrow/lattice.hpp"
#include "nucgrow/model.hpp"

namespace nucgrow {

/// One Poisson arrival: cumulative time and the attached uniform mark.
struct Arrival {
  double time;
  double mark;
};

/// Deterministic per-site stream of unit-rate arrivals with i.i.d. uniform
/// marks. The whole stream is a pure function of the generator state it was
/// created from; walking it twice yields identical draws.
class SiteStream {
 public:
  explicit SiteStream(std::uint64_t state) : state_(state) {}

  /// Next arrival after the previously returned one. Gaps are strictly
  /// positive, so arrival times strictly increase.
  Arrival next();

  /// Consumes one whole step and returns its unit-exponential gap alone.
  /// Used by the accelerated engine, which needs raw exponentials.
  double next_gap_only();

  double time() const { return time_; }
  std::uint64_t consumed() const { return consumed_; }

 private:
  std::uint64_t state_;
  double time_ = 0.0;
  std::uint64_t consumed_ = 0;
};

/// The shared randomness of the graphical construction: for every lattice
/// site, an infinite arrival stream determined by (seed, site coordinates).
/// Runs that share a field share every arrival and mark, which is what makes
/// coupled processes comparable pathwise. Streams for sites of sub-boxes
/// coincide with the streams of the enclosing box.
class GraphicalField {
 public:
  GraphicalField(std::uint64_t seed, BoxRegion region);

  std::uint64_t seed() const { return seed_; }
  const BoxRegion& region() const { return region_; }

  /// Fresh cursor over the site's stream, starting before the first arrival.
  SiteStream stream(const Coord& site) const;
  SiteStream stream(std::uint64_t site_index) const;

  /// Generator state a site's stream starts from (engines precompute these).
  std::uint64_t site_state(const Coord& site) const;

  /// Earliest arrival strictly after `after`. Replayable: identical
  /// arguments give identical results. Arrivals consumed this way are cached
  /// per site up to the largest horizon requested so far; the cache is
  /// internally locked, so concurrent replay of one field is safe.
  Arrival next_event(const Coord& site, double after) const;

 private:
  struct SiteCache {
    std::vector<Arrival> arrivals;
    SiteStream cursor;
    explicit SiteCache(std::uint64_t state) : cursor(state) {}
  };

  std::uint64_t seed_;
  BoxRegion region_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::uint64_t, SiteCache> cache_;
};

/// Occupation snapshot: a site is occupied iff some arrival up to `horizon`
/// carries a mark at most rate(params, neighbor_count). Marginals are
/// Bernoulli(1 - exp(-rate * horizon)), independent across sites, and the
/// snapshot grows with both the horizon and the neighbour count.
Configuration bernoulli_snapshot(const GraphicalField& field,
                                 const ModelParams& params, int neighbor_count,
                                 double horizon);

}  // namespace nucgrow
