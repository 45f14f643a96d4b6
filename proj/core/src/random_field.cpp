#include "nucgrow/random_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nucgrow {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t advance(std::uint64_t& s) {
  s += kGolden;
  return mix64(s);
}

// Uniform on (0,1): the half-offset keeps -log(u) finite and positive.
inline double open_unit(std::uint64_t x) {
  return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

Arrival SiteStream::next() {
  const double gap = -std::log(open_unit(advance(state_)));
  // Marks live on the open interval so a zero rate never accepts and a
  // unit rate always does under "mark <= rate".
  const double mark = open_unit(advance(state_));
  time_ += gap;
  ++consumed_;
  return {time_, mark};
}

double SiteStream::next_gap_only() {
  const double gap = -std::log(open_unit(advance(state_)));
  advance(state_);  // keep step size identical to next()
  time_ += gap;
  ++consumed_;
  return gap;
}

GraphicalField::GraphicalField(std::uint64_t seed, BoxRegion region)
    : seed_(seed), region_(std::move(region)) {}

std::uint64_t GraphicalField::site_state(const Coord& site) const {
  // Hash-combine the coordinates onto the seed; streams are keyed by the
  // site's absolute position so sub-box runs share them.
  std::uint64_t h = mix64(seed_ + kGolden);
  for (const auto c : site)
    h = mix64(h ^ (static_cast<std::uint64_t>(c) + kGolden + (h << 6) + (h >> 2)));
  return h;
}

SiteStream GraphicalField::stream(const Coord& site) const {
  if (!region_.contains(site)) throw std::domain_error("site outside region");
  return SiteStream(site_state(site));
}

SiteStream GraphicalField::stream(std::uint64_t site_index) const {
  return SiteStream(site_state(region_.coord_of(site_index)));
}

Arrival GraphicalField::next_event(const Coord& site, double after) const {
  if (!region_.contains(site)) throw std::domain_error("site outside region");
  if (!(after >= 0) && !(after < 0))  // NaN guard
    throw std::invalid_argument("next_event: after is NaN");
  const auto key = region_.index_of(site);

  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto& entry = cache_.try_emplace(key, site_state(site)).first->second;
  auto& arrivals = entry.arrivals;
  while (entry.cursor.time() <= after) arrivals.push_back(entry.cursor.next());
  if (arrivals.empty() || arrivals.back().time <= after)
    arrivals.push_back(entry.cursor.next());
  const auto it = std::upper_bound(
      arrivals.begin(), arrivals.end(), after,
      [](double t, const Arrival& a) { return t < a.time; });
  return *it;
}

Configuration bernoulli_snapshot(const GraphicalField& field,
                                 const ModelParams& params, int neighbor_count,
                                 double horizon) {
  require_valid(params);
  if (params.dimension != field.region().dimension())
    throw std::invalid_argument("field and params dimensions differ");
  if (!(horizon >= 0)) throw std::domain_error("horizon must be >= 0");
  const double p = rate(params, neighbor_count);

  Configuration out(field.region());
  const auto volume = field.region().volume();
  for (std::uint64_t i = 0; i < volume; ++i) {
    SiteStream s = field.stream(i);
    for (Arrival a = s.next(); a.time <= horizon; a = s.next()) {
      if (a.mark <= p) {
        out.set(i);
        break;
      }
    }
  }
  return out;
}

}  // namespace nucgrow
