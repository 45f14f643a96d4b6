#pragma once

#include <cstdint>
#include <optional>

#include "nucgrow/lattice.hpp"

namespace nucgrow {

/// Threshold-2 closure: vacant sites with at least two occupied in-region
/// neighbours are filled until none remain. Idempotent, monotone, extensive;
/// every component of the result equals its own bounding box.
Configuration bootstrap_closure(const Configuration& config);

/// Sites within sup-norm distance strictly less than l of an occupied site.
/// l = 0 gives the empty configuration, l = 1 the identity.
Configuration dilate(const Configuration& config, std::int64_t l);

/// Complement-dual of dilate: keeps the sites farther than l - 1 (sup-norm)
/// from every vacant site.
Configuration erode(const Configuration& config, std::int64_t l);

/// True if the closure of config restricted to the sub-box covers it.
/// The sub-box must lie inside the configuration's region.
bool internally_spanned(const Configuration& config, const BoxRegion& subbox);

/// Witness for the diameter-dichotomy lemma: if the closure contains a
/// component of sup-diameter larger than 2k+1, returns a sub-box that is
/// internally spanned with diameter between k and 2k+1, located by realizing
/// the closure one site at a time and watching the maximal cluster diameter
/// jump. Returns nothing when no component is large enough; k = 0 is a
/// domain error.
std::optional<BoxRegion> al_witness(const Configuration& config,
                                    std::int64_t k);

/// Result of the two-sided envelope construction.
struct DominationEnvelopes {
  Configuration outer;  // closure of the dilated configuration
  Configuration inner;  // its erosion by ceil(l/2)
};

/// outer = bootstrap_closure(dilate(config, l)), inner = erode(outer,
/// ceil(l/2)); guarantees config <= inner <= outer. Requires l >= 2.
DominationEnvelopes domination_pipeline(const Configuration& config,
                                        std::int64_t l);

}  // namespace nucgrow
