#pragma once

#include <cstdint>

#include "nucgrow/lattice.hpp"

namespace nucgrow {

/// Projection that forgets one axis: a column is occupied iff any site in it
/// is. The result lives on the region with that axis removed (dimension
/// d - 1). Projecting a zero-dimensional configuration is a domain error.
Configuration project_columns(const Configuration& config, int axis);

/// Largest sup-diameter over occupied clusters; 0 for the empty
/// configuration.
std::int64_t max_cluster_diameter(const Configuration& config);

/// Set containment a <= b of two configurations on the same region.
/// Differing regions are a domain error.
bool contains(const Configuration& a, const Configuration& b);

}  // namespace nucgrow
