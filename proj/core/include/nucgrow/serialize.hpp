#pragma once

#include <iosfwd>
#include <string>

#include "nucgrow/lattice.hpp"

namespace nucgrow {

/// Two-line text form:
///   dims: s_1 ... s_d, offset: o_1 ... o_d
///   <base64 of the packed bit field, row-major, axis 0 fastest>
/// Bit i of the field sits at byte i/8, bit i%8. Dimension zero emits empty
/// integer lists and encodes the single site in one byte.
std::string to_text(const Configuration& config);

/// Inverse of to_text. Throws std::runtime_error on malformed input.
Configuration from_text(const std::string& text);
Configuration read_text(std::istream& in);

/// Human-readable grid for d <= 2 ('#' occupied, '.' vacant); rows are the
/// second axis printed top-down from the maximal coordinate so a floor
/// boundary would sit under the picture. Throws std::domain_error for d > 2.
std::string to_ascii(const Configuration& config);

}  // namespace nucgrow
