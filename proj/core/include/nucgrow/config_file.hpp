#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nucgrow/model.hpp"

namespace nucgrow {

/// Flat `key = value` text: one pair per line, '#' starts a comment, list
/// values are comma or space separated. Duplicate keys are rejected.
std::map<std::string, std::string> parse_key_values(const std::string& text);

/// Model parameters read from the recognised keys dim, gammas, beta and
/// rate_at_d (values gamma_zero | one). Parsing is strict: a key outside
/// this set and `extra_allowed` throws std::runtime_error.
ModelParams params_from_config(
    const std::string& text,
    const std::vector<std::string>& extra_allowed = {});

/// Optional seed key from the same file, if present.
std::optional<std::uint64_t> seed_from_config(const std::string& text);

std::vector<double> parse_double_list(const std::string& text);

}  // namespace nucgrow
