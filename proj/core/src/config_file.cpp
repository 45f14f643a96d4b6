#include "nucgrow/config_file.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nucgrow {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": empty key");
    if (!out.emplace(key, value).second)
      throw std::runtime_error("config: duplicate key '" + key + "'");
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<double> out;
  double v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw std::runtime_error("malformed number list: " + text);
  return out;
}

ModelParams params_from_config(const std::string& text,
                               const std::vector<std::string>& extra_allowed) {
  auto kv = parse_key_values(text);
  for (const auto& [key, value] : kv) {
    (void)value;
    static const char* known[] = {"dim", "gammas", "beta", "rate_at_d"};
    const bool is_known =
        std::find(std::begin(known), std::end(known), key) != std::end(known) ||
        std::find(extra_allowed.begin(), extra_allowed.end(), key) !=
            extra_allowed.end();
    if (!is_known) throw std::runtime_error("config: unknown key '" + key + "'");
  }

  ModelParams p;
  if (auto it = kv.find("dim"); it != kv.end()) {
    p.dimension = std::stoi(it->second);
  } else {
    throw std::runtime_error("config: missing key 'dim'");
  }
  if (auto it = kv.find("gammas"); it != kv.end()) {
    p.gammas = parse_double_list(it->second);
  } else {
    throw std::runtime_error("config: missing key 'gammas'");
  }
  if (auto it = kv.find("beta"); it != kv.end()) {
    p.beta = std::stod(it->second);
  } else {
    throw std::runtime_error("config: missing key 'beta'");
  }
  if (auto it = kv.find("rate_at_d"); it != kv.end()) {
    if (it->second == "gamma_zero") {
      p.rate_at_d = RateAtD::GammaZero;
    } else if (it->second == "one") {
      p.rate_at_d = RateAtD::One;
    } else {
      throw std::runtime_error("config: rate_at_d must be gamma_zero or one");
    }
  }
  return p;
}

std::optional<std::uint64_t> seed_from_config(const std::string& text) {
  auto kv = parse_key_values(text);
  if (auto it = kv.find("seed"); it != kv.end())
    return std::stoull(it->second);
  return std::nullopt;
}

}  // namespace nucgrow
