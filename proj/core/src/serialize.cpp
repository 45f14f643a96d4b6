#include "nucgrow/serialize.hpp"

#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace nucgrow {

namespace {

constexpr char kAlphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 3 <= bytes.size(); i += 3) {
    const std::uint32_t v = (bytes[i] << 16) | (bytes[i + 1] << 8) | bytes[i + 2];
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += kAlphabet[(v >> 6) & 63];
    out += kAlphabet[v & 63];
  }
  const auto rest = bytes.size() - i;
  if (rest == 1) {
    const std::uint32_t v = bytes[i] << 16;
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += "==";
  } else if (rest == 2) {
    const std::uint32_t v = (bytes[i] << 16) | (bytes[i + 1] << 8);
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += kAlphabet[(v >> 6) & 63];
    out += '=';
  }
  return out;
}

int decode_char(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return c - 'a' + 26;
  if (c >= '0' && c <= '9') return c - '0' + 52;
  if (c == '+') return 62;
  if (c == '/') return 63;
  return -1;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
  std::vector<std::uint8_t> out;
  std::uint32_t acc = 0;
  int bits = 0;
  for (char c : text) {
    if (c == '=' || c == '\r' || c == '\n' || c == ' ') continue;
    const int v = decode_char(c);
    if (v < 0) throw std::runtime_error("invalid base64 character");
    acc = (acc << 6) | static_cast<std::uint32_t>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<std::uint8_t>((acc >> bits) & 0xff));
    }
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::istringstream in(text);
  std::int64_t v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw std::runtime_error("malformed integer list");
  return out;
}

}  // namespace

std::string to_text(const Configuration& config) {
  const auto& region = config.region();
  std::ostringstream out;
  out << "dims:";
  for (auto s : region.sides) out << ' ' << s;
  out << ", offset:";
  for (auto o : region.offset) out << ' ' << o;
  out << '\n';

  std::vector<std::uint8_t> bytes((config.volume() + 7) / 8, 0);
  config.for_each_occupied([&](std::uint64_t i) {
    bytes[i >> 3] |= static_cast<std::uint8_t>(1u << (i & 7));
  });
  out << base64_encode(bytes) << '\n';
  return out.str();
}

Configuration read_text(std::istream& in) {
  std::string header;
  if (!std::getline(in, header))
    throw std::runtime_error("missing configuration header");
  const auto dims_pos = header.find("dims:");
  const auto comma_pos = header.find(',', dims_pos);
  const auto off_pos = header.find("offset:", comma_pos);
  if (dims_pos == std::string::npos || comma_pos == std::string::npos ||
      off_pos == std::string::npos)
    throw std::runtime_error("malformed configuration header");
  const auto sides =
      parse_int_list(header.substr(dims_pos + 5, comma_pos - dims_pos - 5));
  const auto offset_raw = parse_int_list(header.substr(off_pos + 7));
  if (sides.size() != offset_raw.size())
    throw std::runtime_error("dims and offset lengths differ");

  BoxRegion region(Coord(offset_raw.begin(), offset_raw.end()), sides);
  std::string payload;
  if (!std::getline(in, payload))
    throw std::runtime_error("missing configuration payload");
  const auto bytes = base64_decode(payload);
  if (bytes.size() != (region.volume() + 7) / 8)
    throw std::runtime_error("payload size does not match region volume");

  Configuration config(region);
  const auto volume = region.volume();
  for (std::uint64_t i = 0; i < volume; ++i)
    if ((bytes[i >> 3] >> (i & 7)) & 1) config.set(i);
  return config;
}

Configuration from_text(const std::string& text) {
  std::istringstream in(text);
  return read_text(in);
}

std::string to_ascii(const Configuration& config) {
  const auto& region = config.region();
  const int d = region.dimension();
  if (d > 2) throw std::domain_error("ascii dump supports d <= 2 only");
  std::string out;
  if (d == 0) {
    out += config.test(std::uint64_t{0}) ? '#' : '.';
    out += '\n';
    return out;
  }
  const auto nx = region.sides[0];
  const auto ny = d == 2 ? region.sides[1] : 1;
  for (std::int64_t ry = ny - 1; ry >= 0; --ry) {
    for (std::int64_t rx = 0; rx < nx; ++rx) {
      Coord site{region.offset[0] + rx};
      if (d == 2) site.push_back(region.offset[1] + ry);
      out += config.test(site) ? '#' : '.';
    }
    out += '\n';
  }
  return out;
}

}  // namespace nucgrow
