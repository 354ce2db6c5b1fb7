#pragma once

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

namespace dcad {

/// Shortest decimal form that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::runtime_error("bad number: " + std::string(s));
  }
  return v;
}

inline std::string format_fixed(double v, int digits) {
  char buf[64];
  int n = std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  if (n < 0 || n >= static_cast<int>(sizeof(buf))) {
    throw std::runtime_error("double formatting failed");
  }
  return std::string(buf, n);
}

}  // namespace dcad
