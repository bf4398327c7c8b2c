#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <string>

namespace entdecay {

/// Shortest decimal representation that parses back to the exact same
/// double. Locale independent; NaN (any sign) becomes the token "nan".
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

}  // namespace entdecay
