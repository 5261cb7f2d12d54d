#pragma once

#include <cstdio>
#include <string>

#include "aztec/version.hpp"

namespace aztec {

// Floating output policy: 12 significant digits.
inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// "# aztec 1.0.0" plus an optional note; first line of every output.
inline std::string output_header(const std::string& note = "") {
  std::string h = std::string("# ") + kToolName + ' ' + kVersion;
  if (!note.empty()) h += ' ' + note;
  return h;
}

}  // namespace aztec
