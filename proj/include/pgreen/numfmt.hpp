#pragma once

#include <charconv>
#include <string>

namespace pgreen {

// Shortest decimal form that round-trips the exact double.  Used for every
// number written to graph files and CSV so that identical runs produce
// byte-identical output and save/load is bit-exact.
inline std::string fmt(double v) {
  char buf[40];
  auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

inline std::string fmt(int v) { return std::to_string(v); }

}  // namespace pgreen
