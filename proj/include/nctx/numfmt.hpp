#pragma once

#include <cstdio>
#include <string>

namespace nctx {

// 17 significant digits: enough to reproduce any double bit-for-bit on parse,
// and deterministic, so emitted JSON survives a parse/re-emit cycle unchanged.
inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace nctx
