#pragma once

#include <cstdlib>
#include <iostream>
#include <string>

namespace nctx::log {

enum class Level { quiet = 0, info = 1, debug = 2 };

// Verbosity comes from the NCTX_LOG environment variable:
// unset/"0" = quiet, "1"/"info" = info, "2"/"debug" = debug.
inline Level level() {
  static const Level cached = [] {
    const char* v = std::getenv("NCTX_LOG");
    if (v == nullptr) return Level::quiet;
    const std::string s(v);
    if (s == "2" || s == "debug") return Level::debug;
    if (s == "1" || s == "info") return Level::info;
    return Level::quiet;
  }();
  return cached;
}

template <typename... Args>
void info(Args&&... args) {
  if (level() >= Level::info) (std::cerr << "[nctx] " << ... << args) << '\n';
}

template <typename... Args>
void debug(Args&&... args) {
  if (level() >= Level::debug) (std::cerr << "[nctx] " << ... << args) << '\n';
}

}  // namespace nctx::log
