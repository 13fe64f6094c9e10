#pragma once

#include <cstdlib>
#include <iostream>
#include <string>
#include <string_view>

namespace fpp::cli {

enum class LogLevel { Off = 0, Error, Warn, Info, Debug };

inline LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("FPPPART_LOG");
    const std::string_view v = env ? env : "warn";
    if (v == "off") return LogLevel::Off;
    if (v == "error") return LogLevel::Error;
    if (v == "info") return LogLevel::Info;
    if (v == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
  }();
  return level;
}

inline void log_at(LogLevel lvl, std::string_view tag, const std::string& msg) {
  if (static_cast<int>(lvl) <= static_cast<int>(log_level())) {
    std::cerr << "[fpppart] " << tag << ": " << msg << '\n';
  }
}

inline void log_error(const std::string& msg) { log_at(LogLevel::Error, "error", msg); }
inline void log_warn(const std::string& msg) { log_at(LogLevel::Warn, "warn", msg); }
inline void log_info(const std::string& msg) { log_at(LogLevel::Info, "info", msg); }
inline void log_debug(const std::string& msg) { log_at(LogLevel::Debug, "debug", msg); }

}  // namespace fpp::cli
