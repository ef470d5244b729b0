#pragma once

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>

namespace posemosaic {

enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

namespace detail {

inline LogLevel log_level_from_env() {
  const char* raw = std::getenv("POSEMOSAIC_LOG");
  if (!raw) return LogLevel::kWarn;
  const std::string v(raw);
  if (v == "error") return LogLevel::kError;
  if (v == "info") return LogLevel::kInfo;
  if (v == "debug") return LogLevel::kDebug;
  return LogLevel::kWarn;
}

inline LogLevel log_level() {
  static const LogLevel level = log_level_from_env();
  return level;
}

inline std::mutex& log_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace detail

inline void log(LogLevel level, const std::string& msg) {
  if (level > detail::log_level()) return;
  static const char* names[] = {"error", "warn", "info", "debug"};
  std::lock_guard lock(detail::log_mutex());
  std::cerr << "[" << names[static_cast<int>(level)] << "] " << msg << "\n";
}

inline void log_warn(const std::string& msg) { log(LogLevel::kWarn, msg); }
inline void log_info(const std::string& msg) { log(LogLevel::kInfo, msg); }
inline void log_error(const std::string& msg) { log(LogLevel::kError, msg); }

}  // namespace posemosaic
