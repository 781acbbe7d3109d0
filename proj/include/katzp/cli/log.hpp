#pragma once

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

#include "katzp/exactcore/error.hpp"

namespace katzp::cli {

enum class LogLevel { Quiet, Info, Debug };

inline LogLevel parse_log_level(const char* raw) {
  const std::string v = raw ? raw : "info";
  if (v == "quiet") return LogLevel::Quiet;
  if (v == "info" || v.empty()) return LogLevel::Info;
  if (v == "debug") return LogLevel::Debug;
  fail(ErrorCode::InvalidInput, "KATZ_LOG must be quiet, info or debug (got '" + v + "')");
}

/// stderr logger; safe to call from concurrent prime pipelines.
class Log {
 public:
  explicit Log(LogLevel level = LogLevel::Info) : level_(level) {}
  static Log from_env() { return Log(parse_log_level(std::getenv("KATZ_LOG"))); }

  void info(const std::string& msg) const { write(LogLevel::Info, msg); }
  void debug(const std::string& msg) const { write(LogLevel::Debug, msg); }
  LogLevel level() const { return level_; }

 private:
  void write(LogLevel at, const std::string& msg) const {
    if (level_ < at) return;
    static std::mutex mu;
    std::lock_guard lock(mu);
    std::cerr << "[katzp] " << msg << '\n';
  }
  LogLevel level_;
};

}  // namespace katzp::cli
