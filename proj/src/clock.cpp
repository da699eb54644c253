#include "latbench/clock.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

namespace latbench {

namespace {
double now_monotonic() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}
}  // namespace

SteadyClock::SteadyClock() : start_(now_monotonic()) {}

double SteadyClock::seconds() { return now_monotonic() - start_; }

std::string SteadyClock::timestamp() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
  return buf;
}

ScriptedClock::ScriptedClock(std::vector<double> script, std::string stamp)
    : script_(std::move(script)), stamp_(std::move(stamp)) {}

double ScriptedClock::seconds() {
  const size_t i = reads_ < script_.size() ? reads_ : script_.size() - 1;
  ++reads_;
  return script_[i];
}

}  // namespace latbench
