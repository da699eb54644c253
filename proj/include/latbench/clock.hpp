#pragma once

#include <string>
#include <vector>

namespace latbench {

/// Time source for the harness. All reads happen on the rank-0 worker, so a
/// scripted clock makes whole benchmark reports reproducible bit for bit.
class Clock {
public:
  virtual ~Clock() = default;
  virtual double seconds() = 0;            // monotonic
  virtual std::string timestamp() = 0;     // wall-clock label for reports
};

/// Real monotonic clock; seconds since construction.
class SteadyClock final : public Clock {
public:
  SteadyClock();
  double seconds() override;
  std::string timestamp() override;

private:
  double start_;
};

/// Returns a scripted sequence of times; repeats the last entry when the
/// script runs out. Timestamp is fixed.
class ScriptedClock final : public Clock {
public:
  explicit ScriptedClock(std::vector<double> script, std::string stamp = "1970-01-01T00:00:00Z");
  double seconds() override;
  std::string timestamp() override { return stamp_; }
  size_t reads() const { return reads_; }

private:
  std::vector<double> script_;
  std::string stamp_;
  size_t reads_ = 0;
};

}  // namespace latbench
