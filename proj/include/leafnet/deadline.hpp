#pragma once

#include <chrono>
#include <optional>

namespace leafnet {

using Clock = std::chrono::steady_clock;

/// Cooperative per-thread time limit. Long searches call poll(), which throws
/// Error(TimedOut) once the limit installed by DeadlineScope has passed.
class Deadline {
 public:
  static void poll();
  static bool active();

 private:
  friend class DeadlineScope;
  static std::optional<Clock::time_point>& slot();
};

class DeadlineScope {
 public:
  explicit DeadlineScope(std::optional<std::chrono::duration<double>> limit);
  ~DeadlineScope();
  DeadlineScope(const DeadlineScope&) = delete;
  DeadlineScope& operator=(const DeadlineScope&) = delete;

 private:
  std::optional<Clock::time_point> previous_;
};

}  // namespace leafnet
