#include "leafnet/deadline.hpp"

#include <cstdint>

#include "leafnet/errors.hpp"

namespace leafnet {

namespace {
thread_local std::optional<Clock::time_point> t_deadline;
thread_local std::uint32_t t_ticks = 0;
}  // namespace

std::optional<Clock::time_point>& Deadline::slot() { return t_deadline; }

bool Deadline::active() { return t_deadline.has_value(); }

void Deadline::poll() {
  if (!t_deadline || (++t_ticks & 0x3FFF) != 0) return;
  if (Clock::now() >= *t_deadline) throw Error(ErrorCode::TimedOut, "per-graph time limit exceeded");
}

DeadlineScope::DeadlineScope(std::optional<std::chrono::duration<double>> limit)
    : previous_(t_deadline) {
  if (limit) {
    t_deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(*limit);
    t_ticks = 0;
  }
}

DeadlineScope::~DeadlineScope() { t_deadline = previous_; }

}  // namespace leafnet
