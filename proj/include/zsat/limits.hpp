#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "zsat/errors.hpp"

namespace zsat {

/// Resource budgets for one solve. Defaults are unlimited.
struct Limits {
  uint64_t max_nodes = 0;    ///< cap on nodes allocated per diagram store (0 = off)
  double max_seconds = -1.0; ///< wall-clock cap (< 0 = off)

  bool has_node_limit() const { return max_nodes > 0; }
  bool has_time_limit() const { return max_seconds >= 0.0; }
};

/// Wall-clock deadline armed from Limits at solve start. Copyable; stores
/// poll it from their allocation path so deep recursions stay interruptible.
class Deadline {
 public:
  Deadline() = default;

  explicit Deadline(const Limits& limits) {
    if (limits.has_time_limit()) {
      at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(limits.max_seconds));
    }
  }

  void check() const {
    if (at_ && Clock::now() >= *at_) throw BudgetError("time budget exceeded");
  }

 private:
  using Clock = std::chrono::steady_clock;
  std::optional<Clock::time_point> at_;
};

}  // namespace zsat
