#pragma once

#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace witt {

struct BudgetExhausted : std::runtime_error {
  BudgetExhausted() : std::runtime_error("search budget exhausted") {}
};

/// Wall-clock deadline for bounded searches. A default-constructed deadline never expires.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after_ms(long ms) {
    Deadline d;
    d.set_ = true;
    d.at_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
    return d;
  }
  /// Budget from WITT_LGP_BUDGET_MS, else the given default.
  static Deadline from_env(long default_ms) {
    long ms = default_ms;
    if (const char* s = std::getenv("WITT_LGP_BUDGET_MS")) {
      try {
        ms = std::stol(s);
      } catch (const std::exception&) {
      }
    }
    return after_ms(ms);
  }
  bool expired() const { return set_ && std::chrono::steady_clock::now() >= at_; }
  void check() const {
    if (expired()) throw BudgetExhausted();
  }

 private:
  bool set_ = false;
  std::chrono::steady_clock::time_point at_{};
};

}  // namespace witt
