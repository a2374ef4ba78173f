#pragma once

#include <atomic>
#include <cstdint>

namespace wilsoncg {

// A double that counts every real addition, subtraction, multiplication and
// division performed on it. Negation and copies are free. The counter is
// process-wide, so only one counting run should be active at a time.
class CountingReal {
 public:
  constexpr CountingReal() = default;
  constexpr CountingReal(double v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr double value() const { return v_; }
  explicit constexpr operator double() const { return v_; }

  friend CountingReal operator+(CountingReal a, CountingReal b) {
    tick();
    return a.v_ + b.v_;
  }
  friend CountingReal operator-(CountingReal a, CountingReal b) {
    tick();
    return a.v_ - b.v_;
  }
  friend CountingReal operator*(CountingReal a, CountingReal b) {
    tick();
    return a.v_ * b.v_;
  }
  friend CountingReal operator/(CountingReal a, CountingReal b) {
    tick();
    return a.v_ / b.v_;
  }
  friend constexpr CountingReal operator-(CountingReal a) { return -a.v_; }

  friend constexpr bool operator==(CountingReal a, CountingReal b) { return a.v_ == b.v_; }

  static std::uint64_t count() { return counter_.load(std::memory_order_relaxed); }
  static void reset() { counter_.store(0, std::memory_order_relaxed); }

 private:
  static void tick() { counter_.fetch_add(1, std::memory_order_relaxed); }

  double v_ = 0.0;
  inline static std::atomic<std::uint64_t> counter_{0};
};

}  // namespace wilsoncg
