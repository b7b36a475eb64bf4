#pragma once

#include <cmath>
#include <limits>

namespace beerquery {

// Extended nonnegative edge/path weight: a finite positive value or +infinity.
// IEEE semantics give exactly the algebra we need: +inf absorbs addition and
// loses every min, and comparisons stay total.
class Weight {
 public:
  constexpr Weight() : value_(0.0) {}
  constexpr explicit Weight(double v) : value_(v) {}

  static constexpr Weight infinity() {
    return Weight(std::numeric_limits<double>::infinity());
  }
  static constexpr Weight zero() { return Weight(0.0); }

  constexpr double value() const { return value_; }
  constexpr bool finite() const {
    return value_ != std::numeric_limits<double>::infinity();
  }

  friend constexpr Weight operator+(Weight a, Weight b) {
    return Weight(a.value_ + b.value_);
  }
  friend constexpr Weight operator-(Weight a, Weight b) {
    return Weight(a.value_ - b.value_);
  }
  Weight& operator+=(Weight o) {
    value_ += o.value_;
    return *this;
  }
  friend constexpr bool operator==(Weight a, Weight b) {
    return a.value_ == b.value_;
  }
  friend constexpr bool operator!=(Weight a, Weight b) {
    return a.value_ != b.value_;
  }
  friend constexpr bool operator<(Weight a, Weight b) {
    return a.value_ < b.value_;
  }
  friend constexpr bool operator<=(Weight a, Weight b) {
    return a.value_ <= b.value_;
  }
  friend constexpr bool operator>(Weight a, Weight b) {
    return a.value_ > b.value_;
  }
  friend constexpr bool operator>=(Weight a, Weight b) {
    return a.value_ >= b.value_;
  }

 private:
  double value_;
};

inline Weight min(Weight a, Weight b) { return a < b ? a : b; }

// Relative comparison used by tests and the verification harness.
inline bool weights_close(double a, double b, double rel_tol = 1e-9) {
  if (a == b) return true;  // covers +inf == +inf and exact hits
  if (std::isinf(a) || std::isinf(b)) return false;
  double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= rel_tol * scale;
}

}  // namespace beerquery
