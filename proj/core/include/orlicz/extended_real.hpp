#ifndef ORLICZ_EXTENDED_REAL_HPP
#define ORLICZ_EXTENDED_REAL_HPP

#include <cmath>
#include <limits>

namespace orlicz {

// Nonnegative extended real with saturating arithmetic. Products follow the
// measure-theoretic convention 0 * inf = 0, so a vanishing integrand never
// turns a modular into NaN.
class ExtReal {
 public:
  ExtReal() = default;
  ExtReal(double v) : v_(v) {}

  static ExtReal inf() { return ExtReal(std::numeric_limits<double>::infinity()); }

  bool is_inf() const { return std::isinf(v_); }
  bool finite() const { return std::isfinite(v_); }
  double value() const { return v_; }

  ExtReal& operator+=(ExtReal o) {
    v_ += o.v_;
    return *this;
  }

  friend ExtReal operator+(ExtReal a, ExtReal b) { return ExtReal(a.v_ + b.v_); }

  friend ExtReal operator*(ExtReal a, ExtReal b) {
    if (a.v_ == 0.0 || b.v_ == 0.0) return ExtReal(0.0);
    return ExtReal(a.v_ * b.v_);
  }

  friend bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
  friend bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
  friend bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
  friend bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }
  friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }

 private:
  double v_ = 0.0;
};

}  // namespace orlicz

#endif
