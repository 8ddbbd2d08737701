#pragma once

#include <cstddef>

namespace padecheb {

/// Closed interval [a, b] with a < b.
class Interval {
  public:
    Interval(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double length() const noexcept { return b_ - a_; }
    bool contains(double x) const noexcept { return x >= a_ && x <= b_; }

    friend bool operator==(const Interval &, const Interval &) = default;

  private:
    double a_;
    double b_;
};

/// Tensor-product box x_interval × y_interval.
struct Rect {
    Interval x;
    Interval y;

    bool contains(double px, double py) const noexcept { return x.contains(px) && y.contains(py); }
    friend bool operator==(const Rect &, const Rect &) = default;
};

/// Value of a rational (or polynomial) approximant plus a near-pole marker.
struct EvalResult {
    double value = 0.0;
    bool pole = false;
};

} // namespace padecheb
