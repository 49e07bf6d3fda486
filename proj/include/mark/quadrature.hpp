#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace mark::quad {

/// Composite trapezoid rule over uniformly spaced samples.
inline double trapezoid(std::span<const double> y, double dx) {
  if (y.size() < 2) return 0.0;
  double sum = 0.5 * (y.front() + y.back());
  for (std::size_t i = 1; i + 1 < y.size(); ++i) sum += y[i];
  return sum * dx;
}

/// Composite trapezoid rule over arbitrary (increasing) abscissae.
inline double trapezoid(std::span<const double> x, std::span<const double> y) {
  double sum = 0.0;
  for (std::size_t i = 1; i < x.size() && i < y.size(); ++i)
    sum += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
  return sum;
}

/// Piecewise-linear interpolant of samples on a uniform grid over [lo, hi],
/// zero outside. Integrals are exact for the interpolant, so on grid-aligned
/// limits they coincide with the trapezoid rule.
class UniformGridInterpolant {
 public:
  UniformGridInterpolant(double lo, double hi, std::span<const double> y)
      : lo_(lo), hi_(hi), y_(y.begin(), y.end()),
        dx_((hi - lo) / static_cast<double>(y.size() - 1)) {
    cumulative_.resize(y_.size(), 0.0);
    for (std::size_t i = 1; i < y_.size(); ++i)
      cumulative_[i] = cumulative_[i - 1] + 0.5 * (y_[i] + y_[i - 1]) * dx_;
  }

  double spacing() const { return dx_; }

  double operator()(double x) const {
    if (x < lo_ || x > hi_) return 0.0;
    auto [cell, frac] = locate(x);
    if (cell + 1 >= y_.size()) return y_.back();
    return y_[cell] + frac * (y_[cell + 1] - y_[cell]);
  }

  /// Integral of the interpolant from lo to x.
  double primitive(double x) const {
    if (x <= lo_) return 0.0;
    if (x >= hi_) return cumulative_.back();
    auto [cell, frac] = locate(x);
    if (cell + 1 >= y_.size()) return cumulative_.back();
    const double t = frac * dx_;
    const double slope = (y_[cell + 1] - y_[cell]) / dx_;
    return cumulative_[cell] + y_[cell] * t + 0.5 * slope * t * t;
  }

  double integral(double a, double b) const { return primitive(b) - primitive(a); }

 private:
  std::pair<std::size_t, double> locate(double x) const {
    const double pos = (x - lo_) / dx_;
    auto cell = static_cast<std::size_t>(std::floor(pos));
    cell = std::min(cell, y_.size() - 1);
    return {cell, pos - static_cast<double>(cell)};
  }

  double lo_;
  double hi_;
  std::vector<double> y_;
  double dx_;
  std::vector<double> cumulative_;
};

}  // namespace mark::quad
