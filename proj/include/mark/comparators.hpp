#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "mark/belief.hpp"
#include "mark/error.hpp"
#include "mark/quadrature.hpp"

namespace mark {

/// Baseline uncertainty measures reported next to ARK/MARK.
struct EntropyReport {
  double shannon = 0.0;
  double shannon_normalized = 0.0;
  std::map<double, double> renyi;
  std::map<double, double> tsallis;
  std::optional<double> std_dev;

  friend bool operator==(const EntropyReport&, const EntropyReport&) = default;
};

namespace detail {

inline void check_base(double base) {
  if (!(base > 1.0)) throw Error(Errc::BadAlpha, "log base must exceed 1");
}

inline void check_alpha(double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0) throw Error(Errc::BadAlpha, "alpha must be > 0 and != 1");
}

inline double power_sum(std::span<const double> probs, double alpha) {
  double sum = 0.0;
  for (double p : probs)
    if (p > 0.0) sum += std::pow(p, alpha);
  return sum;
}

}  // namespace detail

/// -sum p log p, with 0 log 0 = 0.
inline double shannon_discrete(const DiscreteBelief& belief, double base = 2.0) {
  detail::check_base(base);
  double h = 0.0;
  for (double p : belief.probs())
    if (p > 0.0) h -= p * std::log(p);
  return std::max(h, 0.0) / std::log(base);
}

/// Shannon entropy scaled to [0, 1] by its maximum log(n).
inline double shannon_normalized(const DiscreteBelief& belief) {
  return shannon_discrete(belief, 2.0) / std::log2(static_cast<double>(belief.size()));
}

/// Differential entropy -int p log p dx by the trapezoid rule; may be negative.
inline double shannon_continuous(const ContinuousBelief& belief, double base = 2.0) {
  detail::check_base(base);
  std::vector<double> integrand;
  integrand.reserve(belief.samples());
  for (double p : belief.density()) integrand.push_back(p > 0.0 ? -p * std::log(p) : 0.0);
  return quad::trapezoid(integrand, belief.spacing()) / std::log(base);
}

inline double renyi(const DiscreteBelief& belief, double alpha, double base = 2.0) {
  detail::check_alpha(alpha);
  detail::check_base(base);
  return std::log(detail::power_sum(belief.probs(), alpha)) / ((1.0 - alpha) * std::log(base));
}

/// Tsallis entropy; natural units, its alpha -> 1 limit is Shannon in nats.
inline double tsallis(const DiscreteBelief& belief, double alpha) {
  detail::check_alpha(alpha);
  return (1.0 - detail::power_sum(belief.probs(), alpha)) / (alpha - 1.0);
}

inline double std_dev(const ContinuousBelief& belief) {
  const auto density = belief.density();
  std::vector<double> first(density.size());
  for (std::size_t i = 0; i < density.size(); ++i) first[i] = belief.x(i) * density[i];
  const double dx = belief.spacing();
  const double mass = quad::trapezoid(density, dx);
  const double mean = quad::trapezoid(first, dx) / mass;
  std::vector<double> second(density.size());
  for (std::size_t i = 0; i < density.size(); ++i) {
    const double d = belief.x(i) - mean;
    second[i] = d * d * density[i];
  }
  return std::sqrt(std::max(quad::trapezoid(second, dx) / mass, 0.0));
}

/// Standard deviation of the axis coordinate; needs column positions.
inline double std_dev(const DiscreteBelief& belief) {
  if (!belief.axis()) throw Error(Errc::NoAxis, "belief has no numeric axis");
  const auto& axis = *belief.axis();
  const auto probs = belief.probs();
  double mean = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) mean += probs[i] * axis[i];
  double var = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) var += probs[i] * (axis[i] - mean) * (axis[i] - mean);
  return std::sqrt(std::max(var, 0.0));
}

inline EntropyReport entropy_report(const DiscreteBelief& belief, const std::vector<double>& alphas,
                                    double base = 2.0) {
  EntropyReport report;
  report.shannon = shannon_discrete(belief, base);
  report.shannon_normalized = shannon_normalized(belief);
  for (double a : alphas) {
    report.renyi[a] = renyi(belief, a, base);
    report.tsallis[a] = tsallis(belief, a);
  }
  if (belief.axis()) report.std_dev = std_dev(belief);
  return report;
}

}  // namespace mark
