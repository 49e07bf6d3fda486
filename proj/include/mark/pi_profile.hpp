#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "mark/belief.hpp"
#include "mark/error.hpp"

namespace mark {

/// Window sums closer than this to the maximum count as ties; the leftmost wins.
inline constexpr double kTieTolerance = 1e-12;

enum class ProfileKind { discrete, continuous };

/// Maximum window probability pi across a ladder of widths.
struct PiProfile {
  ProfileKind kind = ProfileKind::discrete;
  std::vector<double> widths;
  std::vector<double> values;
  /// Discrete: 0-based start column. Continuous: window center x*.
  std::vector<double> argmax_locations;

  friend bool operator==(const PiProfile&, const PiProfile&) = default;
};

struct WindowMax {
  double prob = 0.0;
  double location = 0.0;
};

namespace detail {

/// Leftmost index whose value is within kTieTolerance of the maximum.
inline std::size_t leftmost_max(std::span<const double> sums) {
  const double best = *std::max_element(sums.begin(), sums.end());
  for (std::size_t i = 0; i < sums.size(); ++i)
    if (sums[i] >= best - kTieTolerance) return i;
  return 0;
}

inline std::vector<double> prefix_sums(std::span<const double> line) {
  std::vector<double> prefix(line.size() + 1, 0.0);
  for (std::size_t i = 0; i < line.size(); ++i) prefix[i + 1] = prefix[i] + line[i];
  return prefix;
}

inline WindowMax best_window(std::span<const double> prefix, std::size_t w) {
  const std::size_t n = prefix.size() - 1;
  std::vector<double> sums(n - w + 1);
  for (std::size_t k = 0; k + w <= n; ++k) sums[k] = prefix[k + w] - prefix[k];
  const std::size_t start = leftmost_max(sums);
  return {std::min(sums[start], 1.0), static_cast<double>(start)};
}

}  // namespace detail

/// Largest probability held by `w` adjacent candidates on the belief's line,
/// with the 0-based start column of the leftmost such window.
inline WindowMax pi_discrete(const DiscreteBelief& belief, std::size_t w) {
  if (w < 1 || w > belief.size())
    throw Error(Errc::BadWidth, "window width " + std::to_string(w) + " outside 1.." +
                                    std::to_string(belief.size()));
  const auto line = belief.line();
  return detail::best_window(detail::prefix_sums(line), w);
}

inline PiProfile pi_profile_discrete(const DiscreteBelief& belief, const InterestWindow& window) {
  ColumnRange cols{};
  try {
    cols = discrete_columns(window, belief.size());
  } catch (const Error& e) {
    throw Error(Errc::BadWidth, e.what());
  }
  const auto prefix = detail::prefix_sums(belief.line());
  PiProfile profile;
  profile.kind = ProfileKind::discrete;
  for (std::size_t w = cols.ioi; w <= cols.iof; ++w) {
    const auto best = detail::best_window(prefix, w);
    profile.widths.push_back(static_cast<double>(w));
    profile.values.push_back(best.prob);
    profile.argmax_locations.push_back(best.location);
  }
  return profile;
}

/// Largest probability inside any window of width `width` lying within
/// [lo, hi]. Window starts sweep the sample grid; the returned location is
/// the window center x* of the leftmost maximizer.
inline WindowMax pi_continuous(const ContinuousBelief& belief, double width) {
  if (!(width > 0.0) || width > belief.length() * (1.0 + 1e-12))
    throw Error(Errc::BadWidth, "window width must lie in (0, hi - lo]");
  width = std::min(width, belief.length());
  const auto f = belief.interpolant();
  std::vector<double> sums;
  std::vector<double> starts;
  const double slack = 1e-9 * belief.spacing();
  for (std::size_t i = 0; i < belief.samples(); ++i) {
    const double start = belief.x(i);
    if (start + width > belief.hi() + slack) break;
    const double end = std::min(start + width, belief.hi());
    sums.push_back(f.integral(start, end));
    starts.push_back(start);
  }
  const std::size_t k = detail::leftmost_max(sums);
  return {std::clamp(sums[k], 0.0, 1.0), starts[k] + 0.5 * width};
}

/// Width ladder from ioi to iof at the density's grid spacing, ending exactly at iof.
inline std::vector<double> continuous_widths(const ContinuousBelief& belief,
                                             const InterestWindow& window) {
  std::vector<double> widths{window.ioi};
  if (window.iof == window.ioi) return widths;
  const double step = belief.spacing();
  for (std::size_t j = 1;; ++j) {
    const double w = window.ioi + static_cast<double>(j) * step;
    if (w >= window.iof - 1e-9 * step) break;
    widths.push_back(w);
  }
  widths.push_back(window.iof);
  return widths;
}

inline PiProfile pi_profile_continuous(const ContinuousBelief& belief,
                                       const InterestWindow& window) {
  check_continuous(window, belief.length());
  PiProfile profile;
  profile.kind = ProfileKind::continuous;
  profile.widths = continuous_widths(belief, window);
  for (double w : profile.widths) {
    const auto best = pi_continuous(belief, w);
    profile.values.push_back(best.prob);
    profile.argmax_locations.push_back(best.location);
  }
  // Grid-swept maxima can dip by rounding; pi is nondecreasing by definition.
  for (std::size_t i = 1; i < profile.values.size(); ++i)
    profile.values[i] = std::max(profile.values[i], profile.values[i - 1]);
  return profile;
}

}  // namespace mark
