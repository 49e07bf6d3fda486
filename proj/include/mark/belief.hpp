#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mark/error.hpp"
#include "mark/quadrature.hpp"

namespace mark {

/// How candidates are laid out on the line along which windows are taken.
enum class OrderingMode {
  listed,          // as given; candidates are axis positions
  by_probability,  // stable descending-probability sort
  composite,       // already arranged by the ordering module
};

inline constexpr double kDiscreteSumTolerance = 1e-9;
inline constexpr double kContinuousSumTolerance = 1e-6;

/// Probability vector over n >= 2 candidates. Immutable once built.
class DiscreteBelief {
 public:
  std::size_t size() const { return probs_.size(); }
  std::span<const double> probs() const { return probs_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  OrderingMode mode() const { return mode_; }

  /// Column-center coordinates, present for beliefs built from a density.
  const std::optional<std::vector<double>>& axis() const { return axis_; }

  /// Probabilities in the order windows are taken over.
  std::vector<double> line() const {
    if (mode_ != OrderingMode::by_probability) return probs_;
    std::vector<double> sorted = probs_;
    std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());
    return sorted;
  }

  /// Same belief with candidates (labels, axis) stored in line order.
  DiscreteBelief canonical() const {
    if (mode_ != OrderingMode::by_probability) return *this;
    std::vector<std::size_t> idx(probs_.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return probs_[a] > probs_[b]; });
    DiscreteBelief out = *this;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      out.probs_[i] = probs_[idx[i]];
      if (!labels_.empty()) out.labels_[i] = labels_[idx[i]];
      if (axis_) (*out.axis_)[i] = (*axis_)[idx[i]];
    }
    return out;
  }

  DiscreteBelief with_mode(OrderingMode mode) const {
    DiscreteBelief copy = *this;
    copy.mode_ = mode;
    return copy;
  }

  DiscreteBelief with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != probs_.size())
      throw Error(Errc::LabelMismatch, "label count differs from candidate count");
    DiscreteBelief copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
  }

  DiscreteBelief with_axis(std::vector<double> axis) const {
    if (axis.size() != probs_.size())
      throw Error(Errc::NoAxis, "axis length differs from candidate count");
    DiscreteBelief copy = *this;
    copy.axis_ = std::move(axis);
    return copy;
  }

  friend bool operator==(const DiscreteBelief&, const DiscreteBelief&) = default;

 private:
  DiscreteBelief() = default;
  friend DiscreteBelief make_discrete(std::vector<double>, OrderingMode, bool,
                                      std::vector<std::string>);

  std::vector<double> probs_;
  std::vector<std::string> labels_;
  OrderingMode mode_ = OrderingMode::listed;
  std::optional<std::vector<double>> axis_;
};

/// Validates (or, with `normalize`, rescales) a probability vector.
inline DiscreteBelief make_discrete(std::vector<double> probs,
                                    OrderingMode mode = OrderingMode::listed,
                                    bool normalize = false,
                                    std::vector<std::string> labels = {}) {
  if (probs.size() < 2)
    throw Error(Errc::EmptyOrSingleton, "a belief needs at least two candidates");
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!std::isfinite(probs[i]) || probs[i] < 0.0)
      throw Error(Errc::NegativeProbability,
                  "candidate " + std::to_string(i + 1) + " has probability " +
                      std::to_string(probs[i]));
  }
  const double sum = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (normalize) {
    if (!(sum > 0.0)) throw Error(Errc::SumMismatch, "probabilities sum to zero");
    for (double& p : probs) p /= sum;
  } else if (std::abs(sum - 1.0) > kDiscreteSumTolerance) {
    throw Error(Errc::SumMismatch, "probabilities sum to " + std::to_string(sum));
  }
  if (!labels.empty() && labels.size() != probs.size())
    throw Error(Errc::LabelMismatch, "label count differs from candidate count");

  DiscreteBelief belief;
  belief.probs_ = std::move(probs);
  belief.labels_ = std::move(labels);
  belief.mode_ = mode;
  return belief;
}

inline DiscreteBelief uniform(std::size_t n) {
  if (n < 2) throw Error(Errc::EmptyOrSingleton, "n must be at least 2");
  return make_discrete(std::vector<double>(n, 1.0 / static_cast<double>(n)),
                       OrderingMode::listed, true);
}

/// Total knowledge: candidate `j` (1-based) is certainly right.
inline DiscreteBelief certain(std::size_t n, std::size_t j) {
  if (n < 2) throw Error(Errc::EmptyOrSingleton, "n must be at least 2");
  if (j < 1 || j > n)
    throw Error(Errc::IndexOutOfRange,
                "index " + std::to_string(j) + " outside 1.." + std::to_string(n));
  std::vector<double> probs(n, 0.0);
  probs[j - 1] = 1.0;
  return make_discrete(std::move(probs));
}

/// Density sampled on a uniform grid over [lo, hi].
class ContinuousBelief {
 public:
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double length() const { return hi_ - lo_; }
  std::span<const double> density() const { return density_; }
  std::size_t samples() const { return density_.size(); }
  double spacing() const { return length() / static_cast<double>(density_.size() - 1); }
  double x(std::size_t i) const {
    return i + 1 == density_.size() ? hi_ : lo_ + static_cast<double>(i) * spacing();
  }
  quad::UniformGridInterpolant interpolant() const { return {lo_, hi_, density_}; }

  friend bool operator==(const ContinuousBelief&, const ContinuousBelief&) = default;

 private:
  ContinuousBelief() = default;
  friend ContinuousBelief make_continuous(double, double, std::vector<double>, bool);

  double lo_ = 0.0;
  double hi_ = 1.0;
  std::vector<double> density_;
};

inline ContinuousBelief make_continuous(double lo, double hi, std::vector<double> density,
                                        bool normalize = false) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && hi > lo))
    throw Error(Errc::BadDensity, "axis segment needs lo < hi");
  if (density.size() < 2) throw Error(Errc::BadDensity, "need at least two density samples");
  for (std::size_t i = 0; i < density.size(); ++i) {
    if (!std::isfinite(density[i]) || density[i] < 0.0)
      throw Error(Errc::NegativeProbability,
                  "density sample " + std::to_string(i) + " is negative");
  }
  const double dx = (hi - lo) / static_cast<double>(density.size() - 1);
  const double mass = quad::trapezoid(density, dx);
  if (normalize) {
    if (!(mass > 0.0)) throw Error(Errc::SumMismatch, "density integrates to zero");
    for (double& d : density) d /= mass;
  } else if (std::abs(mass - 1.0) > kContinuousSumTolerance) {
    throw Error(Errc::SumMismatch, "density integrates to " + std::to_string(mass));
  }
  ContinuousBelief belief;
  belief.lo_ = lo;
  belief.hi_ = hi;
  belief.density_ = std::move(density);
  return belief;
}

/// Samples `f` at m grid points over [lo, hi] and normalizes.
template <typename F>
ContinuousBelief sample_density(double lo, double hi, std::size_t m, F&& f) {
  if (m < 2) throw Error(Errc::BadDensity, "need at least two density samples");
  std::vector<double> density(m);
  const double dx = (hi - lo) / static_cast<double>(m - 1);
  for (std::size_t i = 0; i < m; ++i)
    density[i] = f(i + 1 == m ? hi : lo + static_cast<double>(i) * dx);
  return make_continuous(lo, hi, std::move(density), true);
}

/// Utility range of the reference challenge. Discrete widths count columns.
struct InterestWindow {
  double ioi = 1.0;  // interval of indifference
  double iof = 1.0;  // interval of futility

  friend bool operator==(const InterestWindow&, const InterestWindow&) = default;
};

inline InterestWindow nominal_window(std::size_t n) {
  return {1.0, static_cast<double>(n)};
}

struct ColumnRange {
  std::size_t ioi;
  std::size_t iof;
};

/// Checks the window against an n-candidate belief; widths must be whole columns.
inline ColumnRange discrete_columns(const InterestWindow& window, std::size_t n) {
  auto whole = [](double v) { return std::isfinite(v) && v == std::floor(v); };
  if (!whole(window.ioi) || !whole(window.iof) || window.ioi < 1.0 ||
      window.iof < window.ioi || window.iof > static_cast<double>(n))
    throw Error(Errc::BadWindow, "discrete window needs integers 1 <= ioi <= iof <= " +
                                     std::to_string(n));
  return {static_cast<std::size_t>(window.ioi), static_cast<std::size_t>(window.iof)};
}

inline void check_continuous(const InterestWindow& window, double length) {
  if (!(window.ioi > 0.0) || !(window.iof >= window.ioi) ||
      window.iof > length * (1.0 + 1e-12))
    throw Error(Errc::BadWindow, "continuous window needs 0 < ioi <= iof <= " +
                                     std::to_string(length));
}

struct RankedCandidate {
  std::string label;
  std::optional<int> rank;  // lower is higher priority; empty means unranked
  double prob = 0.0;

  friend bool operator==(const RankedCandidate&, const RankedCandidate&) = default;
};

/// Discretizes a density into columns of width h, each weighted by the
/// density at its (clipped) center and renormalized.
inline DiscreteBelief histogram_from_density(const ContinuousBelief& belief, double h) {
  if (!(h > 0.0) || h > belief.length() * (1.0 + 1e-12))
    throw Error(Errc::BadWidth, "column width must lie in (0, hi - lo]");
  const double ratio = belief.length() / h;
  auto n = static_cast<std::size_t>(std::ceil(ratio - 1e-9));
  n = std::max<std::size_t>(n, 1);
  const auto f = belief.interpolant();
  std::vector<double> probs(n);
  std::vector<double> centers(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double left = belief.lo() + static_cast<double>(i) * h;
    const double right = std::min(belief.lo() + static_cast<double>(i + 1) * h, belief.hi());
    centers[i] = 0.5 * (left + right);
    probs[i] = f(centers[i]);
  }
  return make_discrete(std::move(probs), OrderingMode::listed, true).with_axis(std::move(centers));
}

}  // namespace mark
