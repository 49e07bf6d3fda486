#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mark/belief.hpp"
#include "mark/error.hpp"
#include "mark/knowledge.hpp"
#include "mark/quadrature.hpp"

namespace mark {

struct TrajectoryPoint {
  double resource = 0.0;  // time, money, or any other spend
  DiscreteBelief belief;
};

struct SignaturePoint {
  double resource = 0.0;
  double mark = 1.0;

  friend bool operator==(const SignaturePoint&, const SignaturePoint&) = default;
};

/// MARK plotted against expended resource.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<SignaturePoint> points) : points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      const auto& p = points_[i];
      if (!std::isfinite(p.resource) || p.resource < 0.0)
        throw Error(Errc::BadOrder, "resource must be a nonnegative number");
      if (!(p.mark >= 0.0 && p.mark <= 1.0))
        throw Error(Errc::BadMark, "mark " + std::to_string(p.mark) + " outside [0, 1]");
      if (i > 0 && !(p.resource > points_[i - 1].resource))
        throw Error(Errc::BadOrder, "resources must strictly increase");
    }
  }

  const std::vector<SignaturePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<SignaturePoint> points_;
};

struct RiskParams {
  double d0 = 0.0;  // damage under total ignorance
  double d1 = 0.0;  // damage under total knowledge
  double o0 = 0.0;  // opportunity under total ignorance
  double o1 = 0.0;  // opportunity under smart exploitation

  /// Orderings the model expects; violations are reported, not rejected.
  std::vector<std::string> warnings() const {
    std::vector<std::string> out;
    if (d0 < d1) out.emplace_back("d0 < d1: ignorance is cheaper than knowledge");
    if (o1 < o0) out.emplace_back("o1 < o0: exploitation yields less than ignorance");
    return out;
  }
};

inline Signature mark_series(const std::vector<TrajectoryPoint>& trajectory,
                             const InterestWindow& window, OrderingMode ordering,
                             bool normalized) {
  if (trajectory.size() < 2) throw Error(Errc::TooShort, "need at least two states");
  const auto& first = trajectory.front().belief;
  std::vector<SignaturePoint> points;
  points.reserve(trajectory.size());
  for (const auto& tp : trajectory) {
    if (tp.belief.size() != first.size() || tp.belief.labels() != first.labels())
      throw Error(Errc::InconsistentCandidates, "every state must share the candidate set");
    const auto belief = tp.belief.with_mode(ordering);
    const double m = normalized ? mark_normalized(belief, window) : ark_discrete(belief, window).mark;
    points.push_back({tp.resource, m});
  }
  return Signature(std::move(points));
}

/// Resource spent per unit of MARK removed between two states.
inline double apparent_intractability(const SignaturePoint& from, const SignaturePoint& to) {
  if (!(to.resource > from.resource)) throw Error(Errc::BadOrder, "resources must increase");
  if (!(from.mark > to.mark)) throw Error(Errc::NoProgress, "MARK did not decrease");
  return (to.resource - from.resource) / (from.mark - to.mark);
}

struct LocalIntractability {
  double mark = 0.0;   // segment midpoint
  double dt_dm = 0.0;  // resource per unit MARK removed

  friend bool operator==(const LocalIntractability&, const LocalIntractability&) = default;
};

struct LocalIntractabilityReport {
  std::vector<LocalIntractability> segments;
  /// 0-based index of each segment's first point where MARK failed to drop.
  std::vector<std::size_t> violations;
};

inline LocalIntractabilityReport local_intractability(const Signature& signature) {
  if (signature.size() < 2) throw Error(Errc::TooShort, "need at least two points");
  LocalIntractabilityReport report;
  const auto& pts = signature.points();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double drop = pts[i - 1].mark - pts[i].mark;
    if (!(drop > 0.0)) {
      report.violations.push_back(i - 1);
      continue;
    }
    report.segments.push_back({0.5 * (pts[i - 1].mark + pts[i].mark),
                               (pts[i].resource - pts[i - 1].resource) / drop});
  }
  return report;
}

inline constexpr double kSpanTolerance = 0.02;

/// Integral of dT/dM over the MARK span 1 -> 0. On monotone segments this
/// telescopes to the resource spent.
inline double overall_intractability(const Signature& signature, double tolerance = kSpanTolerance) {
  if (signature.size() < 2) throw Error(Errc::TooShort, "need at least two points");
  const auto& pts = signature.points();
  if (pts.front().mark < 1.0 - tolerance || pts.back().mark > tolerance)
    throw Error(Errc::IncompleteSpan, "signature must run from MARK 1 to MARK 0");
  double total = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double drop = pts[i - 1].mark - pts[i].mark;
    if (drop > 0.0) total += (pts[i].resource - pts[i - 1].resource) / drop * drop;
  }
  return total;
}

inline void check_mark(double mark) {
  if (!(mark >= 0.0 && mark <= 1.0)) throw Error(Errc::BadMark, "mark must lie in [0, 1]");
}

inline double expected_damage(const RiskParams& params, double mark) {
  check_mark(mark);
  return params.d1 + (params.d0 - params.d1) * mark;
}

inline double expected_opportunity(const RiskParams& params, double mark) {
  check_mark(mark);
  return params.o1 - (params.o1 - params.o0) * mark;
}

namespace detail {

inline double interpolate_mark(const std::vector<SignaturePoint>& pts, double resource) {
  if (resource <= pts.front().resource) return pts.front().mark;
  if (resource >= pts.back().resource) return pts.back().mark;
  auto hi = std::upper_bound(pts.begin(), pts.end(), resource,
                             [](double r, const SignaturePoint& p) { return r < p.resource; });
  auto lo = hi - 1;
  const double t = (resource - lo->resource) / (hi->resource - lo->resource);
  return lo->mark + t * (hi->mark - lo->mark);
}

}  // namespace detail

inline constexpr std::size_t kSignatureSamples = 101;

/// L2 distance between two signatures resampled at 101 evenly spaced
/// resource positions. With `normalize_resource` each curve's resource axis
/// is first mapped onto [0, 1]; otherwise the overlapping raw range is used.
inline double signature_distance(const Signature& a, const Signature& b,
                                 bool normalize_resource = true) {
  if (a.size() < 2 || b.size() < 2) throw Error(Errc::TooShort, "need at least two points each");
  const auto& pa = a.points();
  const auto& pb = b.points();
  double start = 0.0;
  double stop = 1.0;
  auto rescale = [](const std::vector<SignaturePoint>& pts) {
    std::vector<SignaturePoint> out = pts;
    const double r0 = pts.front().resource;
    const double span = pts.back().resource - r0;
    for (auto& p : out) p.resource = (p.resource - r0) / span;
    return out;
  };
  std::vector<SignaturePoint> ca = pa;
  std::vector<SignaturePoint> cb = pb;
  if (normalize_resource) {
    ca = rescale(pa);
    cb = rescale(pb);
  } else {
    start = std::max(pa.front().resource, pb.front().resource);
    stop = std::min(pa.back().resource, pb.back().resource);
    if (!(stop > start)) throw Error(Errc::NoOverlap, "signatures share no resource range");
  }
  std::vector<double> t(kSignatureSamples);
  std::vector<double> sq(kSignatureSamples);
  for (std::size_t i = 0; i < kSignatureSamples; ++i) {
    t[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(kSignatureSamples - 1);
    const double d = detail::interpolate_mark(ca, t[i]) - detail::interpolate_mark(cb, t[i]);
    sq[i] = d * d;
  }
  return std::sqrt(quad::trapezoid(t, sq));
}

}  // namespace mark
