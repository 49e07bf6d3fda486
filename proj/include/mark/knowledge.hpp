#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "mark/belief.hpp"
#include "mark/error.hpp"
#include "mark/pi_profile.hpp"
#include "mark/quadrature.hpp"

namespace mark {

struct KnowledgeScore {
  double ark = 0.0;
  double mark = 1.0;
  /// Only defined for discrete beliefs (scale anchor is the same-n uniform belief).
  std::optional<double> mark_normalized;
  int order_k = 0;

  friend bool operator==(const KnowledgeScore&, const KnowledgeScore&) = default;
};

namespace detail {

inline KnowledgeScore score(double ark, int k = 0) {
  ark = std::clamp(ark, 0.0, 1.0);
  return {ark, 1.0 - ark, std::nullopt, k};
}

inline double weight(double gap, int k) { return k == 0 ? 1.0 : std::pow(gap, k); }

/// Weighted mean of pi over the discrete ladder ioi..iof-1 (pi(ioi) when ioi == iof).
inline double discrete_ark(const PiProfile& profile, std::size_t ioi, std::size_t iof, int k) {
  auto pi_at = [&](std::size_t w) {
    for (std::size_t i = 0; i < profile.widths.size(); ++i)
      if (profile.widths[i] == static_cast<double>(w)) return profile.values[i];
    throw Error(Errc::BadWindow, "profile lacks width " + std::to_string(w));
  };
  if (ioi == iof) return pi_at(ioi);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t l = ioi; l < iof; ++l) {
    const double wt = weight(static_cast<double>(iof - l), k);
    num += pi_at(l) * wt;
    den += wt;
  }
  return num / den;
}

/// Weighted trapezoid quotient of pi over the profile's width ladder.
inline double continuous_ark(const PiProfile& profile, const InterestWindow& window, int k) {
  const auto& w = profile.widths;
  if (w.empty() || std::abs(w.front() - window.ioi) > 1e-9 * window.iof ||
      std::abs(w.back() - window.iof) > 1e-9 * window.iof)
    throw Error(Errc::BadWindow, "profile does not span [ioi, iof]");
  if (w.size() == 1) return profile.values.front();
  std::vector<double> weighted(w.size());
  std::vector<double> weights(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    weights[i] = weight(std::max(window.iof - w[i], 0.0), k);
    weighted[i] = profile.values[i] * weights[i];
  }
  return quad::trapezoid(w, weighted) / quad::trapezoid(w, weights);
}

}  // namespace detail

/// Mean of pi over the column ladder ioi..iof-1 on the belief's line.
inline KnowledgeScore ark_discrete(const DiscreteBelief& belief, const InterestWindow& window) {
  const auto cols = discrete_columns(window, belief.size());
  const auto profile = pi_profile_discrete(belief, window);
  return detail::score(detail::discrete_ark(profile, cols.ioi, cols.iof, 0));
}

/// ARK with the whole candidate line as the interest range (ioi = 1, iof = n).
inline KnowledgeScore ark_nominal(const DiscreteBelief& belief) {
  return ark_discrete(belief, nominal_window(belief.size()));
}

/// MARK rescaled so the uniform belief of the same size scores 1.
inline double mark_normalized(const DiscreteBelief& belief, const InterestWindow& window) {
  const double raw = ark_discrete(belief, window).mark;
  const double anchor = ark_discrete(uniform(belief.size()), window).mark;
  if (!(anchor > 0.0))
    throw Error(Errc::DegenerateScale, "uniform belief already scores full knowledge");
  return std::clamp(raw / anchor, 0.0, 1.0);
}

/// ARK together with its normalized MARK.
inline KnowledgeScore score_discrete(const DiscreteBelief& belief, const InterestWindow& window) {
  auto s = ark_discrete(belief, window);
  const double anchor = ark_discrete(uniform(belief.size()), window).mark;
  if (anchor > 0.0) s.mark_normalized = std::clamp(s.mark / anchor, 0.0, 1.0);
  return s;
}

/// Trapezoid mean of pi(I) over I in [ioi, iof], widths stepped at grid spacing.
inline KnowledgeScore ark_continuous(const ContinuousBelief& belief, const InterestWindow& window) {
  check_continuous(window, belief.length());
  const auto profile = pi_profile_continuous(belief, window);
  return detail::score(detail::continuous_ark(profile, window, 0));
}

/// ARK^k: pi weighted by (iof - I)^k, favouring the narrow, high-utility widths.
inline KnowledgeScore ark_higher_order(const PiProfile& profile, const InterestWindow& window,
                                       int k) {
  if (k < 0) throw Error(Errc::BadOrder, "order k must be nonnegative");
  if (profile.widths.size() != profile.values.size())
    throw Error(Errc::BadWindow, "profile widths and values differ in length");
  double ark = 0.0;
  if (profile.kind == ProfileKind::discrete) {
    if (!(window.ioi >= 1.0) || window.iof < window.ioi || window.ioi != std::floor(window.ioi) ||
        window.iof != std::floor(window.iof))
      throw Error(Errc::BadWindow, "discrete window needs integers 1 <= ioi <= iof");
    ark = detail::discrete_ark(profile, static_cast<std::size_t>(window.ioi),
                               static_cast<std::size_t>(window.iof), k);
  } else {
    if (!(window.ioi > 0.0) || window.iof < window.ioi)
      throw Error(Errc::BadWindow, "continuous window needs 0 < ioi <= iof");
    ark = detail::continuous_ark(profile, window, k);
  }
  return detail::score(ark, k);
}

}  // namespace mark
