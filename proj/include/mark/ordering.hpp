#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mark/belief.hpp"
#include "mark/error.hpp"

namespace mark {

enum class Provenance { ranked, tie_broken_by_prob, unranked_tail };

constexpr std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::ranked: return "ranked";
    case Provenance::tie_broken_by_prob: return "tie_broken_by_prob";
    case Provenance::unranked_tail: return "unranked_tail";
  }
  return "unknown";
}

/// Candidates arranged on the single line windows are taken over.
struct OrderedLine {
  std::vector<RankedCandidate> candidates;
  std::vector<Provenance> provenance;

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(candidates.size());
    for (const auto& c : candidates) out.push_back(c.label);
    return out;
  }

  friend bool operator==(const OrderedLine&, const OrderedLine&) = default;
};

/// Ranked candidates by ascending rank, equal ranks by descending probability,
/// then every unranked candidate by descending probability. Stable throughout.
inline OrderedLine order_composite(const std::vector<RankedCandidate>& candidates) {
  if (candidates.size() < 2) throw Error(Errc::NoCandidates, "need at least two candidates");
  std::set<std::string> seen;
  for (const auto& c : candidates) {
    if (!seen.insert(c.label).second) throw Error(Errc::DuplicateLabel, c.label);
    if (!(c.prob >= 0.0)) throw Error(Errc::NegativeProbability, c.label);
    if (c.rank && *c.rank < 1) throw Error(Errc::BadOrder, "rank of " + c.label + " must be >= 1");
  }

  std::vector<RankedCandidate> ranked;
  std::vector<RankedCandidate> unranked;
  std::map<int, std::size_t> block_size;
  for (const auto& c : candidates) {
    if (c.rank) {
      ranked.push_back(c);
      ++block_size[*c.rank];
    } else {
      unranked.push_back(c);
    }
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (*a.rank != *b.rank) return *a.rank < *b.rank;
    return a.prob > b.prob;
  });
  std::stable_sort(unranked.begin(), unranked.end(),
                   [](const auto& a, const auto& b) { return a.prob > b.prob; });

  OrderedLine line;
  for (auto& c : ranked) {
    line.provenance.push_back(block_size[*c.rank] > 1 ? Provenance::tie_broken_by_prob
                                                      : Provenance::ranked);
    line.candidates.push_back(std::move(c));
  }
  for (auto& c : unranked) {
    line.provenance.push_back(Provenance::unranked_tail);
    line.candidates.push_back(std::move(c));
  }
  return line;
}

/// Permutes a labelled belief into the line's order.
inline DiscreteBelief apply_ordering(const DiscreteBelief& belief, const OrderedLine& line) {
  if (!belief.has_labels()) throw Error(Errc::LabelMismatch, "belief carries no labels");
  if (line.candidates.size() != belief.size())
    throw Error(Errc::LabelMismatch, "line and belief differ in size");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < belief.size(); ++i) index.emplace(belief.labels()[i], i);

  std::vector<double> probs;
  std::vector<std::string> labels;
  std::vector<double> axis;
  for (const auto& c : line.candidates) {
    auto it = index.find(c.label);
    if (it == index.end()) throw Error(Errc::LabelMismatch, "belief has no candidate " + c.label);
    probs.push_back(belief.probs()[it->second]);
    labels.push_back(c.label);
    if (belief.axis()) axis.push_back((*belief.axis())[it->second]);
    index.erase(it);
  }
  auto out = make_discrete(std::move(probs), OrderingMode::composite, false, std::move(labels));
  if (belief.axis()) out = out.with_axis(std::move(axis));
  return out;
}

}  // namespace mark
