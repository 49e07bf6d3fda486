#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mark/belief.hpp"
#include "mark/error.hpp"
#include "mark/knowledge.hpp"

namespace mark {

/// Label for the residual "right choice lies outside these branches" entry.
inline const std::string kElsewhere = "elsewhere";

struct ChoiceNode {
  std::string label;
  double prob = 0.0;
  std::vector<ChoiceNode> children;

  bool is_leaf() const { return children.empty(); }
  double children_mass() const {
    return std::accumulate(children.begin(), children.end(), 0.0,
                           [](double acc, const ChoiceNode& c) { return acc + c.prob; });
  }

  friend bool operator==(const ChoiceNode&, const ChoiceNode&) = default;
};

/// Hierarchical grouping of choices. Node probabilities are absolute (the
/// chance the right choice lies under that node), so children never exceed
/// their parent.
class ChoiceTree {
 public:
  explicit ChoiceTree(ChoiceNode root) : root_(std::move(root)) {
    if (std::abs(root_.prob - 1.0) > kDiscreteSumTolerance)
      throw Error(Errc::SumMismatch, "root probability must be 1");
    std::set<std::string> labels;
    validate(root_, labels, 0);
  }

  const ChoiceNode& root() const { return root_; }
  std::size_t depth() const { return depth_; }

  /// Node with the given label; the root matches its own label.
  const ChoiceNode& find(const std::string& label) const {
    const ChoiceNode* hit = nullptr;
    std::function<void(const ChoiceNode&)> walk = [&](const ChoiceNode& n) {
      if (hit) return;
      if (n.label == label) {
        hit = &n;
        return;
      }
      for (const auto& c : n.children) walk(c);
    };
    walk(root_);
    if (!hit) throw Error(Errc::UnknownNode, label);
    return *hit;
  }

  friend bool operator==(const ChoiceTree&, const ChoiceTree&) = default;

 private:
  void validate(const ChoiceNode& node, std::set<std::string>& labels, std::size_t level) {
    if (!labels.insert(node.label).second) throw Error(Errc::DuplicateLabel, node.label);
    if (!(node.prob >= 0.0)) throw Error(Errc::NegativeProbability, node.label);
    depth_ = std::max(depth_, level);
    if (node.children_mass() > node.prob + kDiscreteSumTolerance)
      throw Error(Errc::ProbabilityOverflow, "children of " + node.label + " exceed its probability");
    for (const auto& c : node.children) validate(c, labels, level + 1);
  }

  ChoiceNode root_;
  std::size_t depth_ = 0;
};

namespace detail {

inline DiscreteBelief descending_belief(std::vector<std::pair<std::string, double>> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<double> probs;
  std::vector<std::string> labels;
  for (auto& [label, p] : entries) {
    labels.push_back(std::move(label));
    probs.push_back(p);
  }
  return make_discrete(std::move(probs), OrderingMode::by_probability, true, std::move(labels));
}

}  // namespace detail

/// Which branch of `node` holds the right choice, or none of them: the
/// children plus an "elsewhere" residual, sorted by descending probability.
inline DiscreteBelief node_challenge(const ChoiceNode& node) {
  if (node.is_leaf()) throw Error(Errc::LeafNode, node.label + " has no branches");
  const double mass = node.children_mass();
  if (mass > 1.0 + kDiscreteSumTolerance)
    throw Error(Errc::ProbabilityOverflow, "children of " + node.label + " sum above 1");
  std::vector<std::pair<std::string, double>> entries;
  for (const auto& c : node.children) entries.emplace_back(c.label, c.prob);
  entries.emplace_back(kElsewhere, std::max(0.0, 1.0 - mass));
  return detail::descending_belief(std::move(entries));
}

inline DiscreteBelief node_challenge(const ChoiceTree& tree, const std::string& label) {
  return node_challenge(tree.find(label));
}

/// Which node at depth `level` holds the right choice. Leaves above that
/// depth stand for themselves; unassigned mass becomes an "elsewhere" entry.
inline DiscreteBelief generational_belief(const ChoiceTree& tree, std::size_t level) {
  if (level < 1 || level > tree.depth())
    throw Error(Errc::BadLevel, "level must lie in 1.." + std::to_string(tree.depth()));
  std::vector<std::pair<std::string, double>> entries;
  std::function<void(const ChoiceNode&, std::size_t)> walk = [&](const ChoiceNode& n,
                                                                 std::size_t depth) {
    if (depth == level || (n.is_leaf() && depth > 0)) {
      entries.emplace_back(n.label, n.prob);
      return;
    }
    for (const auto& c : n.children) walk(c, depth + 1);
  };
  walk(tree.root(), 0);
  const double mass = std::accumulate(entries.begin(), entries.end(), 0.0,
                                      [](double acc, const auto& e) { return acc + e.second; });
  if (mass < 1.0 - kDiscreteSumTolerance) entries.emplace_back(kElsewhere, 1.0 - mass);
  return detail::descending_belief(std::move(entries));
}

/// Generational knowledge left after splitting n equally likely choices
/// into groups of k and n - k.
inline KnowledgeScore grouping_knowledge(std::size_t n, std::size_t k) {
  if (n < 2 || k < 1 || k >= n)
    throw Error(Errc::BadGroup, "need n >= 2 and 1 <= k < n");
  const double a = static_cast<double>(k) / static_cast<double>(n);
  const double b = static_cast<double>(n - k) / static_cast<double>(n);
  return ark_nominal(make_discrete({std::max(a, b), std::min(a, b)}, OrderingMode::by_probability));
}

}  // namespace mark
