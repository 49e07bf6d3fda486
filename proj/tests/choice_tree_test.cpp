#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "mark/choice_tree.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mark;

namespace {

ChoiceTree node_a_tree() {
  return ChoiceTree({"root", 1.0,
                     {{"A", 0.30, {{"A1", 0.10, {}}, {"A2", 0.15, {}}, {"A3", 0.05, {}}}},
                      {"B", 0.70, {}}}});
}

ChoiceTree seven_leaf_tree() {
  return ChoiceTree({"root", 1.0,
                     {{"A", 0.30, {{"A1", 0.10, {}}, {"A2", 0.20, {}}}},
                      {"B", 0.45, {{"B1", 0.05, {}}, {"B2", 0.25, {}}, {"B3", 0.15, {}}}},
                      {"C", 0.25, {{"C1", 0.20, {}}, {"C2", 0.05, {}}}}}});
}

}  // namespace

TEST(NodeChallenge, ElsewhereResidualSortedDescending) {
  const auto tree = node_a_tree();
  const auto b = node_challenge(tree, "A");
  EXPECT_EQ(b.labels(), (std::vector<std::string>{kElsewhere, "A2", "A1", "A3"}));
  const std::vector<double> expected{0.70, 0.15, 0.10, 0.05};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(b.probs()[i], expected[i], 1e-12);
  EXPECT_NEAR(ark_nominal(b).ark, 0.8333333333333334, 1e-12);
}

TEST(NodeChallenge, ExhaustedParentHasZeroResidual) {
  const auto b = node_challenge(seven_leaf_tree(), "root");
  EXPECT_EQ(b.size(), 4u);
  EXPECT_EQ(b.labels().back(), kElsewhere);
  EXPECT_NEAR(b.probs().back(), 0.0, 1e-12);
}

TEST(NodeChallenge, Errors) {
  EXPECT_EQ(code_of([] { node_challenge(node_a_tree(), "B"); }), Errc::LeafNode);
  EXPECT_EQ(code_of([] { node_challenge(node_a_tree(), "Z"); }), Errc::UnknownNode);
  EXPECT_EQ(code_of([] { node_challenge(ChoiceNode{"x", 1.0, {{"p", 0.7, {}}, {"q", 0.6, {}}}}); }),
            Errc::ProbabilityOverflow);
}

TEST(ChoiceTree, Validation) {
  EXPECT_EQ(code_of([] { ChoiceTree({"root", 0.9, {}}); }), Errc::SumMismatch);
  EXPECT_EQ(code_of([] { ChoiceTree({"root", 1.0, {{"A", 0.3, {{"A1", 0.4, {}}}}, {"B", 0.7, {}}}}); }),
            Errc::ProbabilityOverflow);
  EXPECT_EQ(code_of([] { ChoiceTree({"root", 1.0, {{"A", 0.5, {}}, {"A", 0.5, {}}}}); }),
            Errc::DuplicateLabel);
  EXPECT_EQ(seven_leaf_tree().depth(), 2u);
}

TEST(GenerationalBelief, LevelOneAndBottom) {
  const auto tree = seven_leaf_tree();
  const auto first = generational_belief(tree, 1);
  EXPECT_EQ(first.labels(), (std::vector<std::string>{"B", "A", "C"}));
  // Oracle from aggregated leaf masses, sorted descending.
  EXPECT_NEAR(ark_nominal(first).ark, oracle::ark_nominal({0.45, 0.30, 0.25}), 1e-12);
  EXPECT_NEAR(ark_nominal(first).ark, 0.6, 1e-12);
  const auto bottom = generational_belief(tree, 2);
  EXPECT_EQ(bottom.size(), 7u);
  EXPECT_NEAR(ark_nominal(bottom).ark, oracle::ark_nominal({0.25, 0.20, 0.20, 0.15, 0.10, 0.05, 0.05}), 1e-12);
  EXPECT_NEAR(ark_nominal(bottom).ark, 4.0 / 6.0, 1e-12);
}

TEST(GenerationalBelief, BadLevel) {
  EXPECT_EQ(code_of([] { generational_belief(seven_leaf_tree(), 0); }), Errc::BadLevel);
  EXPECT_EQ(code_of([] { generational_belief(seven_leaf_tree(), 3); }), Errc::BadLevel);
}

TEST(GenerationalBelief, ShallowLeavesCarryDown) {
  const auto b = generational_belief(node_a_tree(), 2);
  EXPECT_EQ(b.labels(), (std::vector<std::string>{"B", "A2", "A1", "A3"}));
}

TEST(GenerationalBelief, TotalKnowledgePropagatesUp) {
  const ChoiceTree tree({"root", 1.0,
                         {{"A", 0.0, {{"A1", 0.0, {}}, {"A2", 0.0, {}}}},
                          {"B", 1.0, {{"B1", 0.0, {}}, {"B2", 1.0, {}}, {"B3", 0.0, {}}}},
                          {"C", 0.0, {{"C1", 0.0, {}}, {"C2", 0.0, {}}}}}});
  for (std::size_t level = 1; level <= tree.depth(); ++level)
    EXPECT_EQ(ark_nominal(generational_belief(tree, level)).ark, 1.0) << level;
}

TEST(GroupingKnowledge, Values) {
  EXPECT_NEAR(grouping_knowledge(10, 5).ark, 0.5, 1e-15);
  EXPECT_NEAR(grouping_knowledge(10, 8).ark, 0.8, 1e-15);
  EXPECT_NEAR(grouping_knowledge(2, 1).ark, 0.5, 1e-15);
  EXPECT_EQ(code_of([] { grouping_knowledge(10, 0); }), Errc::BadGroup);
  EXPECT_EQ(code_of([] { grouping_knowledge(10, 10); }), Errc::BadGroup);
  EXPECT_EQ(code_of([] { grouping_knowledge(1, 1); }), Errc::BadGroup);
}

TEST(GroupingKnowledge, PositiveUnlessEvenSplitAndSymmetric) {
  for (std::size_t n = 2; n <= 30; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      const double ark = grouping_knowledge(n, k).ark;
      EXPECT_EQ(ark > 0.5, 2 * k != n) << n << "," << k;
      EXPECT_EQ(ark, grouping_knowledge(n, n - k).ark);
    }
  }
}

TEST(NodeChallengeProperty, SumsToOne) {
  const auto tree = seven_leaf_tree();
  for (const char* label : {"root", "A", "B", "C"}) {
    double sum = 0.0;
    const auto b = node_challenge(tree, label);
    for (double p : b.probs()) sum += p;
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}
