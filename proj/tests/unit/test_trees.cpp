#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "oracles.hpp"
#include "wplat/binary_tree.hpp"
#include "wplat/perm_diagram.hpp"

using namespace wplat;

namespace {

LabeledBinaryTree example_tree() {
  // root: left 3_2 (left 1_1 (leaves 1_1, 3_1), right 2_1), right 4_2
  LabeledBinaryTree t{4, 2, {}};
  t.nodes = {{1, 6, 0, 0}, {2, 5, 3, 2}, {3, 4, 1, 1}, {-1, -1, 1, 1}, {-1, -1, 3, 1}, {-1, -1, 2, 1}, {-1, -1, 4, 2}};
  return t;
}

std::vector<LabelChain> decreasing_chains(const Poset& P) {
  const int top = P.k() == 1 ? P.top() - 1 : P.top();
  return maximal_chains(P, P.bottom(), top, ChainFilter::Decreasing);
}

}  // namespace

TEST(BinaryTree, Shapes) {
  for (int n = 1; n <= 7; ++n) {
    BigInt expected = 1;  // Catalan number C_{n-1}
    for (int i = 0; i < n - 1; ++i) expected = expected * 2 * (2 * i + 1) / (i + 2);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(binary_tree_shapes(n).size())), expected) << n;
  }
}

TEST(BinaryTree, ExampleTreeToChain) {
  const auto t = example_tree();
  EXPECT_TRUE(is_lbt(t, LbtScope::Ordered));
  EXPECT_EQ(to_string(lbt_to_chain(t)), "(1,3)_1 (1,2)_1 (3,4)_2 (1,4)_2");
  EXPECT_EQ(chain_to_lbt(lbt_to_chain(t), 4, 2), t);
}

TEST(BinaryTree, SmallestCase) {
  for (int k = 2; k <= 3; ++k) {
    const auto trees = enumerate_lbt(2, k, LbtScope::Ordered);
    EXPECT_EQ(trees.size(), static_cast<std::size_t>(k - 1));
    for (const auto& t : trees) {
      const auto c = lbt_to_chain(t);
      ASSERT_EQ(c.size(), 2u);
      EXPECT_LT(c[0].layer, k);
      EXPECT_EQ(c[1], (CoverLabel{1, 2, k}));
    }
  }
}

TEST(BinaryTree, RoundTripAndCount) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 1}, {5, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 2}, {3, 3}, {4, 3}}) {
    const auto P = build_poset(n, k);
    std::set<LabeledBinaryTree> images;
    for (const auto& c : decreasing_chains(P)) {
      const auto t = chain_to_lbt(c, n, k);
      EXPECT_EQ(lbt_to_chain(t, k > 1), c);
      EXPECT_TRUE(is_lbt(t, LbtScope::Ordered)) << to_json(t);
      images.insert(t);
    }
    const auto trees = enumerate_lbt(n, k, LbtScope::Ordered);
    EXPECT_EQ(std::set<LabeledBinaryTree>(trees.begin(), trees.end()), images) << n << "," << k;
  }
}

TEST(BinaryTree, ClassicalTrees) {
  for (int n = 2; n <= 6; ++n) {
    const auto trees = enumerate_lbt(n, 1, LbtScope::Ordered);
    BigInt fact = 1;
    for (int i = 2; i < n; ++i) fact *= i;
    EXPECT_EQ(BigInt(static_cast<unsigned long>(trees.size())), fact);
    std::set<LabeledBinaryTree> from_sigma;
    for (const auto& s : permutations_fixing_one(n)) from_sigma.insert(tree_of_sigma(s));
    EXPECT_EQ(std::set<LabeledBinaryTree>(trees.begin(), trees.end()), from_sigma);
    for (const auto& t : trees) {
      EXPECT_EQ(leaf_word(t).front(), 1);
      // every internal label is the minimum leaf below it
      std::function<int(int)> min_leaf = [&](int i) -> int {
        const auto& c = t.nodes[static_cast<std::size_t>(i)];
        if (c.is_leaf()) return c.value;
        const int m = std::min(min_leaf(c.left), min_leaf(c.right));
        if (i != 0) EXPECT_EQ(c.value, m);
        return m;
      };
      min_leaf(0);
    }
  }
}

TEST(BinaryTree, SixTreesForFourPoints) {
  std::set<std::string> chains;
  for (const auto& s : permutations_fixing_one(4)) chains.insert(to_string(lbt_to_chain(tree_of_sigma(s), false)));
  EXPECT_EQ(chains, (std::set<std::string>{"(3,4)_1 (2,3)_1 (1,2)_1", "(2,4)_1 (2,3)_1 (1,2)_1", "(2,4)_1 (1,3)_1 (1,2)_1",
                                           "(3,4)_1 (1,3)_1 (1,2)_1", "(2,3)_1 (1,4)_1 (1,2)_1", "(1,4)_1 (1,3)_1 (1,2)_1"}));
}

TEST(BinaryTree, LiteralConditionsFindings) {
  // the literal reading admits trees that are not chain images and rejects some that are
  EXPECT_EQ(enumerate_lbt(3, 2, LbtScope::Full).size(), 4u);
  const auto P = build_poset(4, 3);
  int rejected = 0;
  for (const auto& c : decreasing_chains(P)) rejected += !is_lbt(chain_to_lbt(c, 4, 3), LbtScope::Full);
  EXPECT_EQ(rejected, 4);
}

TEST(BinaryTree, Violations) {
  auto t = example_tree();
  t.nodes[6].sub = 1;
  EXPECT_FALSE(is_lbt(t, LbtScope::Ordered));
  auto u = example_tree();
  std::swap(u.nodes[3].value, u.nodes[4].value);
  const auto v = lbt_violations(u, LbtScope::Ordered);
  EXPECT_NE(std::find(v.begin(), v.end(), "spade2"), v.end());
}

TEST(BinaryTree, RejectsNonDecreasingChain) {
  EXPECT_THROW(chain_to_lbt({{1, 2, 1}, {1, 3, 1}, {1, 3, 2}}, 3, 2), DomainError);
}
