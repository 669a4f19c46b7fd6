#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "wplat/cycle_diagram.hpp"
#include "wplat/errors.hpp"
#include "wplat/lattice.hpp"
#include "wplat/perm_diagram.hpp"
#include "wplat/stirling.hpp"

using namespace wplat;

TEST(CycleDiagram, CountsAreUnsignedStirling) {
  for (int n = 1; n <= 7; ++n)
    for (int r = 1; r <= n; ++r)
      EXPECT_EQ(BigInt(static_cast<unsigned long>(enumerate_cycle_diagrams(n, r).size())), abs(oracle::s1(n, r)));
}

TEST(CycleDiagram, Weights) {
  const CycleDiagram c1{4, {{1, 2}, {2, 3}, {2, 4}}};
  const CycleDiagram c2{4, {{1, 2}, {2, 3}, {3, 4}}};
  EXPECT_EQ(wt_k(c1, 3), 14);
  EXPECT_EQ(wt_k(c2, 3), 10);
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= n; ++r)
      for (const auto& d : enumerate_cycle_diagrams(n, r))
        for (int k = 1; k <= 3; ++k) EXPECT_EQ(wt_k(d, k), wt_k_exhaustive(d, k));
}

TEST(CycleDiagram, WeightedSumIsT) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 6; ++n)
      for (int r = 1; r <= n; ++r) EXPECT_EQ(t_via_diagrams(n, k, r), t_def(n, k, r));
}

TEST(CycleDiagram, Check) {
  EXPECT_THROW(check(CycleDiagram{3, {{1, 3}, {2, 3}}}), PreconditionError);
  EXPECT_EQ(to_json(CycleDiagram{2, {{1, 2}}}), R"({"n":2,"edges":[[1,2]]})");
}

TEST(PermDiagram, ColoredCountMatchesMobius) {
  for (int k = 2; k <= 3; ++k)
    for (int n = 2; n <= 4; ++n) {
      std::size_t total = 0;
      for (const auto& s : permutations_fixing_one(n)) total += enumerate_colorings(i_of_sigma(s), k).size();
      BigInt expected = 1;
      for (int j = 2; j <= n; ++j) expected *= k * (j - 2) + k - 1;
      EXPECT_EQ(BigInt(static_cast<unsigned long>(total)), expected);
      EXPECT_EQ(expected, abs(mobius_via_chains(build_poset(n, k))));
    }
}

TEST(PermDiagram, ImageIsDecreasingChains) {
  for (int k = 2; k <= 3; ++k)
    for (int n = 2; n <= 4; ++n) {
      const auto P = build_poset(n, k);
      std::set<LabelChain> image;
      for (const auto& s : permutations_fixing_one(n))
        for (const auto& d : enumerate_colorings(i_of_sigma(s), k)) {
          const auto c = diagram_to_decreasing_chain(d, k);
          EXPECT_TRUE(image.insert(c).second);
          EXPECT_TRUE(is_maximal_decreasing(P, c));
        }
      const auto dec = maximal_chains(P, P.bottom(), P.top(), ChainFilter::Decreasing);
      EXPECT_EQ(image, std::set<LabelChain>(dec.begin(), dec.end()));
    }
}

TEST(PermDiagram, Errors) {
  EXPECT_THROW(i_of_sigma({2, 1, 3}), DomainError);
  EXPECT_EQ(permutations_fixing_one(4).size(), 6u);
}
