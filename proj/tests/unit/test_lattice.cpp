#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "wplat/errors.hpp"
#include "wplat/lattice.hpp"
#include "wplat/stirling.hpp"
#include "wplat/structure.hpp"

using namespace wplat;

namespace {

bool has_cover(const WeightedPartition& p, const CoverLabel& label, const std::string& result) {
  for (const auto& [l, q] : admissible_covers(p))
    if (l == label && one_line(q) == result) return true;
  return false;
}

}  // namespace

TEST(Lattice, LabelOrder) {
  EXPECT_LT((CoverLabel{1, 2, 2}), (CoverLabel{1, 2, 1}));
  EXPECT_LT((CoverLabel{1, 2, 1}), (CoverLabel{1, 3, 1}));
  EXPECT_LT((CoverLabel{1, 3, 1}), (CoverLabel{2, 3, 1}));
  EXPECT_EQ(to_string(CoverLabel{1, 3, 2}), "(1,3)_2");
}

TEST(Lattice, AdmissibleCovers) {
  const auto p = parse_one_line("1(23)^2/4", 4, 2);
  EXPECT_TRUE(has_cover(p, {2, 4, 2}, "1(234)^2"));
  for (const auto& [l, q] : admissible_covers(p)) EXPECT_NE(l, (CoverLabel{3, 4, 2}));
  const auto q = parse_one_line("13/24", 4, 3);
  std::set<CoverLabel> labels;
  for (const auto& [l, r] : admissible_covers(q)) labels.insert(l);
  EXPECT_EQ(labels, (std::set<CoverLabel>{{1, 2, 1}, {1, 2, 2}, {1, 2, 3}}));
  EXPECT_TRUE(has_cover(q, {1, 2, 1}, "1234"));
  EXPECT_TRUE(has_cover(q, {1, 2, 2}, "(12)^2 34"));
  EXPECT_EQ(admissible_covers(WeightedPartition::bottom(3, 2)).size(), 6u);
}

TEST(Lattice, BuildSmall) {
  const auto P31 = build_poset(3, 1);
  EXPECT_EQ(P31.size(), 6);
  const auto P32 = build_poset(3, 2);
  EXPECT_EQ(P32.size(), 13);
  for (int k = 1; k <= 3; ++k) {
    const auto P = build_poset(2, k);
    EXPECT_EQ(P.size(), k + 2);
  }
  for (const auto& c : P32.covers()) EXPECT_EQ(P32.rank(c.upper), P32.rank(c.lower) + 1);
  EXPECT_EQ(P32.rank(P32.bottom()), 0);
  EXPECT_EQ(P32.rank(P32.top()), 3);
}

TEST(Lattice, Guard) {
  EXPECT_THROW(build_poset(4, 2, 10), ResourceLimitError);
  EXPECT_EQ(poset_size(4, 2), 61u);
  EXPECT_EQ(poset_size(5, 3), static_cast<std::size_t>(build_poset(5, 3).size()));
}

TEST(Lattice, Order) {
  const auto P = build_poset(3, 2);
  for (int i = 0; i < P.size(); ++i) EXPECT_TRUE(P.leq(P.bottom(), i));
  EXPECT_TRUE(P.leq(P.index_of(parse_one_line("13/2", 3, 2)), P.index_of(parse_one_line("(12)^2 3", 3, 2))));
  const auto Q = build_poset(4, 2);
  EXPECT_FALSE(Q.leq(Q.index_of(parse_one_line("13/24", 4, 2)), Q.index_of(parse_one_line("(14)^2(23)^2", 4, 2))));
  const auto iv = interval(P, P.bottom(), P.top());
  EXPECT_EQ(iv.members.size(), 13u);
}

TEST(Lattice, Chains) {
  const auto P31 = build_poset(3, 1);
  const int one = P31.index_of(parse_one_line("123", 3, 1));
  EXPECT_EQ(maximal_chains(P31, P31.bottom(), one).size(), 3u);
  EXPECT_EQ(maximal_chains(P31, P31.bottom(), one, ChainFilter::Rising).size(), 1u);
  const auto P = build_poset(3, 2);
  const auto all = maximal_chains(P, P.bottom(), P.top());
  EXPECT_EQ(all.size(), 13u);
  EXPECT_EQ(filter_decreasing(all).size(), 3u);
  EXPECT_EQ(filter_rising(all).size(), 1u);
  EXPECT_EQ(maximal_chains(P, 2, 2), std::vector<LabelChain>{LabelChain{}});
  EXPECT_EQ(count_maximal_chains(build_poset(4, 2), 0, 60), BigInt(static_cast<unsigned long>(maximal_chains(build_poset(4, 2), 0, 60).size())));
}

TEST(Lattice, EL) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 2}, {3, 3}}) {
    const auto P = build_poset(n, k);
    EXPECT_FALSE(verify_el(P).failed()) << n << "," << k;
    EXPECT_EQ(maximal_chains(P, P.bottom(), P.top(), ChainFilter::Rising).front(), expected_rising_chain(n, k));
  }
}

TEST(Lattice, Mobius) {
  EXPECT_EQ(mobius_closed_form(4, 2), 15);
  EXPECT_EQ(mobius_closed_form(5, 3), -880);
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(mobius_closed_form(n, 1), 0);
  for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {4, 3}}) {
    const auto P = build_poset(n, k);
    const auto brute = oracle::mobius_from_bottom(P);
    const auto lib = mobius_from(P, P.bottom());
    for (int y = 0; y < P.size(); ++y) EXPECT_EQ(lib[y], brute[y]);
    EXPECT_EQ(mobius_recursive(P, P.bottom(), P.top()), oracle::mobius_formula(n, k));
    EXPECT_EQ(mobius_via_chains(P), oracle::mobius_formula(n, k));
    EXPECT_EQ(mobius_recursive(P, 1, 1), 1);
  }
  const auto P = build_poset(3, 2);
  EXPECT_EQ(mobius_recursive(P, P.bottom(), P.top()), -3);
}

TEST(Lattice, CharacteristicPolynomial) {
  EXPECT_EQ(to_string(char_poly_product(3, 2)), "x^3 - 6x^2 + 8x");
  EXPECT_EQ(char_poly_factored(3, 2), "x(x - 2)(x - 4)");
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 4; ++n) {
      const auto P = build_poset(n, k);
      EXPECT_EQ(char_poly(P).coeffs(), oracle::falling(n, k));
      EXPECT_EQ(whitney(P, n), 1);
      for (int r = 1; r <= n; ++r) EXPECT_EQ(whitney(P, r), whitney_formula(n, k, r));
      EXPECT_EQ(char_poly(P).eval(1), -mobius_recursive(P, P.bottom(), P.top()));
    }
}

TEST(Lattice, JoinMeet) {
  const auto x = parse_one_line("3/245/16", 6, 1);
  const auto y = parse_one_line("456/2/13", 6, 1);
  EXPECT_EQ(one_line(layer_join(x, y)), "123456");
  EXPECT_EQ(layer_meet(x, y), parse_one_line("6/45/3/2/1", 6, 1));
  const auto a = parse_one_line("12/34", 4, 1);
  const auto b = parse_one_line("13/24", 4, 1);
  EXPECT_EQ(one_line(layer_join(a, b)), "1234");
  EXPECT_EQ(layer_meet(a, b), WeightedPartition::bottom(4, 1));
  for (const auto& p : enumerate_all(4, 2)) {
    EXPECT_EQ(layer_join(p, WeightedPartition::bottom(4, 2)), p);
    EXPECT_EQ(layer_meet(p, WeightedPartition::bottom(4, 2)), WeightedPartition::bottom(4, 2));
  }
}

TEST(Lattice, KOneJoinMeetAreLatticeOperations) {
  // on Pi_4, layer_join/layer_meet are the least upper and greatest lower bounds
  const auto P = build_poset(4, 1);
  const int N = P.top();
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      const int j = P.index_of(layer_join(P.element(a), P.element(b)));
      const int m = P.index_of(layer_meet(P.element(a), P.element(b)));
      ASSERT_GE(j, 0);
      ASSERT_GE(m, 0);
      for (int z = 0; z < N; ++z) {
        EXPECT_EQ(P.leq(a, z) && P.leq(b, z), P.leq(j, z));
        EXPECT_EQ(P.leq(z, a) && P.leq(z, b), P.leq(z, m));
      }
    }
}

TEST(Lattice, StructuralChecks) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 2}}) {
    const auto reports = structural_checks(build_poset(n, k));
    ASSERT_EQ(reports.size(), 4u);
    for (const auto& r : reports) EXPECT_FALSE(r.failed()) << r.check;
    if (k == 1)
      for (const auto& r : reports) EXPECT_EQ(r.status, Status::Pass) << r.check;
  }
}

TEST(Lattice, Hasse) {
  const auto dot = hasse_dot(build_poset(3, 1));
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  std::size_t edges = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) ++edges;
  EXPECT_EQ(edges, 7u);
  EXPECT_EQ(hasse_dot(build_poset(3, 1)), dot);
}
