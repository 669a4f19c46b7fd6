#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "wplat/exact.hpp"
#include "wplat/lattice.hpp"

// Brute-force reference computations, independent of the library routes.
namespace oracle {

using wplat::BigInt;

// Set partitions of [n] as restricted growth strings.
inline std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto& self, int i, int m) -> void {
    if (i == n) {
      out.push_back(a);
      return;
    }
    for (int b = 0; b <= m + 1; ++b) {
      a[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(m, b));
    }
  };
  if (n == 0) return {{}};
  a[0] = 0;
  rec(rec, 1, 0);
  return out;
}

inline int blocks(const std::vector<int>& rgs) { return rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1; }

// fine refines coarse: same fine block implies same coarse block.
inline bool refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
  for (std::size_t i = 0; i < fine.size(); ++i)
    for (std::size_t j = i + 1; j < fine.size(); ++j)
      if (fine[i] == fine[j] && coarse[i] != coarse[j]) return false;
  return true;
}

// Multichains pi_1 >= pi_2 >= ... >= pi_k of set partitions, counted by the
// number of blocks of pi_1.
inline std::vector<BigInt> multichain_counts(int n, int k) {
  const auto parts = set_partitions(n);
  const std::size_t P = parts.size();
  std::vector<BigInt> ways(P, 1);
  for (int layer = 2; layer <= k; ++layer) {
    std::vector<BigInt> next(P, 0);
    for (std::size_t c = 0; c < P; ++c)
      for (std::size_t f = 0; f < P; ++f)
        if (refines(parts[f], parts[c])) next[c] += ways[f];
    ways = next;
  }
  std::vector<BigInt> out(static_cast<std::size_t>(n + 1), 0);
  for (std::size_t c = 0; c < P; ++c) out[static_cast<std::size_t>(blocks(parts[c]))] += ways[c];
  return out;
}

// S(n, r) and signed s(n, r) by the triangular recurrences.
inline BigInt S2(int n, int r) {
  std::vector<std::vector<BigInt>> t(static_cast<std::size_t>(n + 1), std::vector<BigInt>(static_cast<std::size_t>(n + 2), 0));
  t[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) t[i][j] = j * t[i - 1][j] + t[i - 1][j - 1];
  return r < 0 || r > n ? BigInt(0) : t[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
}

// Coefficients (low to high) of prod_{j=0}^{n-1} (x - step * j).
inline std::vector<BigInt> falling(int n, long step) {
  std::vector<BigInt> p{1};
  for (int j = 0; j < n; ++j) {
    std::vector<BigInt> q(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= BigInt(step * j) * p[i];
    }
    p = q;
  }
  return p;
}

inline BigInt s1(int n, int r) {
  const auto p = falling(n, 1);
  return r < 0 || r > n ? BigInt(0) : p[static_cast<std::size_t>(r)];
}

// mu(bottom, y) for every y, from the cover graph alone.
inline std::vector<BigInt> mobius_from_bottom(const wplat::Poset& P) {
  const int N = P.size();
  std::vector<std::vector<char>> below(static_cast<std::size_t>(N), std::vector<char>(static_cast<std::size_t>(N), 0));
  std::vector<int> order(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return P.rank(a) < P.rank(b); });
  for (int y : order) {
    below[y][y] = 1;
    for (int c : P.down(y))
      for (int z = 0, x = P.covers()[static_cast<std::size_t>(c)].lower; z < N; ++z)
        if (below[x][z]) below[y][z] = 1;
  }
  std::vector<BigInt> mu(static_cast<std::size_t>(N), 0);
  for (int y : order) {
    if (y == P.bottom()) {
      mu[y] = 1;
      continue;
    }
    BigInt sum = 0;
    for (int z = 0; z < N; ++z)
      if (z != y && below[y][z] && below[z][P.bottom()]) sum += mu[z];
    mu[y] = -sum;
  }
  return mu;
}

// (-1)^n prod_{j=0}^{n-2} (k(j+1) - 1)
inline BigInt mobius_formula(int n, int k) {
  BigInt v = n % 2 ? -1 : 1;
  for (int j = 0; j <= n - 2; ++j) v *= k * (j + 1) - 1;
  return v;
}

}  // namespace oracle
