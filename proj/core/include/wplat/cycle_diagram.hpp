#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wplat/exact.hpp"

namespace wplat {

/// Points 1..n with directed edges i -> j, i < j, and at most one edge into
/// each point: an increasing forest. Edges are sorted by target.
struct CycleDiagram {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int components() const { return n - static_cast<int>(edges.size()); }
  friend bool operator==(const CycleDiagram&, const CycleDiagram&) = default;
};

/// Throws PreconditionError unless d is an increasing forest on [n].
void check(const CycleDiagram& d);

/// Diagrams with r components; count |s(n, r)|.
std::vector<CycleDiagram> enumerate_cycle_diagrams(int n, int r);

/// Number of edge labelings in [1, k] that weakly increase along directed paths.
BigInt wt_k(const CycleDiagram& d, int k);
/// Same count by trying every labeling (k^edges of them).
BigInt wt_k_exhaustive(const CycleDiagram& d, int k);

/// (-1)^{n+r} sum over C(n, r) of wt_k.
BigInt t_via_diagrams(int n, int k, int r);

/// {"n":..,"edges":[[i,j],..]}, or [[i,j,label],..] when labels are given.
std::string to_json(const CycleDiagram& d, const std::vector<int>& labels = {});

}  // namespace wplat
