#include "wplat/cycle_diagram.hpp"

#include <functional>

#include "wplat/errors.hpp"

namespace wplat {

namespace {

std::vector<std::vector<int>> children_of(const CycleDiagram& d) {
  std::vector<std::vector<int>> ch(static_cast<std::size_t>(d.n + 1));
  for (const auto& [i, j] : d.edges) ch[static_cast<std::size_t>(i)].push_back(j);
  return ch;
}

}  // namespace

void check(const CycleDiagram& d) {
  std::vector<int> incoming(static_cast<std::size_t>(d.n + 1), 0);
  for (const auto& [i, j] : d.edges) {
    if (i < 1 || j > d.n || i >= j) throw PreconditionError("edge " + std::to_string(i) + "->" + std::to_string(j) + " is not increasing in [1,n]");
    if (++incoming[static_cast<std::size_t>(j)] > 1) throw PreconditionError("point " + std::to_string(j) + " has two incoming edges");
  }
}

std::vector<CycleDiagram> enumerate_cycle_diagrams(int n, int r) {
  std::vector<CycleDiagram> out;
  if (n < 1 || r < 1 || r > n) return out;
  CycleDiagram cur{n, {}};
  std::function<void(int, int)> rec = [&](int j, int comps) {
    if (comps > r || comps + (n - j + 1) < r) return;
    if (j > n) {
      if (comps == r) out.push_back(cur);
      return;
    }
    // point j starts a new component
    rec(j + 1, comps + 1);
    for (int i = 1; i < j; ++i) {
      cur.edges.emplace_back(i, j);
      rec(j + 1, comps);
      cur.edges.pop_back();
    }
  };
  rec(2, 1);
  return out;
}

BigInt wt_k(const CycleDiagram& d, int k) {
  check(d);
  if (k < 1) return 0;
  const auto ch = children_of(d);
  // W(j, v): labelings below j given the edge into j carries v
  std::vector<std::vector<BigInt>> W(static_cast<std::size_t>(d.n + 1), std::vector<BigInt>(static_cast<std::size_t>(k + 2), 0));
  for (int j = d.n; j >= 1; --j) {
    for (int v = 1; v <= k; ++v) {
      BigInt prod = 1;
      for (int c : ch[static_cast<std::size_t>(j)]) {
        BigInt s = 0;
        for (int w = v; w <= k; ++w) s += W[static_cast<std::size_t>(c)][static_cast<std::size_t>(w)];
        prod *= s;
      }
      W[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = prod;
    }
  }
  std::vector<int> has_parent(static_cast<std::size_t>(d.n + 1), 0);
  for (const auto& e : d.edges) has_parent[static_cast<std::size_t>(e.second)] = 1;
  BigInt total = 1;
  for (int j = 1; j <= d.n; ++j) {
    if (has_parent[static_cast<std::size_t>(j)]) continue;
    for (int c : ch[static_cast<std::size_t>(j)]) {
      BigInt s = 0;
      for (int w = 1; w <= k; ++w) s += W[static_cast<std::size_t>(c)][static_cast<std::size_t>(w)];
      total *= s;
    }
  }
  return total;
}

BigInt wt_k_exhaustive(const CycleDiagram& d, int k) {
  check(d);
  const std::size_t m = d.edges.size();
  std::vector<int> into(static_cast<std::size_t>(d.n + 1), -1);  // edge index entering each point
  for (std::size_t e = 0; e < m; ++e) into[static_cast<std::size_t>(d.edges[e].second)] = static_cast<int>(e);
  std::vector<int> label(m, 1);
  BigInt count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t e = 0; e < m && ok; ++e) {
      const int up = into[static_cast<std::size_t>(d.edges[e].first)];
      if (up >= 0 && label[static_cast<std::size_t>(up)] > label[e]) ok = false;
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < m && label[i] == k) label[i++] = 1;
    if (i == m) break;
    ++label[i];
  }
  return count;
}

BigInt t_via_diagrams(int n, int k, int r) {
  if (n == 0 && r == 0) return 1;
  BigInt sum = 0;
  for (const auto& d : enumerate_cycle_diagrams(n, r)) sum += wt_k(d, k);
  return sign_power(n + r) * sum;
}

std::string to_json(const CycleDiagram& d, const std::vector<int>& labels) {
  std::string out = "{\"n\":" + std::to_string(d.n) + ",\"edges\":[";
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    if (e) out += ',';
    out += "[" + std::to_string(d.edges[e].first) + "," + std::to_string(d.edges[e].second);
    if (e < labels.size()) out += "," + std::to_string(labels[e]);
    out += "]";
  }
  return out + "]}";
}

}  // namespace wplat
