#include "wplat/perm_diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace wplat {

namespace {

LabelChain sorted_decreasing(LabelChain c) {
  std::sort(c.begin(), c.end(), [](const CoverLabel& a, const CoverLabel& b) { return b < a; });
  return c;
}

}  // namespace

PermDiagram i_of_sigma(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[static_cast<std::size_t>(i)] != i + 1) throw DomainError("sigma is not a permutation of [n]");
  if (n == 0 || sigma.front() != 1) throw DomainError("sigma must start with 1");
  PermDiagram d{sigma, {}};
  for (int j = 1; j < n; ++j) {
    int i = j - 1;
    while (sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(j)]) --i;
    d.pairs.emplace_back(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]);
  }
  return d;
}

std::vector<std::vector<int>> permutations_fixing_one(int n) {
  std::vector<std::vector<int>> out;
  if (n < 1) return out;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do out.push_back(p);
  while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

std::vector<ColoredPermDiagram> enumerate_colorings(const PermDiagram& d, int k) {
  std::vector<ColoredPermDiagram> out;
  ColoredPermDiagram cur{d, std::vector<int>(d.pairs.size(), 0)};
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == d.pairs.size()) {
      out.push_back(cur);
      return;
    }
    const int top = d.pairs[i].first == 1 ? k - 1 : k;
    for (int c = 1; c <= top; ++c) {
      cur.colors[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

LabelChain diagram_to_decreasing_chain(const ColoredPermDiagram& d, int k) {
  LabelChain c;
  for (std::size_t i = 0; i < d.diagram.pairs.size(); ++i)
    c.push_back({d.diagram.pairs[i].first, d.diagram.pairs[i].second, d.colors[i]});
  c = sorted_decreasing(std::move(c));
  c.push_back({1, static_cast<int>(d.diagram.sigma.size()), k});
  return c;
}

LabelChain classical_decreasing_chain(const PermDiagram& d) {
  LabelChain c;
  for (const auto& [a, b] : d.pairs) c.push_back({a, b, 1});
  return sorted_decreasing(std::move(c));
}

std::string to_json(const ColoredPermDiagram& d) {
  std::string out = "{\"sigma\":[";
  for (std::size_t i = 0; i < d.diagram.sigma.size(); ++i) out += (i ? "," : "") + std::to_string(d.diagram.sigma[i]);
  out += "],\"pairs\":[";
  for (std::size_t i = 0; i < d.diagram.pairs.size(); ++i) {
    out += (i ? ",[" : "[") + std::to_string(d.diagram.pairs[i].first) + "," + std::to_string(d.diagram.pairs[i].second);
    if (i < d.colors.size()) out += "," + std::to_string(d.colors[i]);
    out += "]";
  }
  return out + "]}";
}

}  // namespace wplat
