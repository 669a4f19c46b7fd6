#include "wplat/rooted_tree.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace wplat {

namespace {

RootedTree build(const WeightedPartition& p, const Block& x, int depth) {
  RootedTree node;
  if (depth == p.k()) {
    for (int e : x) node.children.push_back({{}, e});
    return node;
  }
  std::map<int, Block> groups;
  for (int e : x) groups[p.block_min(depth + 1, e)].push_back(e);
  for (auto& [m, b] : groups) node.children.push_back(build(p, b, depth + 1));
  return node;
}

void collect(const RootedTree& t, int depth, int k, std::vector<Layer>& layers, Block& leaves) {
  if (t.is_leaf()) {
    if (depth != k + 1) throw PreconditionError("leaf at depth " + std::to_string(depth) + ", expected " + std::to_string(k + 1));
    leaves.push_back(t.label);
    return;
  }
  if (depth > k) throw PreconditionError("tree deeper than k+1 levels");
  Block mine;
  for (const auto& c : t.children) collect(c, depth + 1, k, layers, mine);
  if (depth >= 1 && (depth == 1 || mine.size() > 1)) {
    std::sort(mine.begin(), mine.end());
    layers[static_cast<std::size_t>(depth - 1)].push_back(mine);
  }
  leaves.insert(leaves.end(), mine.begin(), mine.end());
}

RootedTree canonical(const RootedTree& t) {
  RootedTree out;
  for (const auto& c : t.children) out.children.push_back(canonical(c));
  std::sort(out.children.begin(), out.children.end(),
            [](const RootedTree& a, const RootedTree& b) { return shape_key(a) < shape_key(b); });
  return out;
}

void json_of(const RootedTree& t, std::string& out) {
  if (t.is_leaf()) {
    out += std::to_string(t.label);
    return;
  }
  out += '[';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ',';
    json_of(t.children[i], out);
  }
  out += ']';
}

}  // namespace

int RootedTree::leaf_count() const {
  if (is_leaf()) return 1;
  int c = 0;
  for (const auto& ch : children) c += ch.leaf_count();
  return c;
}

KLevelRootedTree to_rooted_tree(const WeightedPartition& p) {
  KLevelRootedTree t;
  t.k = p.k();
  for (const auto& b : p.blocks(1)) t.root.children.push_back(build(p, b, 1));
  return t;
}

WeightedPartition from_rooted_tree(const KLevelRootedTree& t) {
  if (t.root.is_leaf()) throw PreconditionError("tree has no leaves below the root");
  std::vector<Layer> layers(static_cast<std::size_t>(t.k));
  Block leaves;
  collect(t.root, 0, t.k, layers, leaves);
  const int n = static_cast<int>(leaves.size());
  std::sort(leaves.begin(), leaves.end());
  for (int i = 0; i < n; ++i)
    if (leaves[static_cast<std::size_t>(i)] != i + 1) throw PreconditionError("leaf labels are not a bijection onto [n]");
  return WeightedPartition::from_layers(n, t.k, layers);
}

std::string shape_key(const RootedTree& t) {
  std::vector<std::string> keys;
  for (const auto& c : t.children) keys.push_back(shape_key(c));
  std::sort(keys.begin(), keys.end());
  std::string out = "(";
  for (const auto& key : keys) out += key;
  return out + ")";
}

KLevelRootedTree shape_of(const KLevelRootedTree& t) { return {t.k, canonical(t.root)}; }

BigInt tree_class_size(const KLevelRootedTree& shape) {
  BigInt size = factorial(static_cast<unsigned>(shape.root.leaf_count()));
  std::function<void(const RootedTree&)> visit = [&](const RootedTree& node) {
    std::map<std::string, unsigned> classes;
    for (const auto& c : node.children) {
      ++classes[shape_key(c)];
      visit(c);
    }
    for (const auto& [key, m] : classes) size /= factorial(m);
  };
  visit(shape.root);
  return size;
}

std::vector<KLevelRootedTree> enumerate_tree_shapes(int n, int k) {
  if (n < 1 || k < 1) throw PreconditionError("enumerate_tree_shapes: n and k must be positive");
  // shapes[d][m]: shapes of height d with m leaves, by canonical key
  std::vector<std::vector<std::vector<RootedTree>>> shapes(static_cast<std::size_t>(k + 2),
                                                           std::vector<std::vector<RootedTree>>(static_cast<std::size_t>(n + 1)));
  shapes[0][1].push_back(RootedTree{});
  for (int d = 1; d <= k + 1; ++d) {
    std::vector<std::pair<int, const RootedTree*>> pool;  // (leaf count, shape)
    for (int m = 1; m <= n; ++m)
      for (const auto& s : shapes[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(m)]) pool.emplace_back(m, &s);
    std::vector<const RootedTree*> chosen;
    // multisets of pool entries, indices non-increasing
    std::function<void(std::size_t, int)> pick = [&](std::size_t max_idx, int remaining) {
      if (!chosen.empty()) {
        RootedTree node;
        for (const auto* c : chosen) node.children.push_back(*c);
        const int m = node.leaf_count();
        shapes[static_cast<std::size_t>(d)][static_cast<std::size_t>(m)].push_back(canonical(node));
      }
      for (std::size_t i = 0; i < max_idx; ++i) {
        if (pool[i].first > remaining) continue;
        chosen.push_back(pool[i].second);
        pick(i + 1, remaining - pool[i].first);
        chosen.pop_back();
      }
    };
    pick(pool.size(), n);
  }
  auto& top = shapes[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(n)];
  std::sort(top.begin(), top.end(), [](const RootedTree& a, const RootedTree& b) { return shape_key(a) < shape_key(b); });
  std::vector<KLevelRootedTree> out;
  for (auto& s : top) out.push_back({k, s});
  return out;
}

std::string to_json(const KLevelRootedTree& t) {
  std::string out;
  json_of(t.root, out);
  return out;
}

}  // namespace wplat
