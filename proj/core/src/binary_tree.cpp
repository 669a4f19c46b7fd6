#include "wplat/binary_tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace wplat {

namespace {

// Copies the tree rooted at `root` into preorder layout.
std::vector<LbtNode> preorder(const std::vector<LbtNode>& nodes, int root) {
  std::vector<LbtNode> out;
  std::function<int(int)> copy = [&](int i) {
    const int at = static_cast<int>(out.size());
    out.push_back(nodes[static_cast<std::size_t>(i)]);
    if (!nodes[static_cast<std::size_t>(i)].is_leaf()) {
      const int l = copy(nodes[static_cast<std::size_t>(i)].left);
      const int r = copy(nodes[static_cast<std::size_t>(i)].right);
      out[static_cast<std::size_t>(at)].left = l;
      out[static_cast<std::size_t>(at)].right = r;
    }
    return at;
  };
  copy(root);
  return out;
}

const LbtNode& at(const LabeledBinaryTree& t, int i) { return t.nodes[static_cast<std::size_t>(i)]; }

void subtree_values(const LabeledBinaryTree& t, int i, std::vector<int>& out) {
  out.push_back(at(t, i).value);
  if (!at(t, i).is_leaf()) {
    subtree_values(t, at(t, i).left, out);
    subtree_values(t, at(t, i).right, out);
  }
}

// Values of nodes that are right children of some node inside the subtree of i.
void right_values(const LabeledBinaryTree& t, int i, std::vector<int>& out) {
  if (at(t, i).is_leaf()) return;
  out.push_back(at(t, at(t, i).right).value);
  right_values(t, at(t, i).left, out);
  right_values(t, at(t, i).right, out);
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// Internal node labels keyed by node.
std::map<int, CoverLabel> node_labels(const LabeledBinaryTree& t) {
  std::map<int, CoverLabel> out;
  for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i) {
    const auto& c = at(t, i);
    if (!c.is_leaf()) out[i] = {at(t, c.left).value, at(t, c.right).value, at(t, c.left).sub};
  }
  return out;
}

void shapes_rec(int n, std::vector<std::vector<LbtNode>>& out) {
  if (n == 1) {
    out.push_back({LbtNode{}});
    return;
  }
  for (int a = 1; a < n; ++a) {
    std::vector<std::vector<LbtNode>> ls, rs;
    shapes_rec(a, ls);
    shapes_rec(n - a, rs);
    for (const auto& l : ls)
      for (const auto& r : rs) {
        std::vector<LbtNode> t{LbtNode{}};
        t[0].left = 1;
        for (auto node : l) {
          if (!node.is_leaf()) node.left += 1, node.right += 1;
          t.push_back(node);
        }
        t[0].right = static_cast<int>(t.size());
        const int off = static_cast<int>(t.size());
        for (auto node : r) {
          if (!node.is_leaf()) node.left += off, node.right += off;
          t.push_back(node);
        }
        out.push_back(std::move(t));
      }
  }
}

}  // namespace

bool label_less(const LbtNode& a, const LbtNode& b) {
  if (a.sub != b.sub) return a.sub > b.sub;
  return a.value < b.value;
}

std::vector<std::string> lbt_violations(const LabeledBinaryTree& t, LbtScope scope) {
  std::set<std::string> bad;
  const int N = static_cast<int>(t.nodes.size());
  if (N != 2 * t.n - 1) return {"shape"};
  for (int i = 0; i < N; ++i) {
    const auto& c = at(t, i);
    if ((c.left < 0) != (c.right < 0)) return {"shape"};
  }

  // (1) labels in range, leaf integers a bijection onto [n]
  std::vector<int> leaves;
  for (int i = 1; i < N; ++i) {
    const auto& c = at(t, i);
    if (c.value < 1 || c.value > t.n || c.sub < 1 || c.sub > t.k) bad.insert("spade1");
    if (c.is_leaf()) leaves.push_back(c.value);
  }
  std::sort(leaves.begin(), leaves.end());
  for (int i = 0; i < static_cast<int>(leaves.size()); ++i)
    if (leaves[static_cast<std::size_t>(i)] != i + 1) bad.insert("spade1");

  int descents = 0;
  for (int i = 0; i < N; ++i) {
    const auto& c = at(t, i);
    if (c.is_leaf()) continue;
    const auto& L = at(t, c.left);
    const auto& R = at(t, c.right);
    // (2) siblings
    if (!(L.value < R.value) || L.sub != R.sub) bad.insert("spade2");
    if (i == 0) continue;
    // (3) subscripts weakly increase toward the root
    if (L.sub > c.sub || R.sub > c.sub) bad.insert("spade3");
    // (4) a descent raises the subscript
    if (label_less(c, L)) {
      ++descents;
      if (!(c.sub > L.sub) && scope != LbtScope::Ordered) bad.insert("spade4");
    }
  }

  // (5) internal non-root labels come from below; right children avoid right-node labels
  for (int p = 0; p < N; ++p) {
    const auto& parent = at(t, p);
    if (parent.is_leaf()) continue;
    for (int side = 0; side < 2; ++side) {
      const int i = side == 0 ? parent.left : parent.right;
      const auto& c = at(t, i);
      if (c.is_leaf()) continue;
      std::vector<int> below;
      subtree_values(t, c.left, below);
      subtree_values(t, c.right, below);
      if (!contains(below, c.value)) bad.insert("spade5");
      if (side == 1) {
        std::vector<int> rights;
        right_values(t, i, rights);
        bool ok = false;
        for (int v : below)
          if (v == c.value && !contains(rights, v)) ok = true;
        if (!ok) bad.insert("spade5");
      }
    }
  }

  if (scope == LbtScope::Ordered) {
    const auto labels = node_labels(t);
    std::set<CoverLabel> seen;
    for (const auto& [node, label] : labels) {
      if (!seen.insert(label).second) bad.insert("order");
      const auto& c = at(t, node);
      for (int child : {c.left, c.right})
        if (!at(t, child).is_leaf() && !(label < labels.at(child))) bad.insert("order");
    }
  }

  // (6) each same-subscript region is order-isomorphic to a canonical k = 1 tree:
  // region leaves carry distinct integers and every inner region node carries
  // the minimum of the region leaves beneath it
  if (scope != LbtScope::Ordered) {
    std::function<std::vector<int>(int)> region_leaves = [&](int i) -> std::vector<int> {
      const auto& c = at(t, i);
      if (c.is_leaf() || at(t, c.left).sub != c.sub) return {c.value};
      auto mine = region_leaves(c.left);
      const auto right = region_leaves(c.right);
      mine.insert(mine.end(), right.begin(), right.end());
      if (c.value != *std::min_element(mine.begin(), mine.end())) bad.insert("spade6");
      return mine;
    };
    std::function<void(int)> descend = [&](int i) {
      const auto& c = at(t, i);
      if (c.is_leaf()) return;
      if (i == 0 || at(t, c.left).sub != c.sub) {
        auto region = region_leaves(c.left);
        const auto right = region_leaves(c.right);
        region.insert(region.end(), right.begin(), right.end());
        std::sort(region.begin(), region.end());
        if (std::adjacent_find(region.begin(), region.end()) != region.end()) bad.insert("spade6");
      }
      descend(c.left);
      descend(c.right);
    };
    descend(0);
  }

  if (scope == LbtScope::Full || (scope == LbtScope::Ordered && t.k > 1)) {
    if (descents > t.n - 2) bad.insert("descents");
    if (N > 1) {
      const auto& L = at(t, at(t, 0).left);
      if (L.value == 1 && L.sub == t.k) bad.insert("root");
    }
  }
  return {bad.begin(), bad.end()};
}

std::vector<LabeledBinaryTree> binary_tree_shapes(int n) {
  std::vector<std::vector<LbtNode>> raw;
  if (n >= 1) shapes_rec(n, raw);
  std::vector<LabeledBinaryTree> out;
  for (auto& r : raw) out.push_back({n, 0, std::move(r)});
  return out;
}

std::vector<LabeledBinaryTree> enumerate_lbt(int n, int k, LbtScope scope) {
  if (n < 2 || k < 1) throw PreconditionError("enumerate_lbt: need n >= 2 and k >= 1");
  std::vector<LabeledBinaryTree> out;
  for (auto shape : binary_tree_shapes(n)) {
    shape.k = k;
    const int N = static_cast<int>(shape.nodes.size());
    std::vector<int> order, parent(static_cast<std::size_t>(N), -1);
    std::vector<char> is_right(static_cast<std::size_t>(N), 0);
    std::function<void(int)> post = [&](int i) {
      const auto& c = shape.nodes[static_cast<std::size_t>(i)];
      if (!c.is_leaf()) {
        parent[static_cast<std::size_t>(c.left)] = i;
        parent[static_cast<std::size_t>(c.right)] = i;
        is_right[static_cast<std::size_t>(c.right)] = 1;
        post(c.left);
        post(c.right);
      }
      if (i != 0) order.push_back(i);
    };
    post(0);
    std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
    auto& nd = shape.nodes;

    std::function<void(std::size_t)> assign = [&](std::size_t pos) {
      if (pos == order.size()) {
        if (lbt_violations(shape, scope).empty()) out.push_back(shape);
        return;
      }
      const int i = order[pos];
      auto& c = nd[static_cast<std::size_t>(i)];
      auto sibling_ok = [&]() {
        if (!is_right[static_cast<std::size_t>(i)]) return true;
        const auto& L = nd[static_cast<std::size_t>(nd[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])].left)];
        return L.value < c.value && L.sub == c.sub;
      };
      if (c.is_leaf()) {
        for (int v = 1; v <= n; ++v) {
          if (used[static_cast<std::size_t>(v)]) continue;
          used[static_cast<std::size_t>(v)] = 1;
          for (int s = 1; s <= k; ++s) {
            c.value = v, c.sub = s;
            if (sibling_ok()) assign(pos + 1);
          }
          used[static_cast<std::size_t>(v)] = 0;
        }
        c.value = c.sub = 0;
        return;
      }
      std::vector<int> below;
      subtree_values(shape, c.left, below);
      subtree_values(shape, c.right, below);
      std::sort(below.begin(), below.end());
      below.erase(std::unique(below.begin(), below.end()), below.end());
      const auto& L = nd[static_cast<std::size_t>(c.left)];
      for (int s = L.sub; s <= k; ++s)
        for (int v : below) {
          if (s == L.sub && v < L.value && scope != LbtScope::Ordered) continue;
          c.value = v, c.sub = s;
          if (sibling_ok()) assign(pos + 1);
        }
      c.value = c.sub = 0;
    };
    assign(0);
  }
  return out;
}

LabelChain lbt_to_chain(const LabeledBinaryTree& t, bool append_top) {
  const auto labels = node_labels(t);
  std::vector<std::pair<CoverLabel, int>> sorted;
  for (const auto& [node, label] : labels) sorted.emplace_back(label, node);
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return b.first < a.first; });
  std::map<int, std::size_t> position;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i && !(sorted[i].first < sorted[i - 1].first)) throw DomainError("repeated node label " + to_string(sorted[i].first));
    position[sorted[i].second] = i;
  }
  for (const auto& [node, p] : position) {
    const auto& c = at(t, node);
    for (int child : {c.left, c.right})
      if (!at(t, child).is_leaf() && position.at(child) > p)
        throw DomainError("node label " + to_string(sorted[p].first) + " precedes a label below it");
  }
  LabelChain chain;
  for (const auto& s : sorted) chain.push_back(s.first);
  if (append_top) chain.push_back({1, t.n, t.k});
  return chain;
}

LabeledBinaryTree chain_to_lbt(const LabelChain& chain, int n, int k) {
  if (n < 1 || k < 1) throw PreconditionError("chain_to_lbt: n and k must be positive");
  LabelChain body = chain;
  const CoverLabel last{1, n, k};
  if (static_cast<int>(chain.size()) == n && chain.back() == last) body.pop_back();
  else if (!(k == 1 && static_cast<int>(chain.size()) == n - 1))
    throw DomainError("chain " + to_string(chain) + " is not maximal");
  if (!is_decreasing(chain)) throw DomainError("chain " + to_string(chain) + " is not decreasing");

  auto p = WeightedPartition::bottom(n, k);
  std::vector<LbtNode> nodes(static_cast<std::size_t>(n));
  std::vector<int> node_of(static_cast<std::size_t>(n + 1));
  for (int e = 1; e <= n; ++e) nodes[static_cast<std::size_t>(e - 1)].value = e, node_of[static_cast<std::size_t>(e)] = e - 1;
  for (const auto& label : body) {
    bool admissible = false;
    for (const auto& cover : admissible_covers(p)) admissible |= cover.first == label;
    if (!admissible) throw DomainError("label " + to_string(label) + " is not a cover of " + one_line(p));
    const int a = p.block_min(1, label.alpha);
    const int A = node_of[static_cast<std::size_t>(a)];
    const int B = node_of[static_cast<std::size_t>(label.beta)];
    nodes[static_cast<std::size_t>(A)].value = label.alpha;
    nodes[static_cast<std::size_t>(A)].sub = label.layer;
    nodes[static_cast<std::size_t>(B)].value = label.beta;
    nodes[static_cast<std::size_t>(B)].sub = label.layer;
    nodes.push_back({A, B, 0, 0});
    node_of[static_cast<std::size_t>(a)] = static_cast<int>(nodes.size()) - 1;
    p = p.merged(label.alpha, label.beta, label.layer);
  }
  if (p.block_count() != 1) throw DomainError("chain does not reach a single block");
  const int root = node_of[1];
  nodes[static_cast<std::size_t>(root)].value = 0;
  nodes[static_cast<std::size_t>(root)].sub = 0;
  return {n, k, preorder(nodes, root)};
}

LabeledBinaryTree tree_of_sigma(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  if (n < 1 || sigma.front() != 1) throw DomainError("sigma must start with 1");
  std::vector<LbtNode> nodes{{-1, -1, 1, 1}};
  for (int m = 2; m <= n; ++m) {
    int l = 0;  // 1-based position of m among the values <= m
    for (int v : sigma) {
      if (v > m) continue;
      ++l;
      if (v == m) break;
    }
    const int s = l - 1;
    // s-th leaf from the left
    std::vector<int> leaves;
    std::function<void(int)> walk = [&](int i) {
      if (nodes[static_cast<std::size_t>(i)].is_leaf()) leaves.push_back(i);
      else walk(nodes[static_cast<std::size_t>(i)].left), walk(nodes[static_cast<std::size_t>(i)].right);
    };
    walk(0);
    if (s < 1 || s > static_cast<int>(leaves.size())) throw DomainError("sigma is not a permutation starting with 1");
    const int target = leaves[static_cast<std::size_t>(s - 1)];
    const int v = nodes[static_cast<std::size_t>(target)].value;
    nodes.push_back({-1, -1, v, 1});
    nodes.push_back({-1, -1, m, 1});
    nodes[static_cast<std::size_t>(target)].left = static_cast<int>(nodes.size()) - 2;
    nodes[static_cast<std::size_t>(target)].right = static_cast<int>(nodes.size()) - 1;
  }
  nodes[0].value = nodes[0].sub = 0;
  return {n, 1, preorder(nodes, 0)};
}

std::vector<int> leaf_word(const LabeledBinaryTree& t) {
  std::vector<int> out;
  for (const auto& c : t.nodes)
    if (c.is_leaf()) out.push_back(c.value);
  return out;
}

std::string to_json(const LabeledBinaryTree& t) {
  std::function<std::string(int)> rec = [&](int i) {
    const auto& c = at(t, i);
    std::string label = i == 0 ? "null" : "[" + std::to_string(c.value) + "," + std::to_string(c.sub) + "]";
    if (c.is_leaf()) return "[" + label + "]";
    return "[" + label + "," + rec(c.left) + "," + rec(c.right) + "]";
  };
  return rec(0);
}

std::string to_dot(const LabeledBinaryTree& t) {
  std::ostringstream os;
  os << "digraph T {\n  node [shape=plaintext];\n";
  for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i) {
    const auto& c = at(t, i);
    os << "  t" << i << " [label=\"";
    if (i != 0) os << c.value << "_" << c.sub;
    os << "\"];\n";
  }
  for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i) {
    const auto& c = at(t, i);
    if (!c.is_leaf()) os << "  t" << i << " -> t" << c.left << ";\n  t" << i << " -> t" << c.right << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace wplat
