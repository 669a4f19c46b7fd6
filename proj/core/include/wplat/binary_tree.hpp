#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wplat/lattice.hpp"

namespace wplat {

/// Node of a complete binary tree; the root carries no label.
struct LbtNode {
  int left = -1;
  int right = -1;
  int value = 0;  // integer label in [n]
  int sub = 0;    // subscript in [k]

  bool is_leaf() const { return left < 0; }
  friend auto operator<=>(const LbtNode&, const LbtNode&) = default;
};

/// Complete binary tree with labels value_sub; nodes stored in preorder, root at 0.
struct LabeledBinaryTree {
  int n = 0;
  int k = 0;
  std::vector<LbtNode> nodes;

  friend auto operator<=>(const LabeledBinaryTree&, const LabeledBinaryTree&) = default;
};

/// Label order: 1_k < 2_k < ... < n_k < 1_{k-1} < ... < n_1.
bool label_less(const LbtNode& a, const LbtNode& b);

enum class LbtScope {
  Full,       // conditions 1-6, at most n-2 descents, left child of the root not 1_k
  Conditions, // conditions 1-6 only
  Ordered     // conditions 1, 2, 3, 5, distinct node labels decreasing toward the
              // root; for k > 1 also at most n-2 descents and left child of the root not 1_k
};

/// Names of the failed conditions ("spade1".."spade6", "order", "descents", "root"); empty if none.
std::vector<std::string> lbt_violations(const LabeledBinaryTree& t, LbtScope scope = LbtScope::Full);
inline bool is_lbt(const LabeledBinaryTree& t, LbtScope scope = LbtScope::Full) { return lbt_violations(t, scope).empty(); }

/// Every labeled binary tree with n leaves passing the conditions of `scope`,
/// by generation over shapes and labels followed by filtering.
std::vector<LabeledBinaryTree> enumerate_lbt(int n, int k, LbtScope scope = LbtScope::Full);

/// Unlabeled complete binary trees with n leaves, preorder node layout.
std::vector<LabeledBinaryTree> binary_tree_shapes(int n);

/// Internal node labels (left value, right value)_{left subscript} sorted
/// strictly decreasing; (1,n)_k is appended when `append_top`.
/// Throws DomainError if the labels repeat or a node would precede its children.
LabelChain lbt_to_chain(const LabeledBinaryTree& t, bool append_top = true);

/// Inverse of lbt_to_chain. Accepts a maximal decreasing chain of L_n^(k)
/// (ending in (1,n)_k), or for k = 1 also a decreasing chain of length n-1
/// reaching the one-block partition. Throws DomainError otherwise.
LabeledBinaryTree chain_to_lbt(const LabelChain& chain, int n, int k);

/// k = 1 tree T(sigma) built by repeated leaf insertion (sigma_1 = 1).
LabeledBinaryTree tree_of_sigma(const std::vector<int>& sigma);

std::vector<int> leaf_word(const LabeledBinaryTree& t);

/// Nested arrays: a node is [[value, sub], left, right], a leaf [[value, sub]], the root [null, left, right].
std::string to_json(const LabeledBinaryTree& t);
std::string to_dot(const LabeledBinaryTree& t);

}  // namespace wplat
