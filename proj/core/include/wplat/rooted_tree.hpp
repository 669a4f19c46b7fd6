#pragma once

#include <string>
#include <vector>

#include "wplat/exact.hpp"
#include "wplat/weighted_partition.hpp"

namespace wplat {

/// Node of a rooted tree; leaves carry a label in [n] (0 for unlabeled shapes).
struct RootedTree {
  std::vector<RootedTree> children;
  int label = 0;

  bool is_leaf() const { return children.empty(); }
  int leaf_count() const;
  friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

/// Every leaf sits exactly k+1 edges below the root.
struct KLevelRootedTree {
  int k = 1;
  RootedTree root;
};

/// Depth-l nodes are the layer-l blocks (singletons included), children ordered by minimum.
KLevelRootedTree to_rooted_tree(const WeightedPartition& p);
/// Invariant under exchanging sibling subtrees. Throws PreconditionError on
/// uneven leaf depths or leaf labels that are not a bijection onto [n].
WeightedPartition from_rooted_tree(const KLevelRootedTree& t);

/// Unlabeled shape with children in canonical order.
KLevelRootedTree shape_of(const KLevelRootedTree& t);
/// Canonical text of a (shape of a) tree: "()" for a leaf.
std::string shape_key(const RootedTree& t);

/// n! prod_c F(c), F(c) = prod_j 1/m_j! over classes of isomorphic children of c.
BigInt tree_class_size(const KLevelRootedTree& shape);

/// Every unlabeled k-level shape with n leaves, canonical, ordered by shape_key.
std::vector<KLevelRootedTree> enumerate_tree_shapes(int n, int k);

std::string to_json(const KLevelRootedTree& t);

}  // namespace wplat
