#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wplat/lattice.hpp"

namespace wplat {

/// I(sigma) for a permutation with sigma_1 = 1: for each position j >= 2 the
/// pair (sigma_i, sigma_j), i the largest index below j with sigma_i < sigma_j.
struct PermDiagram {
  std::vector<int> sigma;
  std::vector<std::pair<int, int>> pairs;  // by position j
};

/// Throws DomainError unless sigma is a permutation of [n] starting with 1.
PermDiagram i_of_sigma(const std::vector<int>& sigma);

/// Permutations of [n] with sigma_1 = 1, lexicographic.
std::vector<std::vector<int>> permutations_fixing_one(int n);

/// Pairs through the point 1 take colors in [1, k-1], the others in [1, k].
struct ColoredPermDiagram {
  PermDiagram diagram;
  std::vector<int> colors;  // parallel to diagram.pairs
};

std::vector<ColoredPermDiagram> enumerate_colorings(const PermDiagram& d, int k);

/// Colored pairs as labels in strictly decreasing order, then (1,n)_k.
LabelChain diagram_to_decreasing_chain(const ColoredPermDiagram& d, int k);
/// k = 1: the pairs as a decreasing chain of the ordinary partition lattice
/// (bottom to the one-block partition, no top label).
LabelChain classical_decreasing_chain(const PermDiagram& d);

std::string to_json(const ColoredPermDiagram& d);

}  // namespace wplat
