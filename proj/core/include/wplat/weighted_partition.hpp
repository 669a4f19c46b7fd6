#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "wplat/errors.hpp"

namespace wplat {

using Block = std::vector<int>;
using Layer = std::vector<Block>;

/// A k-layer refinement multichain of set partitions of [n] = {1..n}.
///
/// Layer 1 is an ordinary set partition; every block of layer l+1 lies inside
/// one block of layer l, and layers >= 2 carry no singletons. Internally each
/// layer is stored as the map e -> min(block of e), which is canonical, so
/// equal values compare equal bytewise.
class WeightedPartition {
 public:
  /// 0^ = 1/2/.../n.
  static WeightedPartition bottom(int n, int k);
  /// Validates and canonicalizes; throws ValidationError.
  static WeightedPartition from_layers(int n, int k, const std::vector<Layer>& layers);
  /// From the per-layer "block minimum" maps (1-based, index 0 unused);
  /// throws ValidationError if they do not describe a weighted partition.
  static WeightedPartition from_min_maps(int n, int k, const std::vector<std::vector<int>>& mins);

  int n() const { return n_; }
  int k() const { return k_; }

  /// Minimum of the layer-l block containing e (e itself for a singleton).
  int block_min(int layer, int e) const {
    return mins_[static_cast<std::size_t>((layer - 1) * n_ + (e - 1))] + 1;
  }
  bool same_block(int layer, int a, int b) const { return block_min(layer, a) == block_min(layer, b); }

  /// Blocks of one layer sorted by minimum; layers >= 2 drop singletons unless asked.
  Layer blocks(int layer, bool with_singletons = false) const;
  std::vector<Layer> layers() const;

  /// Merges the blocks holding a and b at every layer 1..layer (singletons
  /// count as blocks). Precondition: the merge keeps nesting intact.
  WeightedPartition merged(int a, int b, int layer) const;

  int block_count() const;  // number of layer-1 blocks
  int rank() const { return n_ - block_count(); }

  const std::vector<unsigned char>& raw() const { return mins_; }

  friend bool operator==(const WeightedPartition&, const WeightedPartition&) = default;
  friend auto operator<=>(const WeightedPartition& a, const WeightedPartition& b) {
    return std::tie(a.n_, a.k_, a.mins_) <=> std::tie(b.n_, b.k_, b.mins_);
  }

 private:
  WeightedPartition(int n, int k) : n_(n), k_(k) {}

  int n_ = 0;
  int k_ = 0;
  std::vector<unsigned char> mins_;
};

struct WeightedPartitionHash {
  std::size_t operator()(const WeightedPartition& p) const noexcept;
};

enum class ViolationKind { OutOfRange, Coverage, Overlap, Nesting, Singleton, LayerCount };

struct Violation {
  ViolationKind kind;
  int layer;
  std::string detail;
};

std::string to_string(ViolationKind kind);

class ValidationError : public PreconditionError {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Every violated invariant, in layer order; empty iff the layers are valid.
std::vector<Violation> validate(int n, int k, const std::vector<Layer>& layers);

/// (i, j, l): i < j share a block at layer l and at no deeper layer.
struct Edge {
  int i, j, layer;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};
using EdgeSet = std::vector<Edge>;  // sorted

EdgeSet edge_set(const WeightedPartition& p);
WeightedPartition edge_set_inverse(const EdgeSet& edges, int n, int k);

/// {"n":..,"k":..,"layers":[[[..],..],..]}
std::string to_json(const WeightedPartition& p);
WeightedPartition wp_from_json(const std::string& text);

/// Each weighted partition of [n] with k layers exactly once, ordered
/// lexicographically by canonical JSON text.
std::vector<WeightedPartition> enumerate_all(int n, int k);
std::vector<WeightedPartition> enumerate_by_blocks(int n, int k, int r);

/// Rank-1 elements: one per pair i < j and layer l, ordered by (i, j, l).
std::vector<WeightedPartition> atoms(int n, int k);
WeightedPartition atom(int n, int k, int i, int j, int layer);
std::vector<WeightedPartition> atom_decomposition(const WeightedPartition& p);

// One-line notation, e.g. "1(35)^2/(24)^3/6".
std::string one_line(const WeightedPartition& p);
WeightedPartition parse_one_line(const std::string& text, int n, int k);

}  // namespace wplat
