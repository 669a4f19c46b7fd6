#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wplat/exact.hpp"
#include "wplat/polynomial.hpp"
#include "wplat/report.hpp"
#include "wplat/weighted_partition.hpp"

namespace wplat {

/// Edge label (alpha, beta)_layer. Deeper layers are smaller; within a layer
/// the order is lexicographic on (alpha, beta).
struct CoverLabel {
  int alpha = 0;
  int beta = 0;
  int layer = 0;

  friend bool operator==(const CoverLabel&, const CoverLabel&) = default;
  friend auto operator<=>(const CoverLabel& a, const CoverLabel& b) {
    return std::make_tuple(-a.layer, a.alpha, a.beta) <=> std::make_tuple(-b.layer, b.alpha, b.beta);
  }
};

std::string to_string(const CoverLabel& l);  // "(1,3)_2"

using LabelChain = std::vector<CoverLabel>;
std::string to_string(const LabelChain& c);  // labels separated by spaces

bool is_rising(const LabelChain& c);      // weakly increasing
bool is_decreasing(const LabelChain& c);  // strictly decreasing

/// Every cover of p inside P_n^(k), sorted by label. Empty at rank n-1.
std::vector<std::pair<CoverLabel, WeightedPartition>> admissible_covers(const WeightedPartition& p);

struct Cover {
  int lower;
  int upper;
  CoverLabel label;
};

inline constexpr std::size_t kDefaultGuard = 200000;

/// L_n^(k): the weighted partitions (indices ordered by rank, then by
/// enumeration order) followed by the adjoined top element.
class Poset {
 public:
  int n() const { return n_; }
  int k() const { return k_; }
  int size() const { return static_cast<int>(rank_.size()); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }

  /// Throws PreconditionError for the top element.
  const WeightedPartition& element(int i) const;
  int rank(int i) const { return rank_[static_cast<std::size_t>(i)]; }
  int index_of(const WeightedPartition& p) const;  // -1 if absent
  /// One-line notation, or "top".
  std::string name(int i) const;

  const std::vector<Cover>& covers() const { return covers_; }
  /// Indices into covers(), sorted by label.
  const std::vector<int>& up(int i) const { return up_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& down(int i) const { return down_[static_cast<std::size_t>(i)]; }

  /// Reflexive-transitive closure of the cover relation. The first call builds
  /// a size^2-bit table (thread-safe); throws ResourceLimitError beyond 40000 elements.
  bool leq(int x, int y) const;

 private:
  friend Poset build_poset(int n, int k, std::size_t guard);

  struct Closure;

  int n_ = 0, k_ = 0;
  std::vector<WeightedPartition> elements_;
  std::unordered_map<WeightedPartition, int, WeightedPartitionHash> index_;
  std::vector<int> rank_;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::shared_ptr<Closure> closure_;
};

/// Throws ResourceLimitError when the element count exceeds `guard`.
Poset build_poset(int n, int k, std::size_t guard = kDefaultGuard);
std::size_t poset_size(int n, int k);  // elements including the top, without building

bool leq(const Poset& poset, int x, int y);

struct Interval {
  int bottom;
  int top;
  std::vector<int> members;  // sorted
};
Interval interval(const Poset& poset, int x, int y);

enum class ChainFilter { All, Rising, Decreasing };

/// Every maximal chain of [x, y] passing `filter`, as label sequences, in
/// lexicographic label order. Pruned depth-first search.
void for_each_maximal_chain(const Poset& poset, int x, int y, ChainFilter filter,
                            const std::function<void(const LabelChain&)>& visit);
std::vector<LabelChain> maximal_chains(const Poset& poset, int x, int y, ChainFilter filter = ChainFilter::All);
BigInt count_maximal_chains(const Poset& poset, int x, int y, ChainFilter filter = ChainFilter::All);
std::vector<LabelChain> filter_rising(const std::vector<LabelChain>& chains);
std::vector<LabelChain> filter_decreasing(const std::vector<LabelChain>& chains);

/// Follows `chain` upward from 0^; returns the visited element indices.
/// Throws DomainError if some label has no matching cover.
std::vector<int> chain_elements(const Poset& poset, const LabelChain& chain);
/// Maximal 0^-1^ chain that is strictly decreasing.
bool is_maximal_decreasing(const Poset& poset, const LabelChain& chain);

/// Every interval has exactly one rising maximal chain and it is the
/// strictly lexicographically first one.
CheckReport verify_el(const Poset& poset);
/// (1,2)_k (1,3)_k ... (1,n)_k (1,n)_k
LabelChain expected_rising_chain(int n, int k);

BigInt mobius_recursive(const Poset& poset, int x, int y);
/// mu(x, z) for every z (zero where x is not below z).
std::vector<BigInt> mobius_from(const Poset& poset, int x);
/// (-1)^n times the number of maximal decreasing 0^-1^ chains.
BigInt mobius_via_chains(const Poset& poset);
/// (-1)^n prod_{j=0}^{n-2} (k(j+1) - 1)
BigInt mobius_closed_form(int n, int k);

/// Sum of mu(0^, p) over p with r first-layer blocks.
BigInt whitney(const Poset& poset, int r);
BigInt whitney_formula(int n, int k, int r);  // k^{n-r} s(n, r)
Polynomial char_poly(const Poset& poset);      // sum_r w_r x^r
Polynomial char_poly_product(int n, int k);    // prod_{j<n} (x - kj)
std::string char_poly_factored(int n, int k);  // "x(x - 2)(x - 4)"

/// Layerwise join / meet of the underlying set partitions, singletons dropped above layer 1.
WeightedPartition layer_join(const WeightedPartition& x, const WeightedPartition& y);
WeightedPartition layer_meet(const WeightedPartition& x, const WeightedPartition& y);

/// Hasse diagram; same-rank nodes share a rank, edges carry labels.
std::string hasse_dot(const Poset& poset);

}  // namespace wplat
