#pragma once

#include <vector>

#include "wplat/exact.hpp"

namespace wplat {

/// lambda_1 >= lambda_2 >= ... > 0.
struct IntegerPartition {
  std::vector<int> parts;

  int size() const;                // sum of parts
  int length() const { return static_cast<int>(parts.size()); }
  std::vector<int> multiplicities() const;  // m[j] = #{i : parts[i] == j}, j = 0..size()

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
};

/// All partitions of n in reverse-lexicographic order, (n) first and (1^n) last.
std::vector<IntegerPartition> integer_partitions(int n);
/// Partitions of n with exactly `length` parts, same order.
std::vector<IntegerPartition> integer_partitions(int n, int length);

// Out-of-range arguments (negative, or r > n) yield 0 throughout.

BigInt stirling1(int n, int r);  // signed, (x)_n = sum s(n,r) x^r
BigInt stirling2(int n, int r);  // alternating-sum formula
/// Computed as sum_r S(n,r) and by B_{m+1} = sum C(m,j) B_j; throws
/// ConsistencyError if the two disagree.
BigInt bell(int n);

/// Direct sums over weakly decreasing tuples n >= i_1 >= ... >= i_{k-1} >= r.
BigInt T_def(int n, int k, int r);
BigInt t_def(int n, int k, int r);

BigInt f_lambda(const IntegerPartition& lambda);  // n! / prod (j!)^{m_j} m_j!
BigInt g_lambda(const IntegerPartition& lambda);  // (l - 1)! f_lambda

/// e_j(1, 2, ..., m).
BigInt elem_sym_at_integers(int m, int j);

BigInt T_rec_lambda(int n, int k, int r);
BigInt T_rec_split(int n, int k, int r);
BigInt t_rec_split(int n, int k, int r);
BigInt t_rec_first_column(int n, int k);
BigInt t_rec_elem_sym(int n, int k, int r);

}  // namespace wplat
