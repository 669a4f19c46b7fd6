#include "wplat/stirling.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "wplat/errors.hpp"

namespace wplat {

namespace {

using Key = std::tuple<int, int, int>;

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<IntegerPartition>& out) {
  if (remaining == 0) {
    out.push_back({cur});
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

// Triangle of s(i, j) or S(i, j) for 0 <= j <= i <= n, by the usual recurrences.
std::vector<std::vector<BigInt>> triangle(int n, bool first_kind) {
  std::vector<std::vector<BigInt>> tri(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    auto& row = tri[static_cast<std::size_t>(i)];
    row.assign(static_cast<std::size_t>(i + 1), 0);
    row[static_cast<std::size_t>(i)] = 1;
    if (i == 0) continue;
    const auto& prev = tri[static_cast<std::size_t>(i - 1)];
    row[0] = 0;
    for (int j = 1; j < i; ++j) {
      const auto& a = prev[static_cast<std::size_t>(j - 1)];
      const auto& b = prev[static_cast<std::size_t>(j)];
      row[static_cast<std::size_t>(j)] = first_kind ? BigInt(a - (i - 1) * b) : BigInt(a + j * b);
    }
  }
  return tri;
}

// Sum over chains n = i_0 >= i_1 >= ... >= i_k = r of prod tri[i_{j-1}][i_j].
BigInt chain_sum(const std::vector<std::vector<BigInt>>& tri, int n, int k, int r) {
  // dp[i] = sum over chains from n to i of length `step`
  std::vector<BigInt> dp(static_cast<std::size_t>(n + 1), 0);
  dp[static_cast<std::size_t>(n)] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<BigInt> next(static_cast<std::size_t>(n + 1), 0);
    for (int i = 0; i <= n; ++i) {
      if (dp[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = r; j <= i; ++j)
        next[static_cast<std::size_t>(j)] += dp[static_cast<std::size_t>(i)] * tri[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    dp = std::move(next);
  }
  return dp[static_cast<std::size_t>(r)];
}

bool out_of_range(int n, int k, int r) { return n < 0 || k < 0 || r < 0 || r > n; }

}  // namespace

int IntegerPartition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> IntegerPartition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(size() + 1), 0);
  for (int p : parts) ++m[static_cast<std::size_t>(p)];
  return m;
}

std::vector<IntegerPartition> integer_partitions(int n) {
  std::vector<IntegerPartition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<IntegerPartition> integer_partitions(int n, int length) {
  std::vector<IntegerPartition> out;
  for (auto& p : integer_partitions(n))
    if (p.length() == length) out.push_back(std::move(p));
  return out;
}

BigInt stirling1(int n, int r) {
  if (out_of_range(n, 0, r)) return 0;
  return triangle(n, true)[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
}

BigInt stirling2(int n, int r) {
  if (out_of_range(n, 0, r)) return 0;
  BigInt sum = 0;
  for (int i = 0; i <= r; ++i) {
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(r - i), static_cast<unsigned long>(n));
    term *= binomial(static_cast<unsigned>(r), static_cast<unsigned>(i));
    if (i % 2) sum -= term;
    else sum += term;
  }
  return sum / factorial(static_cast<unsigned>(r));
}

BigInt bell(int n) {
  if (n < 0) return 0;
  BigInt by_rows = 0;
  for (int r = 0; r <= n; ++r) by_rows += stirling2(n, r);
  std::vector<BigInt> B{1};
  for (int m = 0; m < n; ++m) {
    BigInt next = 0;
    for (int j = 0; j <= m; ++j) next += binomial(static_cast<unsigned>(m), static_cast<unsigned>(j)) * B[static_cast<std::size_t>(j)];
    B.push_back(next);
  }
  if (B.back() != by_rows)
    throw ConsistencyError("bell(" + std::to_string(n) + "): " + to_string(by_rows) + " vs " + to_string(B.back()));
  return by_rows;
}

BigInt T_def(int n, int k, int r) {
  if (out_of_range(n, k, r)) return 0;
  if (k == 0) return n == r ? 1 : 0;
  return chain_sum(triangle(n, false), n, k, r);
}

BigInt t_def(int n, int k, int r) {
  if (out_of_range(n, k, r)) return 0;
  if (k == 0) return n == r ? 1 : 0;
  return chain_sum(triangle(n, true), n, k, r);
}

BigInt f_lambda(const IntegerPartition& lambda) {
  BigInt den = 1;
  const auto m = lambda.multiplicities();
  for (std::size_t j = 1; j < m.size(); ++j) {
    if (!m[j]) continue;
    BigInt jf = factorial(static_cast<unsigned>(j)), p;
    mpz_pow_ui(p.get_mpz_t(), jf.get_mpz_t(), static_cast<unsigned long>(m[j]));
    den *= p * factorial(static_cast<unsigned>(m[j]));
  }
  return factorial(static_cast<unsigned>(lambda.size())) / den;
}

BigInt g_lambda(const IntegerPartition& lambda) {
  if (lambda.length() == 0) return 1;
  return factorial(static_cast<unsigned>(lambda.length() - 1)) * f_lambda(lambda);
}

BigInt elem_sym_at_integers(int m, int j) {
  if (j < 0 || m < 0 || j > m) return 0;
  // e[i] after processing x_1..x_t
  std::vector<BigInt> e(static_cast<std::size_t>(j + 1), 0);
  e[0] = 1;
  for (int x = 1; x <= m; ++x)
    for (int i = std::min(j, x); i >= 1; --i) e[static_cast<std::size_t>(i)] += x * e[static_cast<std::size_t>(i - 1)];
  return e[static_cast<std::size_t>(j)];
}

BigInt T_rec_lambda(int n, int k, int r) {
  if (out_of_range(n, k, r)) return 0;
  std::map<Key, BigInt> memo;
  std::function<BigInt(int, int, int)> T = [&](int n_, int k_, int r_) -> BigInt {
    if (out_of_range(n_, k_, r_)) return 0;
    if (k_ == 0 || n_ == 0) return n_ == r_ ? 1 : 0;
    const Key key{n_, k_, r_};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt sum = 0;
    for (const auto& lambda : integer_partitions(n_, r_)) {
      BigInt prod = f_lambda(lambda);
      for (int part : lambda.parts) {
        BigInt inner = 0;
        for (int rr = 1; rr <= part; ++rr) inner += T(part, k_ - 1, rr);
        prod *= inner;
      }
      sum += prod;
    }
    return memo[key] = sum;
  };
  return T(n, k, r);
}

BigInt T_rec_split(int n, int k, int r) {
  if (out_of_range(n, k, r)) return 0;
  std::map<Key, BigInt> memo;
  std::function<BigInt(int, int, int)> T = [&](int n_, int k_, int r_) -> BigInt {
    if (out_of_range(n_, k_, r_)) return 0;
    if (k_ == 0 || n_ == 0 || r_ == 0) return n_ == r_ ? 1 : 0;
    const Key key{n_, k_, r_};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt sum = 0;
    if (r_ == 1) {
      if (n_ == 1) sum = 1;
      else
        for (int rr = 1; rr <= n_; ++rr) sum += T(n_, k_ - 1, rr);
    } else {
      for (int p = 0; p <= n_ - 1; ++p)
        sum += binomial(static_cast<unsigned>(n_ - 1), static_cast<unsigned>(p)) * T(p + 1, k_, 1) * T(n_ - p - 1, k_, r_ - 1);
    }
    return memo[key] = sum;
  };
  return T(n, k, r);
}

BigInt t_rec_first_column(int n, int k) {
  if (n < 1 || k < 0) return 0;
  if (k == 0) return n == 1 ? 1 : 0;
  std::map<std::pair<int, int>, BigInt> memo;
  std::function<BigInt(int, int)> t1 = [&](int n_, int k_) -> BigInt {
    if (k_ == 0) return n_ == 1 ? 1 : 0;
    if (k_ == 1) return sign_power(n_ - 1) * factorial(static_cast<unsigned>(n_ - 1));
    const auto key = std::make_pair(n_, k_);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt sum = 0;
    for (const auto& lambda : integer_partitions(n_)) {
      BigInt prod = sign_power(lambda.length() + 1) * g_lambda(lambda);
      for (int part : lambda.parts) prod *= t1(part, k_ - 1);
      sum += prod;
    }
    return memo[key] = sum;
  };
  return t1(n, k);
}

BigInt t_rec_split(int n, int k, int r) {
  if (out_of_range(n, k, r)) return 0;
  std::map<Key, BigInt> memo;
  std::function<BigInt(int, int, int)> t = [&](int n_, int k_, int r_) -> BigInt {
    if (out_of_range(n_, k_, r_)) return 0;
    if (k_ == 0 || n_ == 0 || r_ == 0) return n_ == r_ ? 1 : 0;
    if (r_ == 1) return t_rec_first_column(n_, k_);
    const Key key{n_, k_, r_};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt sum = 0;
    for (int p = 0; p <= n_ - 1; ++p)
      sum += binomial(static_cast<unsigned>(n_ - 1), static_cast<unsigned>(p)) * t(p + 1, k_, 1) * t(n_ - p - 1, k_, r_ - 1);
    return memo[key] = sum;
  };
  return t(n, k, r);
}

BigInt t_rec_elem_sym(int n, int k, int r) {
  if (out_of_range(n, k, r) || k == 0) return (k == 0 && n == r && n >= 0) ? 1 : 0;
  if (n == 0) return r == 0 ? 1 : 0;
  std::vector<BigInt> first(static_cast<std::size_t>(n + 1));
  for (int m = 1; m <= n; ++m) first[static_cast<std::size_t>(m)] = t_rec_first_column(m, k - 1);
  BigInt sum = 0;
  for (int a = std::max(r, 1); a <= n; ++a) {
    BigInt inner = 0;
    for (const auto& lambda : integer_partitions(n, a)) {
      BigInt prod = f_lambda(lambda);
      for (int part : lambda.parts) prod *= first[static_cast<std::size_t>(part)];
      inner += prod;
    }
    if (inner == 0) continue;
    sum += sign_power(a - r) * elem_sym_at_integers(a - 1, a - r) * inner;
  }
  return sum;
}

}  // namespace wplat
