#include "wplat/lattice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>

#include "wplat/stirling.hpp"

namespace wplat {

namespace {

constexpr int kClosureLimit = 40000;

std::vector<int> union_find_layer(const WeightedPartition& x, const WeightedPartition& y, int layer) {
  const int n = x.n();
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  for (int e = 1; e <= n; ++e) {
    unite(e, x.block_min(layer, e));
    unite(e, y.block_min(layer, e));
  }
  std::vector<int> mins(static_cast<std::size_t>(n + 1));
  for (int e = 1; e <= n; ++e) mins[static_cast<std::size_t>(e)] = find(e);
  return mins;
}

void check_same_shape(const WeightedPartition& x, const WeightedPartition& y) {
  if (x.n() != y.n() || x.k() != y.k()) throw PreconditionError("weighted partitions over different (n, k)");
}

}  // namespace

std::string to_string(const CoverLabel& l) {
  return "(" + std::to_string(l.alpha) + "," + std::to_string(l.beta) + ")_" + std::to_string(l.layer);
}

std::string to_string(const LabelChain& c) {
  std::string out;
  for (const auto& l : c) out += (out.empty() ? "" : " ") + to_string(l);
  return out;
}

bool is_rising(const LabelChain& c) {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] < c[i - 1]) return false;
  return true;
}

bool is_decreasing(const LabelChain& c) {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (!(c[i] < c[i - 1])) return false;
  return true;
}

std::vector<std::pair<CoverLabel, WeightedPartition>> admissible_covers(const WeightedPartition& p) {
  std::vector<std::pair<CoverLabel, WeightedPartition>> out;
  const int n = p.n();
  for (int beta = 2; beta <= n; ++beta) {
    if (p.block_min(1, beta) != beta) continue;
    for (int alpha = 1; alpha < beta; ++alpha) {
      if (p.same_block(1, alpha, beta)) continue;
      for (int l = 1; l <= p.k(); ++l)
        if (p.block_min(l, alpha) == alpha) out.emplace_back(CoverLabel{alpha, beta, l}, p.merged(alpha, beta, l));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

struct Poset::Closure {
  std::once_flag once;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;  // row i: elements >= i
};

const WeightedPartition& Poset::element(int i) const {
  if (i < 0 || i >= static_cast<int>(elements_.size())) throw PreconditionError("no weighted partition at index " + std::to_string(i));
  return elements_[static_cast<std::size_t>(i)];
}

int Poset::index_of(const WeightedPartition& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

std::string Poset::name(int i) const { return i == top() ? "top" : one_line(element(i)); }

bool Poset::leq(int x, int y) const {
  if (y == top() || x == y) return true;
  if (x == top() || rank(x) >= rank(y)) return false;
  std::call_once(closure_->once, [this] {
    if (size() > kClosureLimit)
      throw ResourceLimitError("order closure needs " + std::to_string(size()) + "^2 bits; limit is " +
                               std::to_string(kClosureLimit) + " elements");
    auto& c = *closure_;
    c.words = (static_cast<std::size_t>(size()) + 63) / 64;
    c.bits.assign(c.words * static_cast<std::size_t>(size()), 0);
    for (int i = size() - 1; i >= 0; --i) {
      auto* row = &c.bits[c.words * static_cast<std::size_t>(i)];
      row[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
      for (int ci : up(i)) {
        const auto* other = &c.bits[c.words * static_cast<std::size_t>(covers_[static_cast<std::size_t>(ci)].upper)];
        for (std::size_t w = 0; w < c.words; ++w) row[w] |= other[w];
      }
    }
  });
  const auto& c = *closure_;
  return (c.bits[c.words * static_cast<std::size_t>(x) + static_cast<std::size_t>(y) / 64] >> (y % 64)) & 1u;
}

std::size_t poset_size(int n, int k) {
  BigInt total = 1;
  for (int r = 1; r <= n; ++r) total += T_def(n, k, r);
  if (!total.fits_ulong_p()) return static_cast<std::size_t>(-1);
  return total.get_ui();
}

Poset build_poset(int n, int k, std::size_t guard) {
  if (n < 1 || k < 1) throw PreconditionError("build_poset: n and k must be positive");
  const std::size_t expected = poset_size(n, k);
  if (expected > guard)
    throw ResourceLimitError("L_" + std::to_string(n) + "^(" + std::to_string(k) + ") has " + std::to_string(expected) +
                             " elements, above the guard of " + std::to_string(guard));
  Poset P;
  P.n_ = n;
  P.k_ = k;
  P.closure_ = std::make_shared<Poset::Closure>();
  P.elements_ = enumerate_all(n, k);
  std::stable_sort(P.elements_.begin(), P.elements_.end(),
                   [](const WeightedPartition& a, const WeightedPartition& b) { return a.rank() < b.rank(); });
  const int m = static_cast<int>(P.elements_.size());
  for (int i = 0; i < m; ++i) {
    P.index_.emplace(P.elements_[static_cast<std::size_t>(i)], i);
    P.rank_.push_back(P.elements_[static_cast<std::size_t>(i)].rank());
  }
  P.rank_.push_back(n);
  if (static_cast<std::size_t>(m + 1) != expected) throw ConsistencyError("enumeration size differs from sum of T(n,k,r)");

  P.up_.assign(static_cast<std::size_t>(m + 1), {});
  P.down_.assign(static_cast<std::size_t>(m + 1), {});
  auto add = [&](int lo, int hi, CoverLabel label) {
    P.up_[static_cast<std::size_t>(lo)].push_back(static_cast<int>(P.covers_.size()));
    P.down_[static_cast<std::size_t>(hi)].push_back(static_cast<int>(P.covers_.size()));
    P.covers_.push_back({lo, hi, label});
  };
  for (int i = 0; i < m; ++i) {
    const auto& p = P.elements_[static_cast<std::size_t>(i)];
    if (p.rank() == n - 1) {
      add(i, m, {1, n, k});
      continue;
    }
    for (const auto& [label, q] : admissible_covers(p)) {
      const int j = P.index_of(q);
      if (j < 0 || P.rank_[static_cast<std::size_t>(j)] != p.rank() + 1)
        throw ConsistencyError("cover " + to_string(label) + " of " + one_line(p) + " leaves the poset");
      add(i, j, label);
    }
  }

  std::vector<char> seen(static_cast<std::size_t>(m + 1), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    const int i = q.front();
    q.pop();
    for (int ci : P.up_[static_cast<std::size_t>(i)]) {
      const int j = P.covers_[static_cast<std::size_t>(ci)].upper;
      if (!seen[static_cast<std::size_t>(j)]) seen[static_cast<std::size_t>(j)] = 1, q.push(j);
    }
  }
  for (int i = 0; i <= m; ++i)
    if (!seen[static_cast<std::size_t>(i)]) throw ConsistencyError("element " + P.name(i) + " unreachable from the bottom");
  return P;
}

bool leq(const Poset& poset, int x, int y) { return poset.leq(x, y); }

Interval interval(const Poset& poset, int x, int y) {
  if (!poset.leq(x, y)) throw DomainError("interval: " + poset.name(x) + " is not below " + poset.name(y));
  Interval out{x, y, {}};
  for (int z = 0; z < poset.size(); ++z)
    if (poset.leq(x, z) && poset.leq(z, y)) out.members.push_back(z);
  return out;
}

void for_each_maximal_chain(const Poset& poset, int x, int y, ChainFilter filter,
                            const std::function<void(const LabelChain&)>& visit) {
  if (!poset.leq(x, y)) throw DomainError("maximal_chains: " + poset.name(x) + " is not below " + poset.name(y));
  LabelChain chain;
  std::function<void(int)> dfs = [&](int z) {
    if (z == y) {
      visit(chain);
      return;
    }
    for (int ci : poset.up(z)) {
      const auto& c = poset.covers()[static_cast<std::size_t>(ci)];
      if (!chain.empty()) {
        if (filter == ChainFilter::Rising && c.label < chain.back()) continue;
        if (filter == ChainFilter::Decreasing && !(c.label < chain.back())) continue;
      }
      if (!poset.leq(c.upper, y)) continue;
      chain.push_back(c.label);
      dfs(c.upper);
      chain.pop_back();
    }
  };
  dfs(x);
}

std::vector<LabelChain> maximal_chains(const Poset& poset, int x, int y, ChainFilter filter) {
  std::vector<LabelChain> out;
  for_each_maximal_chain(poset, x, y, filter, [&](const LabelChain& c) { out.push_back(c); });
  return out;
}

BigInt count_maximal_chains(const Poset& poset, int x, int y, ChainFilter filter) {
  if (filter != ChainFilter::All) {
    BigInt count = 0;
    for_each_maximal_chain(poset, x, y, filter, [&](const LabelChain&) { ++count; });
    return count;
  }
  if (!poset.leq(x, y)) throw DomainError("count_maximal_chains: " + poset.name(x) + " is not below " + poset.name(y));
  std::vector<BigInt> ways(static_cast<std::size_t>(poset.size()), 0);
  ways[static_cast<std::size_t>(x)] = 1;
  for (int z = x; z < poset.size(); ++z) {
    if (ways[static_cast<std::size_t>(z)] == 0) continue;
    for (int ci : poset.up(z)) {
      const int u = poset.covers()[static_cast<std::size_t>(ci)].upper;
      if (poset.leq(u, y)) ways[static_cast<std::size_t>(u)] += ways[static_cast<std::size_t>(z)];
    }
  }
  return ways[static_cast<std::size_t>(y)];
}

std::vector<LabelChain> filter_rising(const std::vector<LabelChain>& chains) {
  std::vector<LabelChain> out;
  std::copy_if(chains.begin(), chains.end(), std::back_inserter(out), is_rising);
  return out;
}

std::vector<LabelChain> filter_decreasing(const std::vector<LabelChain>& chains) {
  std::vector<LabelChain> out;
  std::copy_if(chains.begin(), chains.end(), std::back_inserter(out), is_decreasing);
  return out;
}

std::vector<int> chain_elements(const Poset& poset, const LabelChain& chain) {
  std::vector<int> path{poset.bottom()};
  for (const auto& label : chain) {
    int next = -1;
    for (int ci : poset.up(path.back())) {
      const auto& c = poset.covers()[static_cast<std::size_t>(ci)];
      if (c.label == label) next = c.upper;
    }
    if (next < 0) throw DomainError("no cover labeled " + to_string(label) + " above " + poset.name(path.back()));
    path.push_back(next);
  }
  return path;
}

bool is_maximal_decreasing(const Poset& poset, const LabelChain& chain) {
  if (!is_decreasing(chain)) return false;
  try {
    return chain_elements(poset, chain).back() == poset.top();
  } catch (const DomainError&) {
    return false;
  }
}

LabelChain expected_rising_chain(int n, int k) {
  LabelChain out;
  for (int b = 2; b <= n; ++b) out.push_back({1, b, k});
  out.push_back({1, n, k});
  return out;
}

CheckReport verify_el(const Poset& poset) {
  CheckReport rep{"el-labeling", Status::Pass, {}};
  for (int x = 0; x < poset.size(); ++x) {
    std::vector<CoverLabel> seen;
    for (int ci : poset.up(x)) seen.push_back(poset.covers()[static_cast<std::size_t>(ci)].label);
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      rep.fail("repeated label on covers of " + poset.name(x));
  }
  for (int x = 0; x < poset.size(); ++x) {
    for (int y = x + 1; y < poset.size(); ++y) {
      if (!poset.leq(x, y)) continue;
      // greedy chain = lexicographically first, since labels above each element are distinct
      LabelChain first;
      for (int z = x; z != y;) {
        for (int ci : poset.up(z)) {
          const auto& c = poset.covers()[static_cast<std::size_t>(ci)];
          if (poset.leq(c.upper, y)) {
            first.push_back(c.label);
            z = c.upper;
            break;
          }
        }
      }
      std::vector<LabelChain> rising;
      for_each_maximal_chain(poset, x, y, ChainFilter::Rising, [&](const LabelChain& c) { rising.push_back(c); });
      const std::string where = "[" + poset.name(x) + ", " + poset.name(y) + "]";
      if (rising.size() != 1)
        rep.fail(where + ": " + std::to_string(rising.size()) + " rising chains");
      else if (rising.front() != first)
        rep.fail(where + ": rising chain " + to_string(rising.front()) + " is not lexicographically first " + to_string(first));
    }
  }
  const auto top_rising = maximal_chains(poset, poset.bottom(), poset.top(), ChainFilter::Rising);
  if (top_rising.size() == 1 && top_rising.front() != expected_rising_chain(poset.n(), poset.k()))
    rep.fail("rising chain of [bottom, top] is " + to_string(top_rising.front()));
  return rep;
}

std::vector<BigInt> mobius_from(const Poset& poset, int x) {
  std::vector<BigInt> mu(static_cast<std::size_t>(poset.size()), 0);
  std::vector<int> above;
  for (int z = x; z < poset.size(); ++z)
    if (poset.leq(x, z)) above.push_back(z);
  mu[static_cast<std::size_t>(x)] = 1;
  for (std::size_t i = 1; i < above.size(); ++i) {
    const int z = above[i];
    BigInt sum = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (poset.leq(above[j], z)) sum += mu[static_cast<std::size_t>(above[j])];
    mu[static_cast<std::size_t>(z)] = -sum;
  }
  return mu;
}

BigInt mobius_recursive(const Poset& poset, int x, int y) {
  if (!poset.leq(x, y)) throw DomainError("mobius: " + poset.name(x) + " is not below " + poset.name(y));
  return mobius_from(poset, x)[static_cast<std::size_t>(y)];
}

BigInt mobius_via_chains(const Poset& poset) {
  return sign_power(poset.n()) * count_maximal_chains(poset, poset.bottom(), poset.top(), ChainFilter::Decreasing);
}

BigInt mobius_closed_form(int n, int k) {
  if (n < 1 || k < 1) throw PreconditionError("mobius_closed_form: n and k must be positive");
  BigInt prod = sign_power(n);
  for (int j = 0; j <= n - 2; ++j) prod *= k * (j + 1) - 1;
  return prod;
}

BigInt whitney(const Poset& poset, int r) {
  const auto mu = mobius_from(poset, poset.bottom());
  BigInt sum = 0;
  for (int z = 0; z < poset.top(); ++z)
    if (poset.n() - poset.rank(z) == r) sum += mu[static_cast<std::size_t>(z)];
  return sum;
}

BigInt whitney_formula(int n, int k, int r) {
  if (r < 0 || r > n) return 0;
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n - r));
  return p * stirling1(n, r);
}

Polynomial char_poly(const Poset& poset) {
  const auto mu = mobius_from(poset, poset.bottom());
  std::vector<BigInt> c(static_cast<std::size_t>(poset.n() + 1), 0);
  for (int z = 0; z < poset.top(); ++z) c[static_cast<std::size_t>(poset.n() - poset.rank(z))] += mu[static_cast<std::size_t>(z)];
  return Polynomial(std::move(c));
}

Polynomial char_poly_product(int n, int k) {
  Polynomial p({1});
  for (int j = 0; j < n; ++j) p = p * Polynomial::x_minus(BigInt(k) * j);
  return p;
}

std::string char_poly_factored(int n, int k) {
  std::string out;
  for (int j = 0; j < n; ++j) out += j == 0 ? "x" : "(x - " + std::to_string(k * j) + ")";
  return out;
}

WeightedPartition layer_join(const WeightedPartition& x, const WeightedPartition& y) {
  check_same_shape(x, y);
  std::vector<std::vector<int>> mins;
  for (int l = 1; l <= x.k(); ++l) mins.push_back(union_find_layer(x, y, l));
  return WeightedPartition::from_min_maps(x.n(), x.k(), mins);
}

WeightedPartition layer_meet(const WeightedPartition& x, const WeightedPartition& y) {
  check_same_shape(x, y);
  std::vector<std::vector<int>> mins;
  for (int l = 1; l <= x.k(); ++l) {
    std::map<std::pair<int, int>, int> first;
    std::vector<int> m(static_cast<std::size_t>(x.n() + 1));
    for (int e = 1; e <= x.n(); ++e) {
      auto [it, inserted] = first.emplace(std::make_pair(x.block_min(l, e), y.block_min(l, e)), e);
      m[static_cast<std::size_t>(e)] = it->second;
    }
    mins.push_back(std::move(m));
  }
  return WeightedPartition::from_min_maps(x.n(), x.k(), mins);
}

std::string hasse_dot(const Poset& poset) {
  std::ostringstream os;
  os << "digraph L_" << poset.n() << "_" << poset.k() << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int i = 0; i < poset.size(); ++i) os << "  v" << i << " [label=\"" << poset.name(i) << "\"];\n";
  std::map<int, std::vector<int>> by_rank;
  for (int i = 0; i < poset.size(); ++i) by_rank[poset.rank(i)].push_back(i);
  for (const auto& [r, ids] : by_rank) {
    os << "  { rank=same;";
    for (int i : ids) os << " v" << i << ";";
    os << " }\n";
  }
  for (const auto& c : poset.covers())
    os << "  v" << c.lower << " -> v" << c.upper << " [label=\"" << to_string(c.label) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace wplat
