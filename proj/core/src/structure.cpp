#include "wplat/structure.hpp"

#include <algorithm>

namespace wplat {

namespace {

constexpr std::size_t kMaxWitnesses = 40;

void note(CheckReport& r, bool fatal, std::string w, std::size_t& count) {
  ++count;
  if (count > kMaxWitnesses) {
    if (fatal) r.status = Status::Fail;
    else if (r.status == Status::Pass) r.status = Status::Warn;
    return;
  }
  if (fatal) r.fail(std::move(w));
  else r.warn(std::move(w));
}

void close(CheckReport& r, std::size_t count) {
  if (count > kMaxWitnesses) r.witnesses.push_back(std::to_string(count - kMaxWitnesses) + " further cases omitted");
}

// Least element of `cands` below every other (or greatest, above every other); -1 if none.
int extremum(const Poset& P, const std::vector<int>& cands, bool least) {
  for (int c : cands) {
    bool ok = true;
    for (int d : cands)
      if (least ? !P.leq(c, d) : !P.leq(d, c)) {
        ok = false;
        break;
      }
    if (ok) return c;
  }
  return -1;
}

}  // namespace

std::vector<CheckReport> structural_checks(const Poset& P) {
  const int m = P.top();  // elements of P_n^(k)
  CheckReport semi{"semimodular", Status::Pass, {}};
  CheckReport atomistic{"atomistic", Status::Pass, {}};
  CheckReport count{"atom-count", Status::Pass, {}};
  CheckReport audit{"join-meet-audit", Status::Pass, {}};
  std::size_t n_semi = 0, n_atom = 0, n_audit = 0;

  std::vector<WeightedPartition> rank1;
  for (int i = 0; i < m; ++i)
    if (P.rank(i) == 1) rank1.push_back(P.element(i));
  auto expected = atoms(P.n(), P.k());
  const long want = static_cast<long>(P.k()) * P.n() * (P.n() - 1) / 2;
  std::sort(rank1.begin(), rank1.end());
  std::sort(expected.begin(), expected.end());
  if (static_cast<long>(rank1.size()) != want || rank1 != expected)
    count.fail(std::to_string(rank1.size()) + " rank-1 elements, expected " + std::to_string(want));

  for (int i = 0; i < m; ++i) {
    const auto& x = P.element(i);
    auto acc = WeightedPartition::bottom(P.n(), P.k());
    for (const auto& a : atom_decomposition(x)) acc = layer_join(acc, a);
    if (acc != x) note(atomistic, true, one_line(x) + " rebuilt as " + one_line(acc), n_atom);
  }

  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const auto& x = P.element(i);
      const auto& y = P.element(j);
      const auto join = layer_join(x, y);
      const auto meet = layer_meet(x, y);
      if (x.rank() + y.rank() < join.rank() + meet.rank())
        note(semi, true, one_line(x) + " , " + one_line(y) + ": join " + one_line(join) + ", meet " + one_line(meet), n_semi);

      std::vector<int> ub, lb;
      for (int z = 0; z < P.size(); ++z) {
        if (P.leq(i, z) && P.leq(j, z)) ub.push_back(z);
        if (P.leq(z, i) && P.leq(z, j)) lb.push_back(z);
      }
      const int lub = extremum(P, ub, true);
      const int glb = extremum(P, lb, false);
      const std::string pair = one_line(x) + " , " + one_line(y);
      if (lub < 0) note(audit, false, pair + ": no least upper bound", n_audit);
      else if (lub != P.index_of(join))
        note(audit, false, pair + ": least upper bound " + P.name(lub) + " differs from layerwise join " + one_line(join), n_audit);
      if (glb < 0) note(audit, false, pair + ": no greatest lower bound", n_audit);
      else if (glb != P.index_of(meet))
        note(audit, false, pair + ": greatest lower bound " + P.name(glb) + " differs from layerwise meet " + one_line(meet), n_audit);
    }
  }
  close(semi, n_semi);
  close(atomistic, n_atom);
  close(audit, n_audit);
  if (n_audit) audit.witnesses.insert(audit.witnesses.begin(), std::to_string(n_audit) + " findings");
  return {semi, atomistic, count, audit};
}

}  // namespace wplat
