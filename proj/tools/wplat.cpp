#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "wplat/binary_tree.hpp"
#include "wplat/errors.hpp"
#include "wplat/lattice.hpp"
#include "wplat/perm_diagram.hpp"
#include "wplat/rooted_tree.hpp"
#include "wplat/series.hpp"
#include "wplat/stirling.hpp"
#include "wplat/structure.hpp"

using namespace wplat;
using json = nlohmann::ordered_json;

namespace {

// Thrown when two computation routes disagree; exit code 1.
struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 3;
  int k = 1;
  int r = 0;
  std::string format = "text";
  std::string method = "all";
  std::string filter = "all";
  std::string kind = "T";
  std::string which = "exp";
  std::string suite = "all";
  std::string out;
  bool force = false;
};

std::size_t guard(const Options& o) {
  if (o.force) return std::numeric_limits<std::size_t>::max();
  if (const char* env = std::getenv("WPLAT_GUARD")) return std::stoull(env);
  return kDefaultGuard;
}

Poset poset_for(const Options& o) {
  if (o.n < 1 || o.k < 1) throw PreconditionError("n and k must be positive");
  return build_poset(o.n, o.k, guard(o));
}

void check_size(const Options& o) {
  const auto size = poset_size(o.n, o.k);
  if (size > guard(o))
    throw ResourceLimitError("L_" + std::to_string(o.n) + "^(" + std::to_string(o.k) + ") has " + std::to_string(size) +
                             " elements, above the guard " + std::to_string(guard(o)) + " (use --force)");
}

json number(const BigInt& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::string join(const std::vector<BigInt>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].get_str();
  return s;
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw Mismatch(what);
}

// count

std::string cmd_count(const Options& o) {
  if (o.n < 1 || o.k < 1) throw PreconditionError("n and k must be positive");
  check_size(o);
  std::map<int, BigInt> enumerated;
  for (const auto& p : enumerate_all(o.n, o.k)) enumerated[p.block_count()] += 1;
  std::vector<int> ranks;
  if (o.r) {
    if (o.r < 1 || o.r > o.n) throw PreconditionError("r must lie in [1, n]");
    ranks.push_back(o.r);
  } else {
    for (int r = 1; r <= o.n; ++r) ranks.push_back(r);
  }
  BigInt total = 0;
  std::vector<BigInt> counts;
  for (int r : ranks) {
    const BigInt formula = T_def(o.n, o.k, r);
    if (enumerated[r] != formula)
      throw Mismatch("r=" + std::to_string(r) + ": enumerated " + enumerated[r].get_str() + ", T(n,k,r) = " + formula.get_str());
    counts.push_back(formula);
    total += formula;
  }

  std::ostringstream os;
  if (o.format == "json") {
    json j{{"n", o.n}, {"k", o.k}, {"counts", json::object()}, {"total", number(total)}};
    for (std::size_t i = 0; i < ranks.size(); ++i) j["counts"][std::to_string(ranks[i])] = number(counts[i]);
    os << j.dump() << "\n";
  } else if (o.format == "csv") {
    os << "r,count\n";
    for (std::size_t i = 0; i < ranks.size(); ++i) os << ranks[i] << "," << counts[i] << "\n";
  } else {
    for (std::size_t i = 0; i < ranks.size(); ++i) os << (i ? ", " : "") << "r=" << ranks[i] << ":" << counts[i];
    if (ranks.size() > 1) os << ", total " << total;
    os << "\n";
  }
  return os.str();
}

// table

std::vector<std::vector<BigInt>> table_rows(const Options& o) {
  const int N = o.n;
  if (N < 0) throw PreconditionError("n must be non-negative");
  std::vector<std::vector<BigInt>> rows;
  if (o.kind == "bell") {
    const auto S = exp_k_xy(1, N);
    std::vector<BigInt> row;
    for (int n = 0; n <= N; ++n) {
      BigInt sum = 0;
      for (int r = 0; r <= n; ++r) sum += S.coeff(n, r).get_num();
      expect(sum == bell(n), "bell(" + std::to_string(n) + "): " + bell(n).get_str() + " vs row sum " + sum.get_str());
      row.push_back(sum);
    }
    rows.push_back(row);
    return rows;
  }
  int k = o.k;
  bool up = true;
  if (o.kind == "S") k = 1;
  else if (o.kind == "s") k = 1, up = false;
  else if (o.kind == "t") up = false;
  else if (o.kind != "T") throw PreconditionError("unknown table kind " + o.kind);
  if (k < 1) throw PreconditionError("k must be positive");
  const auto series = up ? exp_k_xy(k, N) : log_k_xy(k, N);
  for (int n = 1; n <= N; ++n) {
    std::vector<BigInt> row;
    for (int r = 1; r <= n; ++r) {
      const BigInt direct = o.kind == "S" ? stirling2(n, r) : o.kind == "s" ? stirling1(n, r) : up ? T_def(n, k, r) : t_def(n, k, r);
      const BigRational& c = series.coeff(n, r);
      expect(is_integer(c) && c.get_num() == direct, o.kind + "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(r) +
                                                         "): definition " + direct.get_str() + ", series " + to_string(c));
      row.push_back(direct);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string cmd_table(const Options& o) {
  const auto rows = table_rows(o);
  std::ostringstream os;
  if (o.format == "json") {
    json j{{"kind", o.kind}, {"k", o.k}, {"rows", json::array()}};
    for (const auto& row : rows) {
      json jr = json::array();
      for (const auto& v : row) jr.push_back(number(v));
      j["rows"].push_back(jr);
    }
    os << j.dump() << "\n";
  } else {
    for (const auto& row : rows) os << join(row, o.format == "csv" ? "," : ", ") << "\n";
  }
  return os.str();
}

// series

std::string cmd_series(const Options& o) {
  if (o.n < 0 || o.k < 1) throw PreconditionError("need n >= 0 and k >= 1");
  BivariateSeries f(0, 0);
  if (o.which == "exp") f = exp_k_xy(o.k, o.n);
  else if (o.which == "log") f = log_k_xy(o.k, o.n);
  else throw PreconditionError("--which must be exp or log");
  for (int n = 1; n <= o.n; ++n)
    for (int r = 1; r <= n; ++r) {
      const BigInt direct = o.which == "exp" ? T_def(n, o.k, r) : t_def(n, o.k, r);
      expect(f.coeff(n, r) == BigRational(direct), "coefficient (" + std::to_string(n) + "," + std::to_string(r) + ") disagrees with the definition");
    }
  return o.format == "json" ? to_json(f) + "\n" : to_text(f);
}

// mobius

std::string cmd_mobius(const Options& o) {
  std::vector<std::pair<std::string, BigInt>> values;
  const bool all = o.method == "all";
  if (!all && o.method != "recursive" && o.method != "chains" && o.method != "closed")
    throw PreconditionError("--method must be recursive, chains, closed or all");
  if (all || o.method == "closed") values.emplace_back("closed", mobius_closed_form(o.n, o.k));
  if (all || o.method != "closed") {
    const auto P = poset_for(o);
    if (all || o.method == "recursive") values.emplace_back("recursive", mobius_recursive(P, P.bottom(), P.top()));
    if (all || o.method == "chains") values.emplace_back("chains", mobius_via_chains(P));
  }
  for (const auto& [name, v] : values)
    if (v != values.front().second) {
      std::string dump;
      for (const auto& [m, w] : values) dump += " " + m + "=" + w.get_str();
      throw Mismatch("Mobius routes disagree:" + dump);
    }
  std::ostringstream os;
  if (o.format == "json") {
    json j{{"n", o.n}, {"k", o.k}};
    for (const auto& [name, v] : values) j[name] = number(v);
    os << j.dump() << "\n";
  } else if (values.size() == 1) {
    os << values.front().second << "\n";
  } else {
    for (const auto& [name, v] : values) os << name << " " << v << "\n";
  }
  return os.str();
}

// charpoly

std::string cmd_charpoly(const Options& o) {
  const auto P = poset_for(o);
  const auto summed = char_poly(P);
  const auto product = char_poly_product(o.n, o.k);
  expect(summed == product, "Whitney sum " + to_string(summed) + " differs from product " + to_string(product));
  if (o.format == "json") {
    json j{{"n", o.n}, {"k", o.k}, {"factored", char_poly_factored(o.n, o.k)}, {"expanded", to_string(product)}, {"coefficients", json::array()}};
    for (const auto& c : product.coeffs()) j["coefficients"].push_back(number(c));
    return j.dump() + "\n";
  }
  return char_poly_factored(o.n, o.k) + " = " + to_string(product) + "\n";
}

// hasse

std::string cmd_hasse(const Options& o) { return hasse_dot(poset_for(o)); }

// chains

std::string cmd_chains(const Options& o) {
  const auto P = poset_for(o);
  ChainFilter filter = ChainFilter::All;
  if (o.filter == "rising") filter = ChainFilter::Rising;
  else if (o.filter == "decreasing") filter = ChainFilter::Decreasing;
  else if (o.filter != "all") throw PreconditionError("--filter must be all, rising or decreasing");
  const auto chains = maximal_chains(P, P.bottom(), P.top(), filter);
  const BigInt listed = static_cast<unsigned long>(chains.size());
  if (filter == ChainFilter::All) expect(listed == count_maximal_chains(P, P.bottom(), P.top()), "chain listing and chain count disagree");
  if (filter == ChainFilter::Rising) expect(listed == 1, "expected exactly one rising chain, found " + listed.get_str());
  if (filter == ChainFilter::Decreasing) {
    const BigInt mu = mobius_closed_form(o.n, o.k);
    expect(listed == abs(mu), "decreasing chains " + listed.get_str() + " vs |mu| " + BigInt(abs(mu)).get_str());
  }
  std::ostringstream os;
  if (o.format == "json") {
    json j{{"n", o.n}, {"k", o.k}, {"filter", o.filter}, {"count", chains.size()}, {"chains", json::array()}};
    for (const auto& c : chains) {
      json jc = json::array();
      for (const auto& l : c) jc.push_back({l.alpha, l.beta, l.layer});
      j["chains"].push_back(jc);
    }
    os << j.dump() << "\n";
  } else if (o.format == "csv") {
    os << "index,chain\n";
    for (std::size_t i = 0; i < chains.size(); ++i) os << i << "," << to_string(chains[i]) << "\n";
  } else {
    for (const auto& c : chains) os << to_string(c) << "\n";
    os << chains.size() << " chains\n";
  }
  return os.str();
}

// trees

std::string cmd_trees(const Options& o) {
  std::ostringstream os;
  if (o.kind == "rooted") {
    check_size(o);
    std::map<std::string, std::pair<KLevelRootedTree, BigInt>> classes;
    json j{{"n", o.n}, {"k", o.k}, {"trees", json::array()}, {"classes", json::array()}};
    std::vector<std::string> lines;
    for (const auto& p : enumerate_all(o.n, o.k)) {
      const auto t = to_rooted_tree(p);
      expect(from_rooted_tree(t) == p, "rooted-tree round trip fails on " + one_line(p));
      const auto shape = shape_of(t);
      auto& cls = classes.try_emplace(shape_key(shape.root), shape, BigInt(0)).first->second;
      cls.second += 1;
      j["trees"].push_back({{"partition", one_line(p)}, {"tree", json::parse(to_json(t))}});
      lines.push_back(one_line(p) + " " + to_json(t));
    }
    for (const auto& [key, cls] : classes) {
      expect(cls.second == tree_class_size(cls.first), "class " + key + " has " + cls.second.get_str() + " members, formula " +
                                                           tree_class_size(cls.first).get_str());
      j["classes"].push_back({{"shape", key}, {"size", number(cls.second)}});
    }
    if (o.format == "json") {
      os << j.dump() << "\n";
    } else {
      for (const auto& l : lines) os << l << "\n";
      for (const auto& [key, cls] : classes) os << "class " << key << " " << cls.second << "\n";
    }
    return os.str();
  }
  if (o.kind != "binary") throw PreconditionError("--kind must be rooted or binary for trees");
  if (o.n < 2) throw PreconditionError("binary trees need n >= 2");
  const auto trees = enumerate_lbt(o.n, o.k, LbtScope::Ordered);
  const BigInt expected = o.k == 1 ? factorial(static_cast<unsigned>(o.n - 1)) : BigInt(abs(mobius_closed_form(o.n, o.k)));
  expect(BigInt(static_cast<unsigned long>(trees.size())) == expected,
         std::to_string(trees.size()) + " labeled binary trees, expected " + expected.get_str());
  if (o.format == "dot") {
    for (const auto& t : trees) os << to_dot(t);
    return os.str();
  }
  json j{{"n", o.n}, {"k", o.k}, {"count", trees.size()}, {"trees", json::array()}};
  for (const auto& t : trees) {
    const auto chain = lbt_to_chain(t, o.k > 1);
    expect(chain_to_lbt(chain, o.n, o.k) == t, "tree round trip fails on " + to_json(t));
    if (o.format == "json") j["trees"].push_back({{"tree", json::parse(to_json(t))}, {"chain", to_string(chain)}});
    else os << to_json(t) << "  " << to_string(chain) << "\n";
  }
  if (o.format == "json") os << j.dump() << "\n";
  else os << trees.size() << " trees\n";
  return os.str();
}

// verify

CheckReport verify_rooted(const Poset& P) {
  CheckReport rep{"rooted-tree-round-trip"};
  for (int i = 0; i < P.top(); ++i) {
    const auto& p = P.element(i);
    if (!(from_rooted_tree(to_rooted_tree(p)) == p)) rep.fail(one_line(p));
  }
  return rep;
}

CheckReport verify_lbt(const Poset& P) {
  CheckReport rep{"chain-tree-round-trip"};
  const int n = P.n(), k = P.k();
  if (n < 2) return rep;
  const int top = k == 1 ? P.top() - 1 : P.top();
  std::set<LabeledBinaryTree> images;
  for_each_maximal_chain(P, P.bottom(), top, ChainFilter::Decreasing, [&](const LabelChain& c) {
    try {
      const auto t = chain_to_lbt(c, n, k);
      images.insert(t);
      if (!is_lbt(t, LbtScope::Ordered)) rep.fail("tree of " + to_string(c) + " violates the tree conditions");
      if (lbt_to_chain(t, k > 1) != c) rep.fail(to_string(c));
    } catch (const DomainError& e) {
      rep.fail(to_string(c) + ": " + e.what());
    }
  });
  const auto trees = enumerate_lbt(n, k, LbtScope::Ordered);
  if (trees.size() != images.size())
    rep.fail(std::to_string(trees.size()) + " trees vs " + std::to_string(images.size()) + " decreasing chains");
  for (const auto& t : trees)
    if (!images.count(t)) rep.fail("tree " + to_json(t) + " is not the image of a chain");
  return rep;
}

CheckReport verify_diagrams(const Poset& P) {
  CheckReport rep{"diagram-chain"};
  const int n = P.n(), k = P.k();
  if (n < 2) return rep;
  std::set<LabelChain> seen;
  for (const auto& sigma : permutations_fixing_one(n)) {
    const auto d = i_of_sigma(sigma);
    if (k == 1) {
      seen.insert(classical_decreasing_chain(d));
      continue;
    }
    for (const auto& cd : enumerate_colorings(d, k)) {
      const auto c = diagram_to_decreasing_chain(cd, k);
      if (!seen.insert(c).second) rep.fail("duplicate chain " + to_string(c));
      if (!is_maximal_decreasing(P, c)) rep.fail(to_string(c) + " is not a maximal decreasing chain");
    }
  }
  const int top = k == 1 ? P.top() - 1 : P.top();
  std::size_t decreasing = 0;
  for_each_maximal_chain(P, P.bottom(), top, ChainFilter::Decreasing, [&](const LabelChain& c) {
    ++decreasing;
    if (!seen.count(c)) rep.fail(to_string(c) + " has no diagram");
  });
  if (decreasing != seen.size()) rep.fail(std::to_string(seen.size()) + " diagrams vs " + std::to_string(decreasing) + " chains");
  return rep;
}

int cmd_verify(const Options& o, std::string& text) {
  const auto P = poset_for(o);
  const bool all = o.suite == "all";
  if (!all && o.suite != "el" && o.suite != "structure" && o.suite != "bijections")
    throw PreconditionError("--suite must be el, structure, bijections or all");
  std::vector<CheckReport> reports;
  if (all || o.suite == "el") reports.push_back(verify_el(P));
  if (all || o.suite == "structure")
    for (auto& r : structural_checks(P)) reports.push_back(std::move(r));
  if (all || o.suite == "bijections") {
    reports.push_back(verify_rooted(P));
    reports.push_back(verify_lbt(P));
    reports.push_back(verify_diagrams(P));
  }
  bool failed = false;
  for (const auto& r : reports) failed |= r.failed();
  json j{{"n", o.n}, {"k", o.k}, {"suite", o.suite}, {"elements", P.size()},
         {"status", failed ? "fail" : "pass"}, {"reports", json::parse(to_json(reports))}};
  if (o.format == "json") {
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << to_string(r.status) << " " << r.check << "\n";
      for (const auto& w : r.witnesses) os << "  " << w << "\n";
    }
    text = os.str();
  }
  return failed ? 1 : 0;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted partition lattices: counts, tables, series, Mobius values and bijections"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "ground set size (maximum n for tables and series)");
    sub->add_option("--k", o.k, "number of layers");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    sub->add_option("--out", o.out, "write output to a file");
    sub->add_flag("--force", o.force, "ignore the poset size guard");
  };

  auto* count = app.add_subcommand("count", "weighted partitions per block count, enumerated and by formula");
  add_common(count);
  count->add_option("--r", o.r, "single block count");
  auto* table = app.add_subcommand("table", "triangles T, t, s, S or Bell numbers up to --n");
  add_common(table);
  table->add_option("--kind", o.kind, "T, t, s, S or bell")->check(CLI::IsMember({"T", "t", "s", "S", "bell"}));
  auto* series = app.add_subcommand("series", "coefficients of exp^(k)(x,y) or log^(k)(x,y) up to x^n");
  add_common(series);
  series->add_option("--which", o.which, "exp or log")->check(CLI::IsMember({"exp", "log"}));
  auto* mobius = app.add_subcommand("mobius", "Mobius value of the lattice");
  add_common(mobius);
  mobius->add_option("--method", o.method, "recursive, chains, closed or all");
  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
  add_common(charpoly);
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram in DOT");
  add_common(hasse);
  auto* chains = app.add_subcommand("chains", "maximal chains from bottom to top");
  add_common(chains);
  chains->add_option("--filter", o.filter, "all, rising or decreasing");
  auto* trees = app.add_subcommand("trees", "rooted trees of weighted partitions or labeled binary trees");
  add_common(trees);
  o.kind = "T";
  trees->add_option("--kind", o.kind, "rooted or binary");
  auto* verify = app.add_subcommand("verify", "run verification suites; exit 1 on failure");
  add_common(verify);
  verify->add_option("--suite", o.suite, "el, structure, bijections or all");

  CLI11_PARSE(app, argc, argv);
  if (trees->parsed() && o.kind == "T") o.kind = "binary";

  try {
    std::string text;
    int code = 0;
    if (count->parsed()) text = cmd_count(o);
    else if (table->parsed()) text = cmd_table(o);
    else if (series->parsed()) text = cmd_series(o);
    else if (mobius->parsed()) text = cmd_mobius(o);
    else if (charpoly->parsed()) text = cmd_charpoly(o);
    else if (hasse->parsed()) text = cmd_hasse(o);
    else if (chains->parsed()) text = cmd_chains(o);
    else if (trees->parsed()) text = cmd_trees(o);
    else if (verify->parsed()) code = cmd_verify(o, text);
    emit(o, text);
    return code;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 2;
  } catch (const Mismatch& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
