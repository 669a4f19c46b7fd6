#include <algorithm>
#include <cctype>
#include <map>

#include "wplat/weighted_partition.hpp"

namespace wplat {

namespace {

// Deepest layer through which the set x (a block at layer `from`) persists.
int persist(const WeightedPartition& p, const Block& x, int from) {
  int l = from;
  if (x.size() < 2) return l;
  while (l < p.k()) {
    const int m = p.block_min(l + 1, x.front());
    if (!std::all_of(x.begin(), x.end(), [&](int e) { return p.block_min(l + 1, e) == m; })) break;
    ++l;
  }
  return l;
}

struct Printer {
  const WeightedPartition& p;
  bool wide;  // n >= 10: comma-separated items

  // Items of x one layer below `layer`, ordered by minimum.
  std::string items(const Block& x, int layer) const {
    std::vector<Block> parts;
    if (layer == p.k()) {
      for (int e : x) parts.push_back({e});
    } else {
      std::map<int, Block> groups;
      for (int e : x) groups[p.block_min(layer + 1, e)].push_back(e);
      for (auto& [m, b] : groups) parts.push_back(std::move(b));
    }
    std::string out;
    bool after_exponent = false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const bool group = parts[i].size() > 1;
      if (i > 0) {
        if (wide) out += ',';
        else if (after_exponent && !group) out += ' ';
      }
      out += group ? this->group(parts[i], layer + 1) : std::to_string(parts[i].front());
      after_exponent = group;
    }
    return out;
  }

  std::string group(const Block& x, int from) const {
    const int l = persist(p, x, from);
    return "(" + items(x, l) + ")^" + std::to_string(l);
  }
};

class Parser {
 public:
  Parser(const std::string& text, int n, int k) : s_(text), n_(n), k_(k) {}

  WeightedPartition run() {
    std::vector<Record> blocks;
    for (;;) {
      const std::size_t start = pos_;
      Record r = parse_items(1);
      if (r.elements.empty()) throw ParseError(start, "element or '('", "empty block");
      r.last = std::max(r.last, 1);
      blocks.push_back(std::move(r));
      skip_separators();
      if (pos_ == s_.size()) break;
      if (s_[pos_] != '/') throw ParseError(pos_, "'/' or end of input");
      ++pos_;
    }
    layers_.assign(static_cast<std::size_t>(k_), {});
    for (auto& b : blocks) {
      if (b.last > k_) throw ParseError(b.at, "exponent at most " + std::to_string(k_));
      for (int l = 1; l <= b.last; ++l) layers_[static_cast<std::size_t>(l - 1)].push_back(b.elements);
      emit(b, 2);
    }
    try {
      return WeightedPartition::from_layers(n_, k_, layers_);
    } catch (const ValidationError& e) {
      throw ParseError(s_.size(), "a valid weighted partition", e.what());
    }
  }

 private:
  struct Record {
    Block elements;
    std::vector<Record> children;
    int first = 1;      // first layer at which the set is a block
    int last = 0;       // deepest layer; 0 until fixed
    std::size_t at = 0;
  };

  void skip_separators() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == ',')) ++pos_;
  }

  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  int parse_element() {
    const std::size_t start = pos_;
    int v = 0;
    if (n_ < 10) {
      v = s_[pos_++] - '0';
    } else {
      while (at_digit() && v <= n_) v = v * 10 + (s_[pos_++] - '0');
    }
    if (v < 1 || v > n_) throw ParseError(start, "element in [1," + std::to_string(n_) + "]");
    return v;
  }

  // Longest digit string whose value is at most k.
  int parse_exponent() {
    if (pos_ >= s_.size() || s_[pos_] != '^') throw ParseError(pos_, "'^'");
    ++pos_;
    const std::size_t start = pos_;
    if (!at_digit()) throw ParseError(pos_, "layer exponent");
    int v = 0;
    while (at_digit()) {
      const int next = v * 10 + (s_[pos_] - '0');
      if (next > k_ || (v == 0 && pos_ > start)) break;
      v = next;
      ++pos_;
    }
    if (v < 1 || pos_ == start) throw ParseError(start, "layer exponent in [1," + std::to_string(k_) + "]");
    return v;
  }

  void fix_last(Record& r, int value, std::size_t where) {
    if (r.last != 0 && r.last != value)
      throw ParseError(where, "exponent " + std::to_string(r.last), "conflicting layer annotations");
    r.last = value;
  }

  Record parse_items(int first) {
    Record r;
    r.first = first;
    r.at = pos_;
    for (;;) {
      skip_separators();
      if (pos_ >= s_.size() || s_[pos_] == '/' || s_[pos_] == ')') break;
      if (s_[pos_] == '(') {
        const std::size_t open = pos_++;
        Record child = parse_items(0);
        if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError(pos_, "')'");
        ++pos_;
        const std::size_t exp_at = pos_ + 1;
        fix_last(child, parse_exponent(), exp_at);
        if (child.elements.empty()) throw ParseError(open, "element or '('", "empty group");
        child.at = open;
        r.elements.insert(r.elements.end(), child.elements.begin(), child.elements.end());
        r.children.push_back(std::move(child));
      } else if (at_digit()) {
        r.elements.push_back(parse_element());
        if (pos_ < s_.size() && s_[pos_] == '^') {
          const std::size_t exp_at = pos_ + 1;
          fix_last(r, parse_exponent(), exp_at);
        }
      } else {
        throw ParseError(pos_, "element, '(' or '/'");
      }
    }
    return r;
  }

  // Place r's children (and theirs) into layers; `first` is the child start layer.
  void emit(Record& r, int first) {
    for (auto& c : r.children) {
      const int start = std::max(first, r.last + 1);
      if (c.last < start)
        throw ParseError(c.at, "exponent greater than " + std::to_string(start - 1), "exponents must increase inward");
      if (c.last > k_) throw ParseError(c.at, "exponent at most " + std::to_string(k_));
      for (int l = start; l <= c.last; ++l) layers_[static_cast<std::size_t>(l - 1)].push_back(c.elements);
      emit(c, c.last + 1);
    }
  }

  const std::string& s_;
  int n_, k_;
  std::size_t pos_ = 0;
  std::vector<Layer> layers_;
};

}  // namespace

std::string one_line(const WeightedPartition& p) {
  const Printer pr{p, p.n() >= 10};
  std::string out;
  for (const auto& b : p.blocks(1)) {
    if (!out.empty()) out += '/';
    const int l = persist(p, b, 1);
    out += l >= 2 ? "(" + pr.items(b, l) + ")^" + std::to_string(l) : pr.items(b, 1);
  }
  return out;
}

WeightedPartition parse_one_line(const std::string& text, int n, int k) {
  if (n < 1 || k < 1) throw PreconditionError("parse_one_line: n and k must be positive");
  return Parser(text, n, k).run();
}

}  // namespace wplat
