#include "wplat/weighted_partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace wplat {

namespace {

constexpr int kMaxN = 255;

std::string block_text(const Block& b) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + "}";
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n + 1)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

// All set partitions of `elems` (restricted growth order).
void set_partitions(const Block& elems, std::size_t idx, std::vector<Block>& cur,
                    const std::function<void(const std::vector<Block>&)>& emit) {
  if (idx == elems.size()) {
    emit(cur);
    return;
  }
  for (std::size_t b = 0; b < cur.size(); ++b) {
    cur[b].push_back(elems[idx]);
    set_partitions(elems, idx + 1, cur, emit);
    cur[b].pop_back();
  }
  cur.push_back({elems[idx]});
  set_partitions(elems, idx + 1, cur, emit);
  cur.pop_back();
}

std::vector<std::vector<Block>> all_set_partitions(const Block& elems) {
  std::vector<std::vector<Block>> out;
  std::vector<Block> cur;
  set_partitions(elems, 0, cur, [&](const std::vector<Block>& p) { out.push_back(p); });
  return out;
}

void sort_layer(Layer& layer) {
  for (auto& b : layer) std::sort(b.begin(), b.end());
  std::sort(layer.begin(), layer.end());
}

}  // namespace

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::OutOfRange: return "out-of-range";
    case ViolationKind::Coverage: return "coverage";
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::Nesting: return "nesting";
    case ViolationKind::Singleton: return "singleton";
    case ViolationKind::LayerCount: return "layer-count";
  }
  return "unknown";
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : PreconditionError([&] {
        std::string msg = "invalid weighted partition:";
        for (const auto& v : violations)
          msg += " [" + to_string(v.kind) + " at layer " + std::to_string(v.layer) + ": " + v.detail + "]";
        return msg;
      }()),
      violations_(std::move(violations)) {}

std::vector<Violation> validate(int n, int k, const std::vector<Layer>& layers) {
  std::vector<Violation> out;
  if (n < 1 || n > kMaxN) out.push_back({ViolationKind::OutOfRange, 0, "n must be in [1," + std::to_string(kMaxN) + "]"});
  if (k < 1) out.push_back({ViolationKind::OutOfRange, 0, "k must be positive"});
  if (!out.empty()) return out;
  if (static_cast<int>(layers.size()) > k)
    out.push_back({ViolationKind::LayerCount, static_cast<int>(layers.size()),
                   "more layers than k=" + std::to_string(k)});

  // owner[l][e]: index of the layer-l block holding e, or -1
  std::vector<std::vector<int>> owner(static_cast<std::size_t>(k + 1), std::vector<int>(static_cast<std::size_t>(n + 1), -1));
  for (int l = 1; l <= std::min<int>(k, static_cast<int>(layers.size())); ++l) {
    const auto& layer = layers[static_cast<std::size_t>(l - 1)];
    for (std::size_t bi = 0; bi < layer.size(); ++bi) {
      const auto& b = layer[bi];
      if (b.empty()) out.push_back({ViolationKind::Coverage, l, "empty block"});
      if (l >= 2 && b.size() == 1) out.push_back({ViolationKind::Singleton, l, "singleton block " + block_text(b)});
      for (int e : b) {
        if (e < 1 || e > n) {
          out.push_back({ViolationKind::OutOfRange, l, "element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]"});
          continue;
        }
        auto& o = owner[static_cast<std::size_t>(l)][static_cast<std::size_t>(e)];
        if (o != -1) out.push_back({ViolationKind::Overlap, l, "element " + std::to_string(e) + " occurs twice"});
        o = static_cast<int>(bi);
      }
    }
    if (l == 1) {
      for (int e = 1; e <= n; ++e)
        if (owner[1][static_cast<std::size_t>(e)] == -1)
          out.push_back({ViolationKind::Coverage, 1, "element " + std::to_string(e) + " not covered"});
    } else {
      for (const auto& b : layer) {
        std::vector<int> parents;
        for (int e : b)
          if (e >= 1 && e <= n) parents.push_back(owner[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(e)]);
        if (parents.empty()) continue;
        const bool ok = parents.front() != -1 && std::all_of(parents.begin(), parents.end(), [&](int p) { return p == parents.front(); });
        if (!ok && b.size() > 1)
          out.push_back({ViolationKind::Nesting, l, "block " + block_text(b) + " not inside one layer-" + std::to_string(l - 1) + " block"});
      }
    }
  }
  return out;
}

WeightedPartition WeightedPartition::bottom(int n, int k) {
  Layer l1;
  for (int e = 1; e <= n; ++e) l1.push_back({e});
  return from_layers(n, k, {l1});
}

WeightedPartition WeightedPartition::from_layers(int n, int k, const std::vector<Layer>& layers) {
  auto violations = validate(n, k, layers);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  WeightedPartition p(n, k);
  p.mins_.resize(static_cast<std::size_t>(n * k));
  for (int l = 1; l <= k; ++l)
    for (int e = 1; e <= n; ++e) p.mins_[static_cast<std::size_t>((l - 1) * n + e - 1)] = static_cast<unsigned char>(e - 1);
  for (int l = 1; l <= static_cast<int>(layers.size()); ++l)
    for (const auto& b : layers[static_cast<std::size_t>(l - 1)]) {
      const int m = *std::min_element(b.begin(), b.end());
      for (int e : b) p.mins_[static_cast<std::size_t>((l - 1) * n + e - 1)] = static_cast<unsigned char>(m - 1);
    }
  return p;
}

WeightedPartition WeightedPartition::from_min_maps(int n, int k, const std::vector<std::vector<int>>& mins) {
  std::vector<Layer> layers;
  for (int l = 1; l <= k; ++l) {
    const auto& m = mins.at(static_cast<std::size_t>(l - 1));
    std::map<int, Block> groups;
    for (int e = 1; e <= n; ++e) groups[m.at(static_cast<std::size_t>(e))].push_back(e);
    Layer layer;
    for (auto& [key, b] : groups) {
      if (b.front() != key)
        throw ValidationError({{ViolationKind::OutOfRange, l, "block " + block_text(b) + " keyed by non-minimum " + std::to_string(key)}});
      if (l == 1 || b.size() > 1) layer.push_back(std::move(b));
    }
    layers.push_back(std::move(layer));
  }
  return from_layers(n, k, layers);
}

Layer WeightedPartition::blocks(int layer, bool with_singletons) const {
  std::vector<Block> by_min(static_cast<std::size_t>(n_ + 1));
  for (int e = 1; e <= n_; ++e) by_min[static_cast<std::size_t>(block_min(layer, e))].push_back(e);
  Layer out;
  for (auto& b : by_min)
    if (!b.empty() && (layer == 1 || with_singletons || b.size() > 1)) out.push_back(std::move(b));
  return out;
}

std::vector<Layer> WeightedPartition::layers() const {
  std::vector<Layer> out;
  for (int l = 1; l <= k_; ++l) out.push_back(blocks(l));
  return out;
}

WeightedPartition WeightedPartition::merged(int a, int b, int layer) const {
  WeightedPartition out = *this;
  for (int l = 1; l <= layer; ++l) {
    const auto ma = mins_[static_cast<std::size_t>((l - 1) * n_ + a - 1)];
    const auto mb = mins_[static_cast<std::size_t>((l - 1) * n_ + b - 1)];
    const auto m = std::min(ma, mb);
    for (int e = 0; e < n_; ++e) {
      auto& v = out.mins_[static_cast<std::size_t>((l - 1) * n_ + e)];
      if (v == ma || v == mb) v = m;
    }
  }
  return out;
}

int WeightedPartition::block_count() const {
  int c = 0;
  for (int e = 1; e <= n_; ++e) c += block_min(1, e) == e;
  return c;
}

std::size_t WeightedPartitionHash::operator()(const WeightedPartition& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.n()) * 1315423911u + static_cast<std::size_t>(p.k());
  for (unsigned char c : p.raw()) h = h * 1099511628211ull ^ c;
  return h;
}

EdgeSet edge_set(const WeightedPartition& p) {
  EdgeSet out;
  for (int i = 1; i <= p.n(); ++i)
    for (int j = i + 1; j <= p.n(); ++j)
      for (int l = p.k(); l >= 1; --l)
        if (p.same_block(l, i, j)) {
          out.push_back({i, j, l});
          break;
        }
  return out;
}

WeightedPartition edge_set_inverse(const EdgeSet& edges, int n, int k) {
  for (const auto& e : edges)
    if (e.i < 1 || e.j > n || e.i >= e.j || e.layer < 1 || e.layer > k)
      throw PreconditionError("edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + "," + std::to_string(e.layer) + ") out of range");
  std::vector<Layer> layers;
  for (int l = 1; l <= k; ++l) {
    UnionFind uf(n);
    for (const auto& e : edges)
      if (e.layer >= l) uf.unite(e.i, e.j);
    std::map<int, Block> groups;
    for (int e = 1; e <= n; ++e) groups[uf.find(e)].push_back(e);
    Layer layer;
    for (auto& [root, b] : groups)
      if (l == 1 || b.size() > 1) layer.push_back(std::move(b));
    layers.push_back(std::move(layer));
  }
  auto p = WeightedPartition::from_layers(n, k, layers);
  EdgeSet sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (edge_set(p) != sorted) throw PreconditionError("edge labels are not deepest-common-layer labels of any weighted partition");
  return p;
}

std::string to_json(const WeightedPartition& p) {
  std::ostringstream os;
  os << "{\"n\":" << p.n() << ",\"k\":" << p.k() << ",\"layers\":[";
  for (int l = 1; l <= p.k(); ++l) {
    if (l > 1) os << ',';
    os << '[';
    const auto layer = p.blocks(l);
    for (std::size_t b = 0; b < layer.size(); ++b) {
      if (b) os << ',';
      os << '[';
      for (std::size_t i = 0; i < layer[b].size(); ++i) os << (i ? "," : "") << layer[b][i];
      os << ']';
    }
    os << ']';
  }
  os << "]}";
  return os.str();
}

WeightedPartition wp_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    return WeightedPartition::from_layers(j.at("n").get<int>(), j.at("k").get<int>(),
                                          j.at("layers").get<std::vector<Layer>>());
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed weighted-partition JSON: ") + e.what());
  }
}

std::vector<WeightedPartition> enumerate_all(int n, int k) {
  if (n < 1 || k < 1) throw PreconditionError("enumerate_all: n and k must be positive");
  std::vector<std::pair<std::string, WeightedPartition>> keyed;
  std::vector<Layer> layers;

  // Extend `layers` (already holding layers 1..l) through layer k.
  std::function<void(int)> extend = [&](int l) {
    if (l == k) {
      auto p = WeightedPartition::from_layers(n, k, layers);
      keyed.emplace_back(to_json(p), std::move(p));
      return;
    }
    const Layer parent = layers.back();
    std::vector<Block> nonsingleton;
    for (const auto& b : parent)
      if (b.size() > 1) nonsingleton.push_back(b);
    Layer next;
    std::function<void(std::size_t)> choose = [&](std::size_t bi) {
      if (bi == nonsingleton.size()) {
        Layer sorted = next;
        sort_layer(sorted);
        layers.push_back(sorted);
        extend(l + 1);
        layers.pop_back();
        return;
      }
      for (const auto& part : all_set_partitions(nonsingleton[bi])) {
        const auto mark = next.size();
        for (const auto& b : part)
          if (b.size() > 1) next.push_back(b);
        choose(bi + 1);
        next.resize(mark);
      }
    };
    choose(0);
  };

  Block ground(static_cast<std::size_t>(n));
  std::iota(ground.begin(), ground.end(), 1);
  for (auto l1 : all_set_partitions(ground)) {
    sort_layer(l1);
    layers = {l1};
    extend(1);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<WeightedPartition> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

std::vector<WeightedPartition> enumerate_by_blocks(int n, int k, int r) {
  std::vector<WeightedPartition> out;
  for (auto& p : enumerate_all(n, k))
    if (p.block_count() == r) out.push_back(std::move(p));
  return out;
}

WeightedPartition atom(int n, int k, int i, int j, int layer) {
  if (i < 1 || j > n || i >= j || layer < 1 || layer > k) throw PreconditionError("atom: invalid pair or layer");
  return edge_set_inverse({{i, j, layer}}, n, k);
}

std::vector<WeightedPartition> atoms(int n, int k) {
  std::vector<WeightedPartition> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int l = 1; l <= k; ++l) out.push_back(atom(n, k, i, j, l));
  return out;
}

std::vector<WeightedPartition> atom_decomposition(const WeightedPartition& p) {
  std::vector<WeightedPartition> out;
  for (const auto& e : edge_set(p)) out.push_back(atom(p.n(), p.k(), e.i, e.j, e.layer));
  return out;
}

}  // namespace wplat
