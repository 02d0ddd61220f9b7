#include "groves/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "groves/error.hpp"

namespace groves {

std::string format_partition(const NodePartition& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << '|';
    for (std::size_t j = 0; j < p[i].size(); ++j) os << (j ? "," : "") << p[i][j];
  }
  return os.str();
}

Rational GroveTally::weight(const NodePartition& p) const {
  auto it = weights_.find(p);
  return it == weights_.end() ? Rational(0) : it->second;
}

Rational GroveTally::total() const {
  Rational t(0);
  for (const auto& [p, w] : weights_) t += w;
  return t;
}

namespace {

// Union-find with undo, no path compression.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  // Returns the absorbed root, or -1 when already joined.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return -1;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return b;
  }
  void undo(int absorbed) {
    const int root = parent_[absorbed];
    size_[root] -= size_[absorbed];
    parent_[absorbed] = absorbed;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

NodePartition canonical(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

GroveTally enumerate_groves(const AnnularGraph& g) {
  std::set<int> all;
  for (int v = 1; v <= g.node_count(); ++v) all.insert(v);
  return enumerate_groves(g, all);
}

GroveTally enumerate_groves(const AnnularGraph& g, const std::set<int>& active) {
  const auto& edges = g.edges();
  if (edges.size() > 24) throw Error(ErrorKind::TooLarge, "grove enumeration limited to 24 edges");
  const int V = g.vertex_count();
  std::vector<char> is_active(static_cast<std::size_t>(V), 0);
  for (int v : active) {
    if (v < 1 || v > V) throw Error(ErrorKind::BadPairing, "active node outside the graph");
    is_active[v - 1] = 1;
  }
  GroveTally tally;
  RollbackDsu dsu(V);
  Rational weight(1);
  auto record = [&]() {
    std::vector<int> root_block(static_cast<std::size_t>(V), -1);
    std::vector<std::vector<int>> blocks;
    std::vector<char> has_node(static_cast<std::size_t>(V), 0);
    for (int v = 0; v < V; ++v)
      if (is_active[v]) has_node[dsu.find(v)] = 1;
    for (int v = 0; v < V; ++v)
      if (!has_node[dsu.find(v)]) return;
    for (int v = 0; v < V; ++v) {
      if (!is_active[v]) continue;
      const int r = dsu.find(v);
      if (root_block[r] < 0) {
        root_block[r] = static_cast<int>(blocks.size());
        blocks.emplace_back();
      }
      blocks[root_block[r]].push_back(v + 1);
    }
    tally.add(canonical(std::move(blocks)), weight);
  };
  auto rec = [&](auto&& self, std::size_t e) -> void {
    if (e == edges.size()) {
      record();
      return;
    }
    self(self, e + 1);
    const int absorbed = dsu.unite(edges[e].u - 1, edges[e].v - 1);
    if (absorbed < 0) return;
    const Rational saved = weight;
    weight *= edges[e].weight;
    self(self, e + 1);
    weight = saved;
    dsu.undo(absorbed);
  };
  rec(rec, 0);
  return tally;
}

namespace {

NodePartition target_partition(const PartialPairing& tau) {
  std::vector<std::vector<int>> blocks;
  for (auto [a, b] : tau.pairs) blocks.push_back({a, b});
  for (int s : tau.singletons) blocks.push_back({s});
  return canonical(std::move(blocks));
}

std::set<int> active_nodes(int n, const PartialPairing& tau) {
  std::set<int> active;
  for (int v = 1; v <= n; ++v) active.insert(v);
  for (int v : tau.internalized) active.erase(v);
  return active;
}

void check_pairing(const AnnularGraph& g, const PartialPairing& tau) {
  if (tau.n != g.node_count())
    throw Error(ErrorKind::BadPairing, "pairing is on " + std::to_string(tau.n) + " nodes, graph has " +
                                           std::to_string(g.node_count()));
  PartialPairing copy = tau;
  copy.normalize();
}

Rational divide_checked(const Rational& num, const Rational& den, const char* what) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, std::string(what) + " is zero");
  return num / den;
}

}  // namespace

Rational z_partial(const AnnularGraph& g, const PartialPairing& tau, const GroveTally& active_tally) {
  check_pairing(g, tau);
  return active_tally.weight(target_partition(tau));
}

Rational z_partial(const AnnularGraph& g, const PartialPairing& tau) {
  check_pairing(g, tau);
  return z_partial(g, tau, enumerate_groves(g, active_nodes(g.node_count(), tau)));
}

Rational ratio_bar(const AnnularGraph& g, const PartialPairing& tau) {
  GroveOracle oracle(g);
  return oracle.ratio_bar(tau);
}

Rational ratio_dot(const AnnularGraph& g, const PartialPairing& tau) {
  GroveOracle oracle(g);
  return oracle.ratio_dot(tau);
}

GroveOracle::GroveOracle(AnnularGraph g) : g_(std::move(g)) {}

const GroveTally& GroveOracle::tally(const std::set<int>& internalized) {
  auto it = tallies_.find(internalized);
  if (it != tallies_.end()) return it->second;
  std::set<int> active;
  for (int v = 1; v <= g_.node_count(); ++v)
    if (!internalized.count(v)) active.insert(v);
  return tallies_.emplace(internalized, enumerate_groves(g_, active)).first->second;
}

Rational GroveOracle::z(const PartialPairing& tau) {
  check_pairing(g_, tau);
  return tally(std::set<int>(tau.internalized.begin(), tau.internalized.end())).weight(target_partition(tau));
}

Rational GroveOracle::spanning_trees() {
  std::vector<int> all;
  for (int v = 1; v <= g_.node_count(); ++v) all.push_back(v);
  return tally({}).weight({all});
}

Rational GroveOracle::all_singletons() {
  NodePartition p;
  for (int v = 1; v <= g_.node_count(); ++v) p.push_back({v});
  return tally({}).weight(p);
}

Rational GroveOracle::ratio_bar(const PartialPairing& tau) {
  return divide_checked(z(tau), spanning_trees(), "Z[1,...,n]");
}

Rational GroveOracle::ratio_dot(const PartialPairing& tau) {
  return divide_checked(z(tau), all_singletons(), "Z[1|...|n]");
}

Rational cim_grove_sum(GroveOracle& oracle, const std::vector<int>& r, const std::vector<int>& s) {
  if (r.size() != s.size()) throw Error(ErrorKind::BadSets, "R and S must have equal size");
  const int n = oracle.graph().node_count();
  std::set<int> used;
  for (int x : r)
    if (!used.insert(x).second) throw Error(ErrorKind::BadSets, "R and S must be disjoint");
  for (int x : s)
    if (!used.insert(x).second) throw Error(ErrorKind::BadSets, "R and S must be disjoint");
  std::vector<std::size_t> perm(s.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total(0);
  do {
    PartialPairing tau;
    tau.n = n;
    for (std::size_t i = 0; i < r.size(); ++i)
      tau.pairs.emplace_back(std::min(r[i], s[perm[i]]), std::max(r[i], s[perm[i]]));
    for (int v = 1; v <= n; ++v)
      if (!used.count(v)) tau.singletons.push_back(v);
    tau.normalize();
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    const Rational w = oracle.ratio_dot(tau);
    if (inversions % 2) total -= w; else total += w;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace groves
