#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "groves/annular_graph.hpp"
#include "groves/dyck.hpp"
#include "groves/matrix.hpp"
#include "groves/rational.hpp"

namespace groves {

// Node partition in canonical form: blocks sorted, each block sorted.
using NodePartition = std::vector<std::vector<int>>;

std::string format_partition(const NodePartition& p);  // "1,3|2,4"

// Total forest weight per induced partition of the active nodes.
class GroveTally {
 public:
  void add(const NodePartition& p, const Rational& w) { weights_[p] += w; }
  Rational weight(const NodePartition& p) const;
  const std::map<NodePartition, Rational>& weights() const { return weights_; }
  Rational total() const;

 private:
  std::map<NodePartition, Rational> weights_;
};

// Every spanning forest in which each tree contains an active node, tallied
// by the partition it induces on the active nodes. Defaults to all nodes.
// Throws TooLarge beyond 24 edges.
GroveTally enumerate_groves(const AnnularGraph& g);
GroveTally enumerate_groves(const AnnularGraph& g, const std::set<int>& active);

// Weight of groves realizing tau; internalized nodes act as internal vertices.
Rational z_partial(const AnnularGraph& g, const PartialPairing& tau);
Rational z_partial(const AnnularGraph& g, const PartialPairing& tau, const GroveTally& active_tally);

// z_partial over Z[1,...,n] and over Z[1|...|n].
Rational ratio_bar(const AnnularGraph& g, const PartialPairing& tau);
Rational ratio_dot(const AnnularGraph& g, const PartialPairing& tau);

// Caches the full tally and the per-internalized-set tallies of one graph.
class GroveOracle {
 public:
  explicit GroveOracle(AnnularGraph g);
  const AnnularGraph& graph() const { return g_; }
  const GroveTally& tally(const std::set<int>& internalized);
  Rational z(const PartialPairing& tau);
  Rational spanning_trees();  // Z[1,...,n]
  Rational all_singletons();  // Z[1|...|n]
  Rational ratio_bar(const PartialPairing& tau);
  Rational ratio_dot(const PartialPairing& tau);

 private:
  AnnularGraph g_;
  std::map<std::set<int>, GroveTally> tallies_;
};

// Right side of the minor identity for disjoint R, S of equal size:
// sum over bijections pi of sign(pi) Z[r_i, s_pi(i) | other nodes single] / Z[1|...|n].
Rational cim_grove_sum(GroveOracle& oracle, const std::vector<int>& r, const std::vector<int>& s);

}  // namespace groves
