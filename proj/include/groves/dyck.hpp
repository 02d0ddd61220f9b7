#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace groves {

// Roles of a node in an augmented cyclic Dyck path. Sink is the inner-boundary
// node n (written 'O' in text).
enum class Step : char { U = 'U', D = 'D', F = 'F', S = 'S', I = 'I', Sink = 'O' };

struct Symbol {
  Step step;
  int label;
  auto operator<=>(const Symbol&) const = default;
};

// Pairs, singletons and internalized nodes of {1..n}; node n must be paired.
struct PartialPairing {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  // each (a, b) with a < b, sorted
  std::vector<int> singletons;             // sorted
  std::vector<int> internalized;           // sorted

  // "1,5|2|3,4" over nodes 1..n; unlisted nodes are internalized.
  static PartialPairing parse(const std::string& text, int n);
  // Sorts and checks the partition property.
  void normalize();
  std::string to_string() const;
  bool operator==(const PartialPairing&) const = default;
};

// Labeled Dyck path: heights start and end at 0 and never go negative.
class DyckPath {
 public:
  DyckPath() = default;
  DyckPath(std::vector<Step> steps, std::vector<int> labels);
  // Unlabeled from "UUDD"; labels default to 1..2k.
  static DyckPath parse(const std::string& text);
  // From a height sequence h_0..h_{2k}.
  static DyckPath from_heights(const std::vector<int>& heights);

  int order() const { return static_cast<int>(steps_.size()) / 2; }
  const std::vector<Step>& steps() const { return steps_; }
  const std::vector<int>& labels() const { return labels_; }
  std::vector<int> heights() const;
  // Step positions matched by the noncrossing matching (0-based, up first).
  std::vector<std::pair<int, int>> matching() const;
  std::string to_string() const;
  std::string to_labeled_string() const;
  bool operator==(const DyckPath&) const = default;

 private:
  std::vector<Step> steps_;
  std::vector<int> labels_;
};

// Labeled augmented cyclic Dyck path.
class AugPath {
 public:
  AugPath() = default;
  explicit AugPath(std::vector<Symbol> symbols);
  // "USIDIFO" with labels 1..n, or explicit strictly increasing labels.
  static AugPath parse(const std::string& text);
  static AugPath parse(const std::string& text, const std::vector<int>& labels);

  std::size_t size() const { return symbols_.size(); }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
  std::size_t flat_index() const;
  int flat_label() const { return symbols_[flat_index()].label; }
  int sink_label() const { return symbols_.back().label; }
  std::vector<int> labels_with(Step s) const;

  std::string to_string() const;          // "DFUO"
  std::string to_labeled_string() const;  // "D1 F2 U3 O4"
  auto operator<=>(const AugPath&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

AugPath encode_pairing(const PartialPairing& tau);
PartialPairing decode_path(const AugPath& lambda);

// U/D subsequence after rotating the F to the end, labels carried along.
DyckPath core(const AugPath& lambda);
// Indices into lambda of the core's steps, in core order.
std::vector<std::size_t> core_positions(const AugPath& lambda);
// Same non-U/D letters, core replaced.
AugPath with_core(const AugPath& lambda, const DyckPath& new_core);

// Every Dyck path of order k lying weakly above `lower`, lexicographic in
// height sequence.
std::vector<DyckPath> dyck_paths_above(const DyckPath& lower);
std::vector<DyckPath> all_dyck_paths(int k);
// All mu >= lambda, lexicographic on core height sequences.
std::vector<AugPath> paths_above(const AugPath& lambda);

// Cell centers (x, y) of the skew shape between two Dyck paths: x in
// 1..2k-1, lower_x < y < upper_x, y = x + 1 (mod 2).
using Cell = std::pair<int, int>;
struct DyckTile {
  std::vector<Cell> cells;  // left to right
};
using DyckTiling = std::vector<DyckTile>;

std::vector<Cell> skew_cells(const DyckPath& lower, const DyckPath& upper);
bool is_cover_inclusive(const DyckTiling& tiling);
std::vector<DyckTiling> list_ci_tilings(const DyckPath& lower, const DyckPath& upper);
std::uint64_t count_ci_tilings(const DyckPath& lower, const DyckPath& upper);
// Rows of text, top row first; each tile drawn with its own letter.
std::string render_tiling(const DyckPath& lower, const DyckPath& upper, const DyckTiling& tiling);

// Increasing labelings of the plane tree whose contour is the path,
// k! / prod(subtree sizes).
std::uint64_t tree_labelings_count(const DyckPath& path);

// Cycle-lemma pairing of complementary halves R, S of {1..n}. Returns (r, s)
// pairs: the chord pairs in cyclic order of their up step starting just after
// the leftover up step, then the leftover paired with n.
std::vector<std::pair<int, int>> cycle_lemma_pairing(const std::set<int>& R, const std::set<int>& S, int n);

// Crossings among arcs drawn on a line.
int crossing_number(const std::vector<std::pair<int, int>>& arcs);

// All partial pairings of {1..n} with n paired that admit an encoding.
std::vector<PartialPairing> annular_partial_pairings(int n);

}  // namespace groves
