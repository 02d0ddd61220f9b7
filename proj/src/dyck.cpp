#include "groves/dyck.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "groves/error.hpp"

namespace groves {

// ---------------------------------------------------------------- pairings

PartialPairing PartialPairing::parse(const std::string& text, int n) {
  PartialPairing tau;
  tau.n = n;
  std::vector<int> listed;
  std::stringstream parts(text);
  std::string part;
  while (std::getline(parts, part, '|')) {
    std::vector<int> members;
    std::stringstream ms(part);
    std::string tok;
    while (std::getline(ms, tok, ',')) {
      tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
      if (tok.empty()) throw Error(ErrorKind::BadPairing, "empty member in '" + text + "'");
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        members.push_back(v);
      } catch (const std::exception&) {
        throw Error(ErrorKind::BadPairing, "not a node number: '" + tok + "'");
      }
    }
    if (members.size() == 1) {
      tau.singletons.push_back(members[0]);
    } else if (members.size() == 2) {
      tau.pairs.emplace_back(std::min(members[0], members[1]), std::max(members[0], members[1]));
    } else {
      throw Error(ErrorKind::BadPairing, "parts must have one or two nodes: '" + part + "'");
    }
    listed.insert(listed.end(), members.begin(), members.end());
  }
  for (int v = 1; v <= n; ++v)
    if (std::find(listed.begin(), listed.end(), v) == listed.end()) tau.internalized.push_back(v);
  tau.normalize();
  return tau;
}

void PartialPairing::normalize() {
  std::sort(pairs.begin(), pairs.end());
  std::sort(singletons.begin(), singletons.end());
  std::sort(internalized.begin(), internalized.end());
  std::vector<int> seen(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
  auto mark = [&](int v) {
    if (v < 1 || v > n) throw Error(ErrorKind::BadPairing, "node " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (seen[v]++) throw Error(ErrorKind::BadPairing, "node " + std::to_string(v) + " listed twice");
  };
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    mark(a);
    mark(b);
  }
  for (int v : singletons) mark(v);
  for (int v : internalized) mark(v);
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) throw Error(ErrorKind::BadPairing, "node " + std::to_string(v) + " unassigned");
}

std::string PartialPairing::to_string() const {
  std::vector<std::vector<int>> parts;
  for (auto [a, b] : pairs) parts.push_back({a, b});
  for (int v : singletons) parts.push_back({v});
  std::sort(parts.begin(), parts.end());
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << '|';
    for (std::size_t j = 0; j < parts[i].size(); ++j) os << (j ? "," : "") << parts[i][j];
  }
  return os.str();
}

// --------------------------------------------------------------- Dyck paths

namespace {

std::vector<int> heights_of(const std::vector<Step>& steps) {
  std::vector<int> h{0};
  for (Step s : steps) h.push_back(h.back() + (s == Step::U ? 1 : -1));
  return h;
}

bool is_dyck(const std::vector<Step>& steps) {
  int h = 0;
  for (Step s : steps) {
    if (s != Step::U && s != Step::D) return false;
    h += (s == Step::U) ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

std::vector<int> iota_labels(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i) + 1;
  return v;
}

}  // namespace

DyckPath::DyckPath(std::vector<Step> steps, std::vector<int> labels)
    : steps_(std::move(steps)), labels_(std::move(labels)) {
  if (labels_.size() != steps_.size()) throw Error(ErrorKind::InvalidPath, "one label per step required");
  if (!is_dyck(steps_)) throw Error(ErrorKind::InvalidPath, "not a Dyck path: " + to_string());
}

DyckPath DyckPath::parse(const std::string& text) {
  std::vector<Step> steps;
  for (char c : text) {
    if (c == 'U') steps.push_back(Step::U);
    else if (c == 'D') steps.push_back(Step::D);
    else throw Error(ErrorKind::Parse, std::string("Dyck paths use only U and D, got '") + c + "'");
  }
  return DyckPath(steps, iota_labels(steps.size()));
}

DyckPath DyckPath::from_heights(const std::vector<int>& heights) {
  std::vector<Step> steps;
  for (std::size_t i = 1; i < heights.size(); ++i) {
    int d = heights[i] - heights[i - 1];
    if (d != 1 && d != -1) throw Error(ErrorKind::InvalidPath, "height steps must be +-1");
    steps.push_back(d == 1 ? Step::U : Step::D);
  }
  if (!heights.empty() && heights[0] != 0) throw Error(ErrorKind::InvalidPath, "heights must start at 0");
  return DyckPath(steps, iota_labels(steps.size()));
}

std::vector<int> DyckPath::heights() const { return heights_of(steps_); }

std::vector<std::pair<int, int>> DyckPath::matching() const {
  std::vector<std::pair<int, int>> out;
  std::vector<int> stack;
  for (int i = 0; i < static_cast<int>(steps_.size()); ++i) {
    if (steps_[i] == Step::U) {
      stack.push_back(i);
    } else {
      out.emplace_back(stack.back(), i);
      stack.pop_back();
    }
  }
  return out;
}

std::string DyckPath::to_string() const {
  std::string s;
  for (Step st : steps_) s.push_back(static_cast<char>(st));
  return s;
}

std::string DyckPath::to_labeled_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < steps_.size(); ++i) os << (i ? " " : "") << static_cast<char>(steps_[i]) << labels_[i];
  return os.str();
}

// ----------------------------------------------------------- augmented paths

AugPath::AugPath(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error(ErrorKind::InvalidPath, "empty path");
  int flats = 0, sinks = 0;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].label < 1) throw Error(ErrorKind::InvalidPath, "labels must be positive");
    if (i && symbols_[i].label <= symbols_[i - 1].label)
      throw Error(ErrorKind::InvalidPath, "labels must be strictly increasing");
    flats += symbols_[i].step == Step::F;
    sinks += symbols_[i].step == Step::Sink;
  }
  if (flats != 1 || sinks != 1) throw Error(ErrorKind::InvalidPath, "need exactly one F and one O");
  if (symbols_.back().step != Step::Sink) throw Error(ErrorKind::InvalidPath, "O must be the last symbol");
  std::vector<Step> core_steps;
  for (std::size_t i : core_positions(*this)) core_steps.push_back(symbols_[i].step);
  if (!is_dyck(core_steps)) throw Error(ErrorKind::InvalidPath, "rotated U/D word is not a Dyck path: " + to_string());
}

AugPath AugPath::parse(const std::string& text) {
  return parse(text, iota_labels(text.size()));
}

AugPath AugPath::parse(const std::string& text, const std::vector<int>& labels) {
  if (labels.size() != text.size()) throw Error(ErrorKind::Parse, "one label per symbol required");
  std::vector<Symbol> syms;
  for (std::size_t i = 0; i < text.size(); ++i) {
    Step s;
    switch (text[i]) {
      case 'U': s = Step::U; break;
      case 'D': s = Step::D; break;
      case 'F': s = Step::F; break;
      case 'S': s = Step::S; break;
      case 'I': s = Step::I; break;
      case 'O': s = Step::Sink; break;
      default: throw Error(ErrorKind::Parse, std::string("unknown path symbol '") + text[i] + "'");
    }
    syms.push_back({s, labels[i]});
  }
  return AugPath(std::move(syms));
}

std::size_t AugPath::flat_index() const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].step == Step::F) return i;
  throw Error(ErrorKind::InvalidPath, "no F");
}

std::vector<int> AugPath::labels_with(Step s) const {
  std::vector<int> out;
  for (const Symbol& sym : symbols_)
    if (sym.step == s) out.push_back(sym.label);
  return out;
}

std::string AugPath::to_string() const {
  std::string s;
  for (const Symbol& sym : symbols_) s.push_back(static_cast<char>(sym.step));
  return s;
}

std::string AugPath::to_labeled_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    os << (i ? " " : "") << static_cast<char>(symbols_[i].step) << symbols_[i].label;
  return os.str();
}

std::vector<std::size_t> core_positions(const AugPath& lambda) {
  std::size_t f = 0;
  while (lambda[f].step != Step::F) ++f;
  std::vector<std::size_t> order;
  for (std::size_t i = f + 1; i < lambda.size(); ++i) order.push_back(i);
  for (std::size_t i = 0; i < f; ++i) order.push_back(i);
  std::vector<std::size_t> out;
  for (std::size_t i : order)
    if (lambda[i].step == Step::U || lambda[i].step == Step::D) out.push_back(i);
  return out;
}

DyckPath core(const AugPath& lambda) {
  std::vector<Step> steps;
  std::vector<int> labels;
  for (std::size_t i : core_positions(lambda)) {
    steps.push_back(lambda[i].step);
    labels.push_back(lambda[i].label);
  }
  return DyckPath(steps, labels);
}

AugPath with_core(const AugPath& lambda, const DyckPath& new_core) {
  const auto pos = core_positions(lambda);
  if (pos.size() != new_core.steps().size()) throw Error(ErrorKind::InvalidPath, "core length mismatch");
  std::vector<Symbol> syms = lambda.symbols();
  for (std::size_t k = 0; k < pos.size(); ++k) syms[pos[k]].step = new_core.steps()[k];
  return AugPath(std::move(syms));
}

AugPath encode_pairing(const PartialPairing& input) {
  PartialPairing tau = input;
  tau.normalize();
  const int n = tau.n;
  int partner = 0;
  for (auto [a, b] : tau.pairs)
    if (b == n) partner = a;
  if (partner == 0) throw Error(ErrorKind::NodeNUnpaired, "node " + std::to_string(n) + " is not in a pair");

  std::vector<Step> role(static_cast<std::size_t>(n) + 1, Step::I);
  for (int v : tau.singletons) role[v] = Step::S;
  role[partner] = Step::F;
  role[n] = Step::Sink;
  // Rank of each node in the cyclic order starting just after the partner.
  auto rank = [&](int v) { return (v - partner - 1 + (n - 1)) % (n - 1); };
  for (auto [a, b] : tau.pairs) {
    if (b == n) continue;
    bool a_first = rank(a) < rank(b);
    role[a] = a_first ? Step::U : Step::D;
    role[b] = a_first ? Step::D : Step::U;
  }
  std::vector<Symbol> syms;
  for (int v = 1; v <= n; ++v) syms.push_back({role[v], v});
  AugPath lambda;
  try {
    lambda = AugPath(std::move(syms));
  } catch (const Error&) {
    throw Error(ErrorKind::CrossingPairs, "pairs of " + tau.to_string() + " cross");
  }
  if (decode_path(lambda) != tau) throw Error(ErrorKind::CrossingPairs, "pairs of " + tau.to_string() + " cross");
  return lambda;
}

PartialPairing decode_path(const AugPath& lambda) {
  PartialPairing tau;
  tau.n = lambda.sink_label();
  const DyckPath c = core(lambda);
  for (auto [i, j] : c.matching()) {
    int a = c.labels()[i], b = c.labels()[j];
    tau.pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  tau.pairs.emplace_back(lambda.flat_label(), lambda.sink_label());
  tau.singletons = lambda.labels_with(Step::S);
  tau.internalized = lambda.labels_with(Step::I);
  std::sort(tau.pairs.begin(), tau.pairs.end());
  return tau;
}

std::vector<DyckPath> dyck_paths_above(const DyckPath& lower) {
  const std::vector<int> floor = lower.heights();
  const int len = static_cast<int>(floor.size()) - 1;
  std::vector<DyckPath> out;
  std::vector<int> h{0};
  std::function<void()> rec = [&]() {
    const int i = static_cast<int>(h.size()) - 1;
    if (i == len) {
      std::vector<Step> steps;
      for (int k = 1; k <= len; ++k) steps.push_back(h[k] > h[k - 1] ? Step::U : Step::D);
      out.emplace_back(steps, lower.labels());
      return;
    }
    for (int d : {-1, +1}) {
      int nh = h.back() + d;
      if (nh < floor[i + 1] || nh > len - (i + 1)) continue;
      h.push_back(nh);
      rec();
      h.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<DyckPath> all_dyck_paths(int k) {
  std::vector<Step> zigzag;
  for (int i = 0; i < k; ++i) {
    zigzag.push_back(Step::U);
    zigzag.push_back(Step::D);
  }
  return dyck_paths_above(DyckPath(zigzag, iota_labels(zigzag.size())));
}

std::vector<AugPath> paths_above(const AugPath& lambda) {
  std::vector<AugPath> out;
  for (const DyckPath& p : dyck_paths_above(core(lambda))) out.push_back(with_core(lambda, p));
  return out;
}

// ------------------------------------------------------------------ tilings

std::vector<Cell> skew_cells(const DyckPath& lower, const DyckPath& upper) {
  const auto lo = lower.heights(), hi = upper.heights();
  if (lo.size() != hi.size()) throw Error(ErrorKind::InvalidPath, "paths of different order");
  std::vector<Cell> cells;
  for (std::size_t x = 0; x < lo.size(); ++x) {
    if (hi[x] < lo[x]) throw Error(ErrorKind::InvalidPath, "upper path dips below lower path");
    for (int y = lo[x] + 1; y < hi[x]; y += 2) cells.emplace_back(static_cast<int>(x), y);
  }
  return cells;
}

bool is_cover_inclusive(const DyckTiling& tiling) {
  std::map<Cell, std::size_t> owner;
  for (std::size_t t = 0; t < tiling.size(); ++t)
    for (const Cell& c : tiling[t].cells) owner[c] = t;
  for (std::size_t t = 0; t < tiling.size(); ++t) {
    const int lo = tiling[t].cells.front().first, hi = tiling[t].cells.back().first;
    for (const auto& [x, y] : tiling[t].cells) {
      auto below = owner.find({x, y - 2});
      if (below == owner.end() || below->second == t) continue;
      const DyckTile& other = tiling[below->second];
      if (lo < other.cells.front().first || hi > other.cells.back().first) return false;
    }
  }
  return true;
}

namespace {

// Dyck-shaped walks starting at `start` through free cells.
void tiles_from(const Cell& start, const std::set<Cell>& free, std::vector<DyckTile>& out) {
  std::vector<Cell> walk{start};
  std::function<void()> rec = [&]() {
    const Cell last = walk.back();
    if (last.second == start.second) out.push_back(DyckTile{walk});
    for (int dy : {+1, -1}) {
      Cell next{last.first + 1, last.second + dy};
      if (next.second < start.second || !free.count(next)) continue;
      walk.push_back(next);
      rec();
      walk.pop_back();
    }
  };
  rec();
}

void enumerate_tilings(std::set<Cell>& free, DyckTiling& current, std::vector<DyckTiling>& out) {
  if (free.empty()) {
    if (is_cover_inclusive(current)) out.push_back(current);
    return;
  }
  // Leftmost column, highest cell in it: necessarily the first cell of its tile.
  const int x0 = free.begin()->first;
  auto it = free.lower_bound({x0 + 1, INT32_MIN});
  const Cell start = *std::prev(it);
  std::vector<DyckTile> candidates;
  tiles_from(start, free, candidates);
  for (const DyckTile& tile : candidates) {
    for (const Cell& c : tile.cells) free.erase(c);
    current.push_back(tile);
    enumerate_tilings(free, current, out);
    current.pop_back();
    for (const Cell& c : tile.cells) free.insert(c);
  }
}

}  // namespace

std::vector<DyckTiling> list_ci_tilings(const DyckPath& lower, const DyckPath& upper) {
  const auto cells = skew_cells(lower, upper);
  std::set<Cell> free(cells.begin(), cells.end());
  DyckTiling current;
  std::vector<DyckTiling> out;
  enumerate_tilings(free, current, out);
  return out;
}

std::uint64_t count_ci_tilings(const DyckPath& lower, const DyckPath& upper) {
  return list_ci_tilings(lower, upper).size();
}

std::string render_tiling(const DyckPath& lower, const DyckPath& upper, const DyckTiling& tiling) {
  const auto lo = lower.heights(), hi = upper.heights();
  const int width = static_cast<int>(lo.size());
  const int top = *std::max_element(hi.begin(), hi.end());
  std::vector<std::string> grid(static_cast<std::size_t>(top) + 1, std::string(static_cast<std::size_t>(width), ' '));
  for (int x = 0; x < width; ++x) {
    grid[top - lo[x]][x] = '_';
    grid[top - hi[x]][x] = '^';
  }
  for (std::size_t t = 0; t < tiling.size(); ++t)
    for (const auto& [x, y] : tiling[t].cells) grid[top - y][x] = static_cast<char>('a' + t % 26);
  std::ostringstream os;
  for (const auto& row : grid) {
    std::string r = row;
    while (!r.empty() && r.back() == ' ') r.pop_back();
    os << r << "\n";
  }
  return os.str();
}

std::uint64_t tree_labelings_count(const DyckPath& path) {
  std::vector<std::uint64_t> size_stack;
  std::vector<std::uint64_t> sizes;
  for (Step s : path.steps()) {
    if (s == Step::U) {
      size_stack.push_back(1);
    } else {
      std::uint64_t sz = size_stack.back();
      size_stack.pop_back();
      sizes.push_back(sz);
      if (!size_stack.empty()) size_stack.back() += sz;
    }
  }
  const int k = path.order();
  if (k > 20) throw Error(ErrorKind::TooLarge, "tree labeling count overflows beyond order 20");
  std::uint64_t result = 1;
  for (int i = 2; i <= k; ++i) result *= static_cast<std::uint64_t>(i);
  for (std::uint64_t s : sizes) result /= s;
  return result;
}

// ------------------------------------------------------------- cycle lemma

std::vector<std::pair<int, int>> cycle_lemma_pairing(const std::set<int>& R, const std::set<int>& S, int n) {
  if (n < 2 || n % 2 || static_cast<int>(R.size()) != n / 2 || static_cast<int>(S.size()) != n / 2)
    throw Error(ErrorKind::BadPartition, "R and S must be halves of {1..n} with n even");
  for (int v = 1; v <= n; ++v)
    if (R.count(v) == S.count(v)) throw Error(ErrorKind::BadPartition, "R and S must partition {1..n}");
  const bool n_in_R = R.count(n) > 0;
  const std::set<int>& ups = n_in_R ? S : R;

  // Steps over positions 1..n-1; total height gain is +1.
  const int len = n - 1;
  std::vector<int> prefix(static_cast<std::size_t>(len) + 1, 0);
  for (int i = 1; i <= len; ++i) prefix[i] = prefix[i - 1] + (ups.count(i) ? 1 : -1);
  int m = 0;
  for (int i = 0; i <= len; ++i)
    if (prefix[i] <= prefix[m]) m = i;
  // Rotation starting at position m+1 keeps every partial sum positive; its
  // first step is the up step left unmatched.
  std::vector<int> order;
  for (int k = 0; k < len; ++k) order.push_back((m + k) % len + 1);
  const int leftover = order[0];
  std::vector<std::pair<int, int>> chords;  // (up, down), by up position
  std::vector<std::size_t> stack;
  for (std::size_t k = 1; k < order.size(); ++k) {
    int p = order[k];
    if (ups.count(p)) {
      stack.push_back(chords.size());
      chords.emplace_back(p, 0);
    } else {
      chords[stack.back()].second = p;
      stack.pop_back();
    }
  }
  std::vector<std::pair<int, int>> out;
  for (auto [up, down] : chords) out.push_back(n_in_R ? std::make_pair(down, up) : std::make_pair(up, down));
  out.push_back(n_in_R ? std::make_pair(n, leftover) : std::make_pair(leftover, n));
  return out;
}

int crossing_number(const std::vector<std::pair<int, int>>& arcs) {
  int count = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      auto [a, b] = std::minmax(arcs[i].first, arcs[i].second);
      auto [c, d] = std::minmax(arcs[j].first, arcs[j].second);
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) ++count;
    }
  return count;
}

std::vector<PartialPairing> annular_partial_pairings(int n) {
  std::vector<PartialPairing> out;
  std::vector<int> state(static_cast<std::size_t>(n) + 1, 0);  // 0 unassigned
  PartialPairing cur;
  cur.n = n;
  std::function<void(int)> rec = [&](int v) {
    while (v <= n && state[v]) ++v;
    if (v > n) {
      PartialPairing tau = cur;
      tau.normalize();
      try {
        encode_pairing(tau);
        out.push_back(tau);
      } catch (const Error&) {
      }
      return;
    }
    state[v] = 1;
    if (v != n) {
      cur.singletons.push_back(v);
      rec(v + 1);
      cur.singletons.pop_back();
      cur.internalized.push_back(v);
      rec(v + 1);
      cur.internalized.pop_back();
    }
    for (int w = v + 1; w <= n; ++w) {
      if (state[w]) continue;
      state[w] = 1;
      cur.pairs.emplace_back(v, w);
      rec(v + 1);
      cur.pairs.pop_back();
      state[w] = 0;
    }
    state[v] = 0;
  };
  rec(1);
  std::sort(out.begin(), out.end(), [](const PartialPairing& a, const PartialPairing& b) {
    return encode_pairing(a).to_string() < encode_pairing(b).to_string();
  });
  return out;
}

}  // namespace groves
