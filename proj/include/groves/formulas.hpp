#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "groves/annular_graph.hpp"
#include "groves/dyck.hpp"
#include "groves/error.hpp"
#include "groves/linalg.hpp"
#include "groves/matrix.hpp"
#include "groves/polynomial.hpp"
#include "groves/rational.hpp"
#include "groves/series.hpp"

namespace groves {

// ------------------------------------------------------------ marked strings

enum class Mark : char { Plus = '+', Minus = '-', Circle = 'o', Dot = '*' };

struct MarkedSymbol {
  Mark mark;
  int label;
  bool operator==(const MarkedSymbol&) const = default;
};

using MarkedString = std::vector<MarkedSymbol>;

// S deleted, I_i -> Dot_i Circle_i, then U/D/F marks relative to the flat label.
MarkedString to_dddot(const AugPath& mu);
// I deleted, S_i -> Circle_i Dot_i, then U/D/F marks relative to the flat label.
MarkedString to_bar(const AugPath& mu);
// "+1 o2 *2 o4 o6 *7"
std::string format_marked(const MarkedString& sigma);

// --------------------------------------------------------------- jet data

// Symmetric table A and antisymmetric table A' over node labels.
template <class S>
struct Jet {
  std::function<S(int, int)> a;
  std::function<S(int, int)> ap;
};

// G and G' with every entry in row or column n replaced by 1 (and 0 in G').
Jet<Rational> green_jet(const GreenData& data, int n);
Jet<Rational> response_jet(const ResponseData& data);
// Formal variables X[i,j], X'[i,j] of the given family; with ground_sink the
// row/column n entries become the constants 1 and 0.
Jet<Polynomial> symbolic_jet(char family, int n, bool ground_sink);

// Entry (i,j), with a = label(i), b = label(j):
//   neither Dot: -A'(a,b) + A(a,b) (1[i=+] - 1[j=+] - 1[i=-] + 1[j=-])
//   only j Dot:   A(a,b)
//   only i Dot:  -A(a,b)
//   both Dot:     0
template <class S>
Matrix<S> build_M_sigma(const MarkedString& sigma, const Jet<S>& jet) {
  const std::size_t m = sigma.size();
  std::vector<int> labels;
  for (const auto& s : sigma) labels.push_back(s.label);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (int a : labels)
    for (int b : labels) {
      if (b < a) continue;
      if (!(jet.a(a, b) == jet.a(b, a)) || !(jet.ap(a, b) == -jet.ap(b, a)))
        throw Error(ErrorKind::AsymmetricInput,
                    "A or A' fails its symmetry at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  auto ind = [](const MarkedSymbol& s, Mark k) { return s.mark == k ? 1 : 0; };
  Matrix<S> out(m, m, S(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const MarkedSymbol& x = sigma[i];
      const MarkedSymbol& y = sigma[j];
      const bool xd = x.mark == Mark::Dot, yd = y.mark == Mark::Dot;
      if (xd && yd) continue;
      if (yd) {
        out(i, j) = jet.a(x.label, y.label);
      } else if (xd) {
        out(i, j) = -jet.a(x.label, y.label);
      } else {
        const int c = ind(x, Mark::Plus) - ind(y, Mark::Plus) - ind(x, Mark::Minus) + ind(y, Mark::Minus);
        S entry = -jet.ap(x.label, y.label);
        if (c != 0) entry += S(c) * jet.a(x.label, y.label);
        out(i, j) = entry;
      }
    }
  return out;
}

// ---------------------------------------------------------- Pfaffian formula

// G: ratio to the spanning-tree partition function (Green's function data).
// L: ratio to the all-singleton partition function (response matrix data).
enum class Mode { G, L };

template <class S>
struct RatioTerm {
  AugPath mu;
  std::uint64_t coefficient;
  S pfaffian;
};

template <class S>
struct RatioResult {
  S value;
  std::vector<RatioTerm<S>> terms;
};

template <class S>
RatioResult<S> theorem1_eval(const AugPath& lambda, const Jet<S>& jet, Mode mode) {
  RatioResult<S> result{S(0), {}};
  const DyckPath lower = core(lambda);
  for (const AugPath& mu : paths_above(lambda)) {
    const std::uint64_t c = count_ci_tilings(lower, core(mu));
    const MarkedString sigma = mode == Mode::G ? to_bar(mu) : to_dddot(mu);
    S pf = pfaffian(build_M_sigma(sigma, jet));
    result.value += S(static_cast<int>(c)) * pf;
    result.terms.push_back({mu, c, std::move(pf)});
  }
  return result;
}

// Numeric evaluation on a graph.
RatioResult<Rational> theorem1_eval(const AugPath& lambda, const AnnularGraph& g, Mode mode);

// ------------------------------------------------------- determinant formula

// lambda with its S and I symbols removed.
AugPath excise(const AugPath& lambda);

// sum over mu >= lambda* of (tilings) e^{2t e(mu)} with
// e(mu) = #(ups of mu before F in S*) - #(downs of mu after F in S*)
//         + #(downs of lambda* after F).
// S* holds 1-based positions of lambda*; lambda* has only U/D/F/O symbols.
TruncatedSeries B_series(const AugPath& lambda_star, const std::set<int>& s_star, int order);

// sum_{R*} B(lambda*, S*) det A[lambda*(R*), E ; lambda*(S*), E] with rows and
// columns ordered by the cycle-lemma pairing of (R*, S*), E appended to both.
// A is indexed by label - 1.
TruncatedSeries zstar_lambda_numerator(const AugPath& lambda, const Matrix<TruncatedSeries>& a,
                                       const std::vector<int>& extra, int order);
// The numerator over (1 - e^{2t})^k.
LaurentSeries zstar_lambda(const AugPath& lambda, const Matrix<TruncatedSeries>& a, const std::vector<int>& extra,
                           int order);

enum class Expansion { Linearized, FullSeries };

// Series matrix over node labels used by the determinant formula: linearized
// G + G't (row/column n set to 1) or L + L't, or the full expansions.
Matrix<TruncatedSeries> determinant_input(const AnnularGraph& g, Mode mode, Expansion expansion, int order);

// Limit t -> 0 of the determinant-sum formula. Mode L carries (-1)^{|T|}.
Rational det_formula(const AugPath& lambda, const AnnularGraph& g, Mode mode,
                     Expansion expansion = Expansion::Linearized);

// -------------------------------------------------------- Pfaffian = sum of dets

namespace detail {
void check_half(const std::set<int>& r, int n);
std::set<int> complement(const std::set<int>& r, int n);
std::vector<std::set<int>> half_subsets(int n);
}  // namespace detail

// det A[rows R; columns S] with R, S in cycle-lemma order; negated entries
// when n is in R. A is n x n, R a subset of {1..n} of size n/2.
template <class S>
S d_R(const Matrix<S>& a, const std::set<int>& r) {
  const int n = static_cast<int>(a.dim());
  detail::check_half(r, n);
  const auto pairs = cycle_lemma_pairing(r, detail::complement(r, n), n);
  std::vector<std::size_t> rows, cols;
  for (auto [x, y] : pairs) {
    rows.push_back(static_cast<std::size_t>(x - 1));
    cols.push_back(static_cast<std::size_t>(y - 1));
  }
  Matrix<S> sub = a.select(rows, cols);
  if (r.count(n)) sub = -sub;
  return determinant(sub);
}

// Sum over bijections R -> S of (-1)^{cr} prod (-1)^{[r > s]} A(r,s).
template <class S>
S directed_matching_sum(const Matrix<S>& a, const std::set<int>& r) {
  const int n = static_cast<int>(a.dim());
  detail::check_half(r, n);
  const std::vector<int> rs(r.begin(), r.end());
  const std::set<int> s_set = detail::complement(r, n);
  std::vector<int> ss(s_set.begin(), s_set.end());
  S total(0);
  do {
    std::vector<std::pair<int, int>> arcs;
    S term(1);
    int sign = crossing_number([&] {
      for (std::size_t i = 0; i < rs.size(); ++i) arcs.emplace_back(rs[i], ss[i]);
      return arcs;
    }());
    for (auto [x, y] : arcs) {
      if (x > y) ++sign;
      term *= a(x - 1, y - 1);
    }
    if (sign % 2) total -= term; else total += term;
  } while (std::next_permutation(ss.begin(), ss.end()));
  return total;
}

// (sum over |R| = n/2 of d_R(A), Pf(A - A^T)).
template <class S>
std::pair<S, S> pfaffian_sum_identity(const Matrix<S>& a) {
  const int n = static_cast<int>(a.dim());
  if (n % 2) throw Error(ErrorKind::OddDimension, "identity needs even dimension");
  S lhs(0);
  for (const auto& r : detail::half_subsets(n)) lhs += d_R(a, r);
  return {lhs, pfaffian(a - a.transpose())};
}

// ------------------------------------------------------- response-matrix Pfaffians

// A - A^T where A(i,j) = 0 for i in C or j in B, L(i,j) otherwise.
Matrix<Rational> tripartite_matrix(const Matrix<Rational>& l, const std::set<int>& b, const std::set<int>& c);
Rational tripartite_pfaffian(const Matrix<Rational>& l, const std::set<int>& b, const std::set<int>& c);

// Rows/columns p_1..p_2k, t'_1, t_1, ..., t'_m, t_m. For i, j in P u T the
// entry is a_i b_j L(i,j) - a_j b_i L(j,i); (i, t'_j) is a_i L(i,t_j);
// T' x T' is zero. alpha and beta are indexed by label - 1 and must be 1 on T.
Matrix<Rational> alpha_beta_pf_matrix(const Matrix<Rational>& l, const std::vector<Rational>& alpha,
                                      const std::vector<Rational>& beta, const std::vector<int>& p,
                                      const std::vector<int>& t);

// ------------------------------------------------------------ proof machinery

// Direct sum over R* with exponential weights, divided by (1 - e^{2t})^k.
LaurentSeries zstar_mu_direct(const AugPath& mu, const Matrix<TruncatedSeries>& a, int order);
// Pfaffian of the scaled block matrix built from to_bar(mu), including the
// prefactor exp[t(|U| - |V|)] when requested.
LaurentSeries zstar_mu_pfaffian(const AugPath& mu, const Matrix<TruncatedSeries>& a, int order,
                                bool with_prefactor = true);

struct SeriesPair {
  TruncatedSeries lhs;
  TruncatedSeries rhs;
};

// lhs: sum over R containing B, missing C, of exp[2t(|S n U| - |S n V|)] d_R(A).
// rhs: exp[t(|U| - |V|)] Pf of the block matrix of A~.
SeriesPair lemma_bcuv(const Matrix<TruncatedSeries>& a, const std::set<int>& b, const std::set<int>& c,
                      const std::set<int>& u, const std::set<int>& v, int order);

// ------------------------------------------------------------------ corollaries

struct CorollaryReport {
  Polynomial g_polynomial;
  Polynomial l_polynomial;
  bool g_integral = false;
  bool l_integral = false;
  bool coboundary_invariant = false;
  bool ok() const { return g_integral && l_integral && coboundary_invariant; }
};

Polynomial symbolic_theorem1(const AugPath& lambda, Mode mode);
// X'[i,j] -> X'[i,j] + f[i] - f[j] for every antisymmetric variable.
Polynomial coboundary_substitute(const Polynomial& p);
CorollaryReport corollary_checks(const AugPath& lambda);

}  // namespace groves
