#include "groves/formulas.hpp"

#include <sstream>

namespace groves {

namespace {

int indicator(bool b) { return b ? 1 : 0; }

// Marks for U/D/F/O relative to the flat label f.
MarkedSymbol plain_mark(const Symbol& s, int f) {
  switch (s.step) {
    case Step::U: return {s.label < f ? Mark::Plus : Mark::Circle, s.label};
    case Step::D: return {s.label < f ? Mark::Circle : Mark::Minus, s.label};
    case Step::F: return {Mark::Circle, s.label};
    case Step::Sink: return {Mark::Dot, s.label};
    default: throw Error(ErrorKind::InvalidPath, "no plain mark for S or I");
  }
}

std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& pool, std::size_t size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i + (size - cur.size()) <= pool.size(); ++i) {
      cur.push_back(pool[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Positions (1-based) of up steps before F and down steps after F.
std::pair<std::set<int>, std::set<int>> ups_before_downs_after(const AugPath& p) {
  const int f = static_cast<int>(p.flat_index()) + 1;
  std::set<int> ups, downs;
  for (int i = 1; i <= static_cast<int>(p.size()); ++i) {
    if (p[i - 1].step == Step::U && i < f) ups.insert(i);
    if (p[i - 1].step == Step::D && i > f) downs.insert(i);
  }
  return {ups, downs};
}

int count_in(const std::set<int>& a, const std::set<int>& b) {
  int c = 0;
  for (int x : a) c += indicator(b.count(x) > 0);
  return c;
}

TruncatedSeries exp_int(int a, int order) { return TruncatedSeries::exp_linear(Rational(a), order); }

// det A[rows; cols] for labels (1-based) over series.
TruncatedSeries labeled_det(const Matrix<TruncatedSeries>& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<std::size_t> r, c;
  for (int x : rows) r.push_back(static_cast<std::size_t>(x - 1));
  for (int y : cols) c.push_back(static_cast<std::size_t>(y - 1));
  return determinant(a.select(r, c));
}

// Determinant sum over R* for lambda* with weights given per S*.
TruncatedSeries star_sum(const AugPath& star, const Matrix<TruncatedSeries>& a, const std::vector<int>& extra,
                         int order, const std::function<TruncatedSeries(const std::set<int>&)>& weight) {
  const int n_star = static_cast<int>(star.size());
  for (const Symbol& s : star.symbols())
    if (s.label > static_cast<int>(a.dim()) || s.label < 1)
      throw Error(ErrorKind::DimensionMismatch, "label " + std::to_string(s.label) + " outside the matrix");
  std::vector<int> pool;
  for (int i = 1; i < n_star; ++i) pool.push_back(i);
  TruncatedSeries total = TruncatedSeries(0).truncated(order);
  for (const auto& r_vec : subsets_of_size(pool, static_cast<std::size_t>(n_star / 2))) {
    const std::set<int> r_star(r_vec.begin(), r_vec.end());
    const std::set<int> s_star = detail::complement(r_star, n_star);
    std::vector<int> rows, cols;
    for (auto [r, s] : cycle_lemma_pairing(r_star, s_star, n_star)) {
      rows.push_back(star[r - 1].label);
      cols.push_back(star[s - 1].label);
    }
    rows.insert(rows.end(), extra.begin(), extra.end());
    cols.insert(cols.end(), extra.begin(), extra.end());
    TruncatedSeries det = labeled_det(a, rows, cols);
    if (det.is_zero()) continue;
    total += weight(s_star) * det;
  }
  return total.truncated(order);
}

}  // namespace

// ---------------------------------------------------------------- marks

MarkedString to_dddot(const AugPath& mu) {
  const int f = mu.flat_label();
  MarkedString out;
  for (const Symbol& s : mu.symbols()) {
    if (s.step == Step::S) continue;
    if (s.step == Step::I) {
      out.push_back({Mark::Dot, s.label});
      out.push_back({Mark::Circle, s.label});
    } else {
      out.push_back(plain_mark(s, f));
    }
  }
  return out;
}

MarkedString to_bar(const AugPath& mu) {
  const int f = mu.flat_label();
  MarkedString out;
  for (const Symbol& s : mu.symbols()) {
    if (s.step == Step::I) continue;
    if (s.step == Step::S) {
      out.push_back({Mark::Circle, s.label});
      out.push_back({Mark::Dot, s.label});
    } else {
      out.push_back(plain_mark(s, f));
    }
  }
  return out;
}

std::string format_marked(const MarkedString& sigma) {
  std::ostringstream os;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    os << (i ? " " : "") << static_cast<char>(sigma[i].mark) << sigma[i].label;
  return os.str();
}

// ------------------------------------------------------------------- jets

Jet<Rational> green_jet(const GreenData& data, int n) {
  return {[data, n](int i, int j) { return (i == n || j == n) ? Rational(1) : data.g(i, j); },
          [data, n](int i, int j) { return (i == n || j == n) ? Rational(0) : data.gp(i, j); }};
}

Jet<Rational> response_jet(const ResponseData& data) {
  return {[data](int i, int j) { return data.l(i, j); }, [data](int i, int j) { return data.lp(i, j); }};
}

Jet<Polynomial> symbolic_jet(char family, int n, bool ground_sink) {
  return {[=](int i, int j) {
            if (ground_sink && (i == n || j == n)) return Polynomial(1);
            return Polynomial::symmetric(family, i, j);
          },
          [=](int i, int j) {
            if (ground_sink && (i == n || j == n)) return Polynomial(0);
            return Polynomial::antisymmetric(family, i, j);
          }};
}

RatioResult<Rational> theorem1_eval(const AugPath& lambda, const AnnularGraph& g, Mode mode) {
  if (lambda.sink_label() != g.node_count())
    throw Error(ErrorKind::DimensionMismatch, "path has " + std::to_string(lambda.sink_label()) + " nodes, graph has " +
                                                  std::to_string(g.node_count()));
  if (mode == Mode::G) return theorem1_eval(lambda, green_jet(green_data(g), g.node_count()), mode);
  return theorem1_eval(lambda, response_jet(response_data(g)), mode);
}

// ------------------------------------------------------ determinant formula

namespace detail {

void check_half(const std::set<int>& r, int n) {
  if (n % 2) throw Error(ErrorKind::BadR, "dimension must be even");
  if (static_cast<int>(r.size()) * 2 != n) throw Error(ErrorKind::BadR, "R must have n/2 elements");
  for (int x : r)
    if (x < 1 || x > n) throw Error(ErrorKind::BadR, "element " + std::to_string(x) + " outside 1..n");
}

std::set<int> complement(const std::set<int>& r, int n) {
  std::set<int> s;
  for (int i = 1; i <= n; ++i)
    if (!r.count(i)) s.insert(i);
  return s;
}

std::vector<std::set<int>> half_subsets(int n) {
  std::vector<int> pool;
  for (int i = 1; i <= n; ++i) pool.push_back(i);
  std::vector<std::set<int>> out;
  for (const auto& v : subsets_of_size(pool, static_cast<std::size_t>(n / 2))) out.emplace_back(v.begin(), v.end());
  return out;
}

}  // namespace detail

AugPath excise(const AugPath& lambda) {
  std::vector<Symbol> kept;
  for (const Symbol& s : lambda.symbols())
    if (s.step != Step::S && s.step != Step::I) kept.push_back(s);
  return AugPath(std::move(kept));
}

TruncatedSeries B_series(const AugPath& lambda_star, const std::set<int>& s_star, int order) {
  const int n_star = static_cast<int>(lambda_star.size());
  for (const Symbol& s : lambda_star.symbols())
    if (s.step == Step::S || s.step == Step::I) throw Error(ErrorKind::BadS, "lambda* must not contain S or I");
  if (!s_star.count(n_star) || static_cast<int>(s_star.size()) * 2 != n_star)
    throw Error(ErrorKind::BadS, "S* must contain n* and have n*/2 elements");
  for (int x : s_star)
    if (x < 1 || x > n_star) throw Error(ErrorKind::BadS, "S* element outside 1..n*");
  const int lambda_downs = static_cast<int>(ups_before_downs_after(lambda_star).second.size());
  const DyckPath lower = core(lambda_star);
  TruncatedSeries total = TruncatedSeries(0).truncated(order);
  for (const AugPath& mu : paths_above(lambda_star)) {
    const auto [ups, downs] = ups_before_downs_after(mu);
    const int e = count_in(ups, s_star) - count_in(downs, s_star) + lambda_downs;
    const auto c = count_ci_tilings(lower, core(mu));
    total += TruncatedSeries(Rational(static_cast<long>(c))) * exp_int(2 * e, order);
  }
  return total;
}

TruncatedSeries zstar_lambda_numerator(const AugPath& lambda, const Matrix<TruncatedSeries>& a,
                                       const std::vector<int>& extra, int order) {
  const AugPath star = excise(lambda);
  return star_sum(star, a, extra, order,
                  [&](const std::set<int>& s_star) { return B_series(star, s_star, order); });
}

LaurentSeries zstar_lambda(const AugPath& lambda, const Matrix<TruncatedSeries>& a, const std::vector<int>& extra,
                           int order) {
  return divide_by_one_minus_exp2t_power(zstar_lambda_numerator(lambda, a, extra, order), core(lambda).order());
}

Matrix<TruncatedSeries> determinant_input(const AnnularGraph& g, Mode mode, Expansion expansion, int order) {
  const int n = g.node_count();
  const auto N = static_cast<std::size_t>(n);
  Matrix<TruncatedSeries> a(N, N);
  if (expansion == Expansion::Linearized) {
    if (mode == Mode::G) {
      const GreenData d = green_data(g);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) a(i - 1, j - 1) = TruncatedSeries({d.g(i, j), d.gp(i, j)}, order);
    } else {
      const ResponseData d = response_data(g);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) a(i - 1, j - 1) = TruncatedSeries({d.l(i, j), d.lp(i, j)}, order);
    }
  } else {
    const Matrix<TruncatedSeries> full = mode == Mode::G ? green_series(g, order) : response_series(g, order);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) a(i, j) = full(i, j);
  }
  if (mode == Mode::G)
    for (std::size_t i = 0; i < N; ++i) a(i, N - 1) = a(N - 1, i) = TruncatedSeries(1);
  return a;
}

Rational det_formula(const AugPath& lambda, const AnnularGraph& g, Mode mode, Expansion expansion) {
  if (lambda.sink_label() != g.node_count())
    throw Error(ErrorKind::DimensionMismatch, "path and graph disagree on the node count");
  const int k = core(lambda).order();
  const int order = k + 1;
  const Matrix<TruncatedSeries> a = determinant_input(g, mode, expansion, order);
  const std::vector<int> extra = lambda.labels_with(mode == Mode::G ? Step::S : Step::I);
  Rational value = series_limit_constant(zstar_lambda_numerator(lambda, a, extra, order), k);
  if (mode == Mode::L && extra.size() % 2) value = -value;
  return value;
}

// ------------------------------------------------------ response Pfaffians

Matrix<Rational> tripartite_matrix(const Matrix<Rational>& l, const std::set<int>& b, const std::set<int>& c) {
  const int n = static_cast<int>(l.dim());
  for (int x : b)
    if (x < 1 || x > n || c.count(x)) throw Error(ErrorKind::BadBlocks, "B must be disjoint from C and within 1..n");
  for (int x : c)
    if (x < 1 || x > n) throw Error(ErrorKind::BadBlocks, "C must lie within 1..n");
  Matrix<Rational> a = l;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (c.count(i) || b.count(j)) a(i - 1, j - 1) = Rational(0);
  return a - a.transpose();
}

Rational tripartite_pfaffian(const Matrix<Rational>& l, const std::set<int>& b, const std::set<int>& c) {
  return pfaffian(tripartite_matrix(l, b, c));
}

Matrix<Rational> alpha_beta_pf_matrix(const Matrix<Rational>& l, const std::vector<Rational>& alpha,
                                      const std::vector<Rational>& beta, const std::vector<int>& p,
                                      const std::vector<int>& t) {
  const int n = static_cast<int>(l.dim());
  if (alpha.size() != l.dim() || beta.size() != l.dim())
    throw Error(ErrorKind::BadParams, "alpha and beta need one value per node");
  if (p.size() % 2) throw Error(ErrorKind::BadParams, "P must have even size");
  std::set<int> seen;
  for (int x : p)
    if (x < 1 || x > n || !seen.insert(x).second) throw Error(ErrorKind::BadParams, "P and T must be disjoint node sets");
  for (int x : t) {
    if (x < 1 || x > n || !seen.insert(x).second) throw Error(ErrorKind::BadParams, "P and T must be disjoint node sets");
    if (alpha[x - 1] != Rational(1) || beta[x - 1] != Rational(1))
      throw Error(ErrorKind::BadParams, "alpha and beta must be 1 on T");
  }
  // (label, row weight, column weight); primed copies have weights 0 and 1.
  struct Slot {
    int label;
    Rational row, col;
  };
  std::vector<Slot> slots;
  for (int x : p) slots.push_back({x, alpha[x - 1], beta[x - 1]});
  for (int x : t) {
    slots.push_back({x, Rational(0), Rational(1)});
    slots.push_back({x, Rational(1), Rational(1)});
  }
  const std::size_t m = slots.size();
  Matrix<Rational> a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      a(i, j) = slots[i].row * slots[j].col * l(slots[i].label - 1, slots[j].label - 1);
  return a - a.transpose();
}

// -------------------------------------------------------- proof machinery

LaurentSeries zstar_mu_direct(const AugPath& mu, const Matrix<TruncatedSeries>& a, int order) {
  const AugPath star = excise(mu);
  const auto [ups, downs] = ups_before_downs_after(star);
  const TruncatedSeries num =
      star_sum(star, a, mu.labels_with(Step::S), order, [&, &ups = ups, &downs = downs](const std::set<int>& s_star) {
        return exp_int(2 * (count_in(ups, s_star) - count_in(downs, s_star)), order);
      });
  return divide_by_one_minus_exp2t_power(num, core(mu).order());
}

LaurentSeries zstar_mu_pfaffian(const AugPath& mu, const Matrix<TruncatedSeries>& a, int order, bool with_prefactor) {
  const MarkedString bar = to_bar(mu);
  std::set<int> u, v;
  for (const auto& s : bar) {
    if (s.mark == Mark::Plus) u.insert(s.label);
    if (s.mark == Mark::Minus) v.insert(s.label);
  }
  for (const auto& s : bar)
    if (s.label > static_cast<int>(a.dim())) throw Error(ErrorKind::DimensionMismatch, "label outside the matrix");
  auto tilde = [&](int x, int y) {
    const int e = indicator(u.count(y)) - indicator(u.count(x)) - indicator(v.count(y)) + indicator(v.count(x));
    return a(x - 1, y - 1) * exp_int(e, order);
  };
  // t / (1 - e^{2t}); the k factors of 1/t are carried by the valuation.
  const TruncatedSeries scale = TruncatedSeries::divide(TruncatedSeries(1), one_minus_exp2t_over_t(order), order);
  const std::size_t m = bar.size();
  Matrix<TruncatedSeries> mat(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const bool id = bar[i].mark == Mark::Dot, jd = bar[j].mark == Mark::Dot;
      const int x = bar[i].label, y = bar[j].label;
      if (id && jd) continue;
      if (jd) mat(i, j) = tilde(x, y);
      else if (id) mat(i, j) = -tilde(y, x);
      else mat(i, j) = (tilde(x, y) - tilde(y, x)) * scale;
    }
  TruncatedSeries body = pfaffian(mat);
  if (with_prefactor) body = body * exp_int(static_cast<int>(u.size()) - static_cast<int>(v.size()), order);
  return LaurentSeries{-core(mu).order(), body.truncated(order)};
}

SeriesPair lemma_bcuv(const Matrix<TruncatedSeries>& a, const std::set<int>& b, const std::set<int>& c,
                      const std::set<int>& u, const std::set<int>& v, int order) {
  const int n = static_cast<int>(a.dim());
  if (n % 2) throw Error(ErrorKind::BadSets, "dimension must be even");
  for (const auto* set : {&b, &c, &u, &v})
    for (int x : *set)
      if (x < 1 || x > n) throw Error(ErrorKind::BadSets, "element " + std::to_string(x) + " outside 1..n");
  for (int x : b)
    if (c.count(x)) throw Error(ErrorKind::BadSets, "B and C must be disjoint");
  for (int x : u)
    if (v.count(x)) throw Error(ErrorKind::BadSets, "U and V must be disjoint");

  TruncatedSeries lhs = TruncatedSeries(0).truncated(order);
  for (const auto& r : detail::half_subsets(n)) {
    if (!std::includes(r.begin(), r.end(), b.begin(), b.end())) continue;
    if (count_in(c, r)) continue;
    const std::set<int> s = detail::complement(r, n);
    lhs += exp_int(2 * (count_in(s, u) - count_in(s, v)), order) * d_R(a, r);
  }

  Matrix<TruncatedSeries> at(a.rows(), a.cols());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (c.count(i) || b.count(j)) {
        at(i - 1, j - 1) = TruncatedSeries(0);
        continue;
      }
      const int e = indicator(u.count(j)) - indicator(u.count(i)) - indicator(v.count(j)) + indicator(v.count(i));
      at(i - 1, j - 1) = a(i - 1, j - 1) * exp_int(e, order);
    }
  const TruncatedSeries rhs =
      exp_int(static_cast<int>(u.size()) - static_cast<int>(v.size()), order) * pfaffian(at - at.transpose());
  return {lhs.truncated(order), rhs.truncated(order)};
}

// ------------------------------------------------------------ corollaries

Polynomial symbolic_theorem1(const AugPath& lambda, Mode mode) {
  const int n = lambda.sink_label();
  const Jet<Polynomial> jet = mode == Mode::G ? symbolic_jet('G', n, true) : symbolic_jet('L', n, false);
  return theorem1_eval(lambda, jet, mode).value;
}

Polynomial coboundary_substitute(const Polynomial& p) {
  return p.substitute([](const Variable& x) -> std::optional<Polynomial> {
    if (x.kind != Variable::Kind::Antisymmetric) return std::nullopt;
    return Polynomial::antisymmetric(x.family, x.i, x.j) + Polynomial::potential('f', x.i) -
           Polynomial::potential('f', x.j);
  });
}

CorollaryReport corollary_checks(const AugPath& lambda) {
  CorollaryReport r;
  r.g_polynomial = symbolic_theorem1(lambda, Mode::G);
  r.l_polynomial = symbolic_theorem1(lambda, Mode::L);
  r.g_integral = r.g_polynomial.has_integer_coefficients();
  r.l_integral = r.l_polynomial.has_integer_coefficients();
  r.coboundary_invariant = coboundary_substitute(r.g_polynomial) == r.g_polynomial;
  return r;
}

}  // namespace groves
