#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "groves/annular_graph.hpp"
#include "groves/error.hpp"
#include "groves/linalg.hpp"

using namespace groves;

namespace {

AnnularGraph single_edge(int zip, Rational w = Rational(1)) { return AnnularGraph(2, 2, {{1, 2, w, zip}}); }

AnnularGraph zip_free(const AnnularGraph& g) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.zip = 0;
  return AnnularGraph(g.vertex_count(), g.node_count(), edges);
}

// Derivative of order d of the line-bundle Laplacian at t = 0, written out
// edge by edge: off-diagonal (u,v) gets -w c^d.
Matrix<Rational> laplacian_derivative(const AnnularGraph& g, int d) {
  const auto V = static_cast<std::size_t>(g.vertex_count());
  Matrix<Rational> m(V, V);
  for (const Edge& e : g.edges()) {
    m(e.u - 1, e.v - 1) -= e.weight * pow(Rational(e.zip), d);
    m(e.v - 1, e.u - 1) -= e.weight * pow(Rational(-e.zip), d);
  }
  return m;
}

Matrix<Rational> drop_last(const Matrix<Rational>& m) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i + 1 < m.dim(); ++i) idx.push_back(i);
  return m.select(idx, idx);
}

template <class S>
bool every(const Matrix<S>& m, const std::function<bool(std::size_t, std::size_t)>& pred) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!pred(i, j)) return false;
  return true;
}

const std::vector<AnnularGraph>& fixtures() {
  static const std::vector<AnnularGraph> all{fixture_a(), fixture_b(), fixture_c()};
  return all;
}

}  // namespace

TEST_CASE("laplacian_series on a single edge") {
  const auto plain = laplacian_series(single_edge(0), 1);
  CHECK(plain(0, 0) == TruncatedSeries(1).truncated(1));
  CHECK(plain(0, 1) == TruncatedSeries(-1).truncated(1));
  CHECK(plain(0, 1).coeff(1) == Rational(0));

  const auto zipped = laplacian_series(single_edge(1), 1);
  CHECK(zipped(0, 1) == TruncatedSeries({Rational(-1), Rational(-1)}, 1));
  CHECK(zipped(1, 0) == TruncatedSeries({Rational(-1), Rational(1)}, 1));
}

TEST_CASE("fixture A grounded laplacian and Green's function") {
  const AnnularGraph a = fixture_a();
  const Matrix<Rational> expected{{3, -1, -1}, {-1, 3, -1}, {-1, -1, 2}};
  CHECK(grounded_laplacian(a) == expected);
  CHECK(drop_last(coefficient_matrices(laplacian_series(a, 0), 0)[0]) == expected);

  const GreenData d = green_data(a);
  CHECK(d.g(3, 3) == Rational(1));
  CHECK(d.g(1, 1) == Rational(5, 8));
  CHECK(d.g(1, 2) == Rational(3, 8));
  CHECK(drop_last(d.G) * expected == Matrix<Rational>::identity(3));
  for (int u = 1; u <= 4; ++u) CHECK(d.g(u, 4) == Rational(0));
}

TEST_CASE("Green's function invariants on every fixture") {
  for (const AnnularGraph& g : fixtures()) {
    const GreenData d = green_data(g);
    CHECK(every(d.G, [&](auto i, auto j) { return d.G(i, j) == d.G(j, i); }));
    CHECK(every(d.Gp, [&](auto i, auto j) { return d.Gp(i, j) == -d.Gp(j, i); }));
    const int s = g.sink();
    for (int u = 1; u <= g.vertex_count(); ++u) CHECK(d.g(u, s) == Rational(0));
    const GreenData flat = green_data(zip_free(g));
    CHECK(every(flat.Gp, [&](auto i, auto j) { return flat.Gp(i, j).is_zero(); }));
  }
}

TEST_CASE("response matrix") {
  const Rational w(5, 3);
  const ResponseData two = response_data(single_edge(0, w));
  CHECK(two.L == Matrix<Rational>{{-w, w}, {w, -w}});

  for (const AnnularGraph& g : fixtures()) {
    const ResponseData r = response_data(g);
    for (std::size_t i = 0; i < r.L.dim(); ++i) {
      Rational sum(0);
      for (std::size_t j = 0; j < r.L.dim(); ++j) sum += r.L(i, j);
      CHECK(sum == Rational(0));
      CHECK(r.Lp(i, i) == Rational(0));
    }
    CHECK(every(r.L, [&](auto i, auto j) { return r.L(i, j) == r.L(j, i); }));
    CHECK(every(r.Lp, [&](auto i, auto j) { return r.Lp(i, j) == -r.Lp(j, i); }));
    const ResponseData flat = response_data(zip_free(g));
    CHECK(every(flat.Lp, [&](auto i, auto j) { return flat.Lp(i, j).is_zero(); }));
  }
}

TEST_CASE("series expansions match the jets and the inversion symmetry") {
  for (const AnnularGraph& g : fixtures()) {
    const GreenData d = green_data(g);
    const auto gc = coefficient_matrices(green_series(g, 4), 4);
    CHECK(gc[0] == d.G);
    CHECK(gc[1] == d.Gp);
    const ResponseData r = response_data(g);
    const auto rc = coefficient_matrices(response_series(g, 4), 4);
    CHECK(rc[0] == r.L);
    CHECK(rc[1] == r.Lp);
    // G(v,u)(t) = G(u,v)(-t): even coefficients symmetric, odd antisymmetric.
    for (int k = 0; k <= 4; ++k) {
      const Rational sign = k % 2 ? Rational(-1) : Rational(1);
      CHECK(gc[k].transpose() == sign * gc[k]);
      CHECK(rc[k].transpose() == sign * rc[k]);
    }
  }
  const AnnularGraph flat = zip_free(fixture_b());
  const auto fc = coefficient_matrices(green_series(flat, 3), 3);
  for (int k = 1; k <= 3; ++k) CHECK(every(fc[k], [&](auto i, auto j) { return fc[k](i, j).is_zero(); }));
}

TEST_CASE("second-order Green's coefficient from differentiating the inverse twice") {
  const AnnularGraph a = fixture_a();
  const Matrix<Rational> G = drop_last(green_data(a).G);
  const Matrix<Rational> d1 = drop_last(laplacian_derivative(a, 1));
  const Matrix<Rational> d2 = drop_last(laplacian_derivative(a, 2));
  const Matrix<Rational> expected = Rational(1, 2) * (Rational(2) * (G * d1 * G * d1 * G) - G * d2 * G);
  CHECK(drop_last(coefficient_matrices(green_series(a, 2), 2)[2]) == expected);
}

TEST_CASE("disconnected graphs are rejected") {
  const AnnularGraph broken(4, 4, {{1, 2, Rational(1), 0}, {3, 4, Rational(1), 0}});
  CHECK_THROWS_WITH_AS(green_data(broken), doctest::Contains("SingularLaplacian"), Error);
  const AnnularGraph lonely(3, 2, {{1, 2, Rational(1), 0}});
  CHECK_THROWS_WITH_AS(response_data(lonely), doctest::Contains("SingularInternalBlock"), Error);
}

TEST_CASE("graph text format") {
  const std::string text =
      "annular-graph v1\n"
      "# fixture A\n"
      "vertices 4 nodes 4\n"
      "\n"
      "edge 1 2 1/1 0\n"
      "edge 2 3 1/1 0\n"
      "edge 3 1 1/1 -1   # zipper\n"
      "edge 1 4 1/1 0\n"
      "edge 2 4 1/1 0\n";
  std::istringstream in(text);
  const AnnularGraph g = parse_graph(in);
  CHECK(format_graph(g) == format_graph(fixture_a()));
  std::istringstream again(format_graph(fixture_c()));
  CHECK(format_graph(parse_graph(again)) == format_graph(fixture_c()));

  auto parse = [](const std::string& s) {
    std::istringstream is(s);
    return parse_graph(is);
  };
  CHECK_THROWS_WITH_AS(parse("graph v1\n"), doctest::Contains("Parse"), Error);
  CHECK_THROWS_WITH_AS(parse("annular-graph v1\nvertices 2 nodes 2\nedge 1 1 1/1 0\n"), doctest::Contains("InvalidGraph"),
                       Error);
  CHECK_THROWS_WITH_AS(parse("annular-graph v1\nvertices 2 nodes 2\nedge 1 2 -1/2 0\n"),
                       doctest::Contains("InvalidGraph"), Error);
  CHECK_THROWS_WITH_AS(parse("annular-graph v1\nvertices 2 nodes 3\n"), doctest::Contains("InvalidGraph"), Error);
  CHECK_THROWS_WITH_AS(parse("annular-graph v1\nvertices 2 nodes 2\nedge 1 2 1/1 0 extra\n"),
                       doctest::Contains("Parse"), Error);
}
