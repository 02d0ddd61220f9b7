#pragma once

#include <istream>
#include <string>
#include <vector>

#include "groves/matrix.hpp"
#include "groves/rational.hpp"
#include "groves/series.hpp"

namespace groves {

struct Edge {
  int u = 0;
  int v = 0;
  Rational weight{1};
  // Signed number of zipper crossings when the edge is traversed u -> v.
  int zip = 0;
};

// Weighted graph embedded in an annulus. Vertices are 1..V, nodes are
// 1..n; node n lies on the inner boundary and is the sink of the Green's
// function. The embedding is described only through per-edge zipper
// crossing counts and is not verified.
class AnnularGraph {
 public:
  AnnularGraph(int vertex_count, int node_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int node_count() const { return node_count_; }
  int sink() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  int vertex_count_;
  int node_count_;
  std::vector<Edge> edges_;
};

// Green's function data on all V vertices (0-based storage, vertex u at
// index u-1). The sink row and column are identically zero.
struct GreenData {
  Matrix<Rational> G;
  Matrix<Rational> Gp;

  const Rational& g(int u, int v) const { return G(u - 1, v - 1); }
  const Rational& gp(int u, int v) const { return Gp(u - 1, v - 1); }
};

// Response matrix on the n nodes (0-based storage).
struct ResponseData {
  Matrix<Rational> L;
  Matrix<Rational> Lp;

  const Rational& l(int u, int v) const { return L(u - 1, v - 1); }
  const Rational& lp(int u, int v) const { return Lp(u - 1, v - 1); }
};

// Line-bundle Laplacian at z = e^t: off-diagonal (u,v) is
// -sum w e^{c t} over edges u~v with c the crossing count u -> v; the
// diagonal is the weighted degree.
Matrix<TruncatedSeries> laplacian_series(const AnnularGraph& g, int order);

// Ordinary Laplacian (t = 0).
Matrix<Rational> laplacian(const AnnularGraph& g);

// Laplacian with the sink row and column removed, V-1 x V-1.
Matrix<Rational> grounded_laplacian(const AnnularGraph& g);

GreenData green_data(const AnnularGraph& g);
ResponseData response_data(const AnnularGraph& g);

// Full expansions of the grounded inverse (V x V, sink row/column zero) and
// of the negated Schur complement onto the nodes (n x n), both to `order`.
Matrix<TruncatedSeries> green_series(const AnnularGraph& g, int order);
Matrix<TruncatedSeries> response_series(const AnnularGraph& g, int order);

// Text format:
//   annular-graph v1
//   vertices <V> nodes <n>
//   edge <u> <v> <p>/<q> <zip>
// Blank lines and '#' comments are ignored.
AnnularGraph parse_graph(std::istream& in);
AnnularGraph load_graph(const std::string& path);
std::string format_graph(const AnnularGraph& g);

// Shipped fixtures.
AnnularGraph fixture_a();  // K4 minus edge {3,4}; n = 4, every vertex a node
AnnularGraph fixture_b();  // wheel: outer 6-cycle, hub 7 = node 7
AnnularGraph fixture_c();  // circular-planar: 6-cycle of nodes plus an internal hub
// FIX-A / FIX-B / FIX-C by name, otherwise a file path.
AnnularGraph graph_by_name_or_path(const std::string& name_or_path);

}  // namespace groves
