#include "groves/annular_graph.hpp"

#include <fstream>
#include <sstream>

#include "groves/error.hpp"
#include "groves/linalg.hpp"

namespace groves {

AnnularGraph::AnnularGraph(int vertex_count, int node_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ < 1 || node_count_ > vertex_count_)
    throw Error(ErrorKind::InvalidGraph, "need 1 <= nodes <= vertices");
  for (const Edge& e : edges_) {
    if (e.u < 1 || e.u > vertex_count_ || e.v < 1 || e.v > vertex_count_)
      throw Error(ErrorKind::InvalidGraph, "edge endpoint out of range");
    if (e.u == e.v) throw Error(ErrorKind::InvalidGraph, "self-loop at vertex " + std::to_string(e.u));
    if (e.weight.sign() <= 0) throw Error(ErrorKind::InvalidGraph, "edge weight must be positive");
  }
}

Matrix<TruncatedSeries> laplacian_series(const AnnularGraph& g, int order) {
  const auto V = static_cast<std::size_t>(g.vertex_count());
  Matrix<TruncatedSeries> lap(V, V, TruncatedSeries(0));
  for (const Edge& e : g.edges()) {
    const std::size_t u = e.u - 1, v = e.v - 1;
    lap(u, u) += TruncatedSeries(e.weight);
    lap(v, v) += TruncatedSeries(e.weight);
    lap(u, v) -= TruncatedSeries(e.weight) * TruncatedSeries::exp_linear(Rational(e.zip), order);
    lap(v, u) -= TruncatedSeries(e.weight) * TruncatedSeries::exp_linear(Rational(-e.zip), order);
  }
  // Keep every entry at the requested order, including exact diagonals.
  return lap.map([order](const TruncatedSeries& s) { return s.truncated(order); });
}

Matrix<Rational> laplacian(const AnnularGraph& g) {
  const auto V = static_cast<std::size_t>(g.vertex_count());
  Matrix<Rational> lap(V, V);
  for (const Edge& e : g.edges()) {
    const std::size_t u = e.u - 1, v = e.v - 1;
    lap(u, u) += e.weight;
    lap(v, v) += e.weight;
    lap(u, v) -= e.weight;
    lap(v, u) -= e.weight;
  }
  return lap;
}

namespace {

std::vector<std::size_t> non_sink_indices(const AnnularGraph& g) {
  std::vector<std::size_t> idx;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (v != g.sink()) idx.push_back(static_cast<std::size_t>(v - 1));
  return idx;
}

// Derivative of the line-bundle Laplacian at z = 1.
Matrix<Rational> laplacian_derivative(const AnnularGraph& g) {
  const auto V = static_cast<std::size_t>(g.vertex_count());
  Matrix<Rational> d(V, V);
  for (const Edge& e : g.edges()) {
    d(e.u - 1, e.v - 1) -= e.weight * Rational(e.zip);
    d(e.v - 1, e.u - 1) += e.weight * Rational(e.zip);
  }
  return d;
}

template <class S>
Matrix<S> embed_grounded(const Matrix<S>& grounded, const AnnularGraph& g) {
  const auto V = static_cast<std::size_t>(g.vertex_count());
  const auto idx = non_sink_indices(g);
  Matrix<S> full(V, V, S(0));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) full(idx[a], idx[b]) = grounded(a, b);
  return full;
}

}  // namespace

Matrix<Rational> grounded_laplacian(const AnnularGraph& g) {
  const auto idx = non_sink_indices(g);
  return laplacian(g).select(idx, idx);
}

GreenData green_data(const AnnularGraph& g) {
  const auto idx = non_sink_indices(g);
  Matrix<Rational> G;
  try {
    G = inverse(grounded_laplacian(g));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Singular) throw Error(ErrorKind::SingularLaplacian, "grounded Laplacian is singular");
    throw;
  }
  // First-order perturbation of the inverse: d(X^{-1}) = -X^{-1} dX X^{-1}.
  const Matrix<Rational> dlap = laplacian_derivative(g).select(idx, idx);
  const Matrix<Rational> Gp = -(G * dlap * G);
  GreenData out{embed_grounded(G, g), embed_grounded(Gp, g)};
  for (std::size_t i = 0; i < out.Gp.dim(); ++i)
    for (std::size_t j = 0; j < out.Gp.dim(); ++j)
      if (out.Gp(i, j) != -out.Gp(j, i))
        throw Error(ErrorKind::NotAntisymmetric, "G' failed antisymmetry check");
  return out;
}

Matrix<TruncatedSeries> green_series(const AnnularGraph& g, int order) {
  const auto idx = non_sink_indices(g);
  const Matrix<TruncatedSeries> grounded = laplacian_series(g, order).select(idx, idx);
  try {
    return embed_grounded(inverse_series(grounded, order), g);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Singular) throw Error(ErrorKind::SingularLaplacian, "grounded Laplacian is singular");
    throw;
  }
}

Matrix<TruncatedSeries> response_series(const AnnularGraph& g, int order) {
  const Matrix<TruncatedSeries> lap = laplacian_series(g, order);
  std::vector<std::size_t> nodes, internal;
  for (int v = 1; v <= g.vertex_count(); ++v)
    (v <= g.node_count() ? nodes : internal).push_back(static_cast<std::size_t>(v - 1));
  Matrix<TruncatedSeries> schur = lap.select(nodes, nodes);
  if (!internal.empty()) {
    Matrix<TruncatedSeries> inv_ii;
    try {
      inv_ii = inverse_series(lap.select(internal, internal), order);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Singular)
        throw Error(ErrorKind::SingularInternalBlock, "internal block of the Laplacian is singular");
      throw;
    }
    schur = schur - lap.select(nodes, internal) * inv_ii * lap.select(internal, nodes);
  }
  return -schur;
}

ResponseData response_data(const AnnularGraph& g) {
  const auto coeffs = coefficient_matrices(response_series(g, 1), 1);
  return ResponseData{coeffs[0], coeffs[1]};
}

AnnularGraph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_magic = false, have_header = false;
  int V = 0, n = 0;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (!have_magic) {
      std::string version;
      if (word != "annular-graph" || !(ls >> version) || version != "v1") fail("expected 'annular-graph v1'");
      have_magic = true;
    } else if (!have_header) {
      std::string nodes_kw;
      if (word != "vertices" || !(ls >> V >> nodes_kw >> n) || nodes_kw != "nodes")
        fail("expected 'vertices <V> nodes <n>'");
      have_header = true;
    } else {
      if (word != "edge") fail("expected 'edge <u> <v> <p>/<q> <zip>'");
      Edge e;
      std::string w;
      if (!(ls >> e.u >> e.v >> w >> e.zip)) fail("malformed edge");
      e.weight = Rational::parse(w);
      edges.push_back(e);
    }
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
  }
  if (!have_header) throw Error(ErrorKind::Parse, "missing header");
  return AnnularGraph(V, n, std::move(edges));
}

AnnularGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open graph file '" + path + "'");
  return parse_graph(in);
}

std::string format_graph(const AnnularGraph& g) {
  std::ostringstream os;
  os << "annular-graph v1\n";
  os << "vertices " << g.vertex_count() << " nodes " << g.node_count() << "\n";
  for (const Edge& e : g.edges()) {
    os << "edge " << e.u << ' ' << e.v << ' ' << e.weight.numerator_str() << '/' << e.weight.denominator_str()
       << ' ' << e.zip << "\n";
  }
  return os.str();
}

// The zipper crosses the outer-cycle edge joining node n-1 and node 1 once.
// Its orientation is pinned by the brute-force grove count on fixture A.
AnnularGraph fixture_a() {
  return AnnularGraph(4, 4,
                      {{1, 2, Rational(1), 0},
                       {2, 3, Rational(1), 0},
                       {3, 1, Rational(1), -1},
                       {1, 4, Rational(1), 0},
                       {2, 4, Rational(1), 0}});
}

AnnularGraph fixture_b() {
  std::vector<Edge> edges;
  for (int i = 1; i <= 6; ++i) edges.push_back({i, i % 6 + 1, Rational(1), i == 6 ? -1 : 0});
  for (int i = 1; i <= 6; ++i) edges.push_back({i, 7, Rational(1), 0});
  return AnnularGraph(7, 7, std::move(edges));
}

AnnularGraph fixture_c() {
  std::vector<Edge> edges;
  const Rational rim[] = {Rational(1), Rational(2), Rational(1, 2), Rational(3), Rational(1), Rational(2, 3)};
  const Rational spoke[] = {Rational(1), Rational(3, 2), Rational(2), Rational(1), Rational(1, 3), Rational(1)};
  for (int i = 1; i <= 6; ++i) edges.push_back({i, i % 6 + 1, rim[i - 1], 0});
  for (int i = 1; i <= 6; ++i) edges.push_back({i, 7, spoke[i - 1], 0});
  return AnnularGraph(7, 6, std::move(edges));
}

AnnularGraph graph_by_name_or_path(const std::string& name_or_path) {
  if (name_or_path == "FIX-A") return fixture_a();
  if (name_or_path == "FIX-B") return fixture_b();
  if (name_or_path == "FIX-C") return fixture_c();
  return load_graph(name_or_path);
}

}  // namespace groves
