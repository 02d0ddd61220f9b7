#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "groves/annular_graph.hpp"
#include "groves/dyck.hpp"
#include "groves/error.hpp"
#include "groves/formulas.hpp"
#include "groves/oracle.hpp"

namespace {

using namespace groves;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::BadPairing:
    case ErrorKind::InvalidPath:
    case ErrorKind::InvalidGraph:
    case ErrorKind::CrossingPairs:
    case ErrorKind::NodeNUnpaired:
    case ErrorKind::TooLarge:
      return true;
    default:
      return false;
  }
}

int run_encode(const std::string& pairing, int n) {
  std::cout << encode_pairing(PartialPairing::parse(pairing, n)).to_string() << "\n";
  return kOk;
}

int run_mus(const std::string& lambda_text) {
  const AugPath lambda = AugPath::parse(lambda_text);
  const DyckPath lower = core(lambda);
  for (const AugPath& mu : paths_above(lambda))
    std::cout << mu.to_string() << " " << count_ci_tilings(lower, core(mu)) << "\n";
  return kOk;
}

int run_tilings(const std::string& lower_text, const std::string& upper_text, bool list) {
  const DyckPath lower = DyckPath::parse(lower_text);
  const DyckPath upper = DyckPath::parse(upper_text);
  if (lower.order() != upper.order()) throw Error(ErrorKind::InvalidPath, "paths have different orders");
  const auto tilings = list_ci_tilings(lower, upper);
  std::cout << tilings.size() << "\n";
  if (list)
    for (std::size_t i = 0; i < tilings.size(); ++i)
      std::cout << "\n" << render_tiling(lower, upper, tilings[i]);
  return kOk;
}

Rational evaluate(const std::string& mode, const AnnularGraph& g, const PartialPairing& tau, bool terms) {
  if (mode == "oracle-bar") return ratio_bar(g, tau);
  if (mode == "oracle-dot") return ratio_dot(g, tau);
  const AugPath lambda = encode_pairing(tau);
  if (mode == "det-g") return det_formula(lambda, g, Mode::G);
  if (mode == "det-l") return det_formula(lambda, g, Mode::L);
  const RatioResult<Rational> r = theorem1_eval(lambda, g, mode == "pf-g" ? Mode::G : Mode::L);
  if (terms)
    for (const auto& t : r.terms)
      std::cout << t.mu.to_labeled_string() << " : " << t.coefficient << " x " << t.pfaffian << "\n";
  return r.value;
}

int run_eval(const std::string& graph, const std::string& pairing, std::optional<int> n, const std::string& mode,
             bool terms) {
  const AnnularGraph g = graph_by_name_or_path(graph);
  if (n && *n != g.node_count()) throw Error(ErrorKind::BadPairing, "--n disagrees with the graph's node count");
  const PartialPairing tau = PartialPairing::parse(pairing, g.node_count());
  std::cout << evaluate(mode, g, tau, terms) << "\n";
  return kOk;
}

int run_verify(const std::string& graph, int max_n) {
  const AnnularGraph g = graph_by_name_or_path(graph);
  if (g.node_count() > max_n) {
    std::cerr << "error: graph has " << g.node_count() << " nodes, above --max-n " << max_n << "\n";
    return kUsage;
  }
  GroveOracle oracle(g);
  const Jet<Rational> gjet = green_jet(green_data(g), g.node_count());
  const Jet<Rational> ljet = response_jet(response_data(g));
  int failures = 0, cases = 0;
  std::cout << "pairing lambda pf-g det-g oracle-bar pf-l det-l oracle-dot status\n";
  for (const PartialPairing& tau : annular_partial_pairings(g.node_count())) {
    const AugPath lambda = encode_pairing(tau);
    const Rational pg = theorem1_eval(lambda, gjet, Mode::G).value;
    const Rational dg = det_formula(lambda, g, Mode::G);
    const Rational og = oracle.ratio_bar(tau);
    const Rational pl = theorem1_eval(lambda, ljet, Mode::L).value;
    const Rational dl = det_formula(lambda, g, Mode::L);
    const Rational ol = oracle.ratio_dot(tau);
    const bool ok = pg == og && dg == og && pl == ol && dl == ol;
    ++cases;
    failures += !ok;
    std::cout << (tau.to_string().empty() ? "-" : tau.to_string()) << " " << lambda.to_string() << " " << pg << " "
              << dg << " " << og << " " << pl << " " << dl << " " << ol << " " << (ok ? "PASS" : "FAIL") << "\n";
  }
  std::cout << cases - failures << "/" << cases << " cases agree\n";
  return failures ? kCheckFailed : kOk;
}

int run_symbolic(const std::string& lambda_text, const std::string& mode) {
  const AugPath lambda = AugPath::parse(lambda_text);
  const CorollaryReport report = corollary_checks(lambda);
  if (mode == "g") {
    std::cout << report.g_polynomial << "\n";
    std::cout << "integer coefficients: " << (report.g_integral ? "yes" : "no") << "\n";
    std::cout << "coboundary invariant: " << (report.coboundary_invariant ? "yes" : "no") << "\n";
    return report.g_integral && report.coboundary_invariant ? kOk : kCheckFailed;
  }
  std::cout << report.l_polynomial << "\n";
  std::cout << "integer coefficients: " << (report.l_integral ? "yes" : "no") << "\n";
  return report.l_integral ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grove probabilities on annular graphs"};
  app.require_subcommand(1);

  auto* encode = app.add_subcommand("encode", "Encode a partial pairing as an augmented Dyck path");
  std::string pairing;
  int n = 0;
  encode->add_option("--pairing", pairing, "Pairing such as 1,3|2,4")->required();
  encode->add_option("--n", n, "Number of nodes")->required()->check(CLI::PositiveNumber);

  auto* mus = app.add_subcommand("mus", "List the paths above lambda with tiling coefficients");
  std::string lambda;
  mus->add_option("--lambda", lambda, "Augmented path such as UDFUIDO")->required();

  auto* tilings = app.add_subcommand("tilings", "Count cover-inclusive Dyck tilings");
  std::string lower, upper;
  bool list = false;
  tilings->add_option("--lower", lower, "Lower Dyck path")->required();
  tilings->add_option("--upper", upper, "Upper Dyck path")->required();
  tilings->add_flag("--list", list, "Draw every tiling");

  auto* eval = app.add_subcommand("eval", "Evaluate a grove ratio");
  std::string graph, mode;
  std::optional<int> eval_n;
  bool terms = false;
  eval->add_option("--graph", graph, "Graph file or FIX-A, FIX-B, FIX-C")->required();
  eval->add_option("--pairing", pairing, "Pairing such as 1,3|2,4")->required();
  eval->add_option("--n", eval_n, "Number of nodes (must match the graph)");
  eval->add_option("--mode", mode, "Evaluator")
      ->required()
      ->check(CLI::IsMember({"pf-g", "pf-l", "det-g", "det-l", "oracle-bar", "oracle-dot"}));
  eval->add_flag("--terms", terms, "Print the per-path breakdown (pf modes)");

  auto* verify = app.add_subcommand("verify", "Compare all evaluators on every annular partial pairing");
  int max_n = 8;
  verify->add_option("--graph", graph, "Graph file or FIX-A, FIX-B, FIX-C")->required();
  verify->add_option("--max-n", max_n, "Refuse graphs with more nodes than this")->check(CLI::PositiveNumber);

  auto* symbolic = app.add_subcommand("symbolic", "Symbolic Pfaffian polynomial and corollary checks");
  std::string sym_mode;
  symbolic->add_option("--lambda", lambda, "Augmented path such as DFUO")->required();
  symbolic->add_option("--mode", sym_mode, "g or l")->required()->check(CLI::IsMember({"g", "l"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*encode) return run_encode(pairing, n);
    if (*mus) return run_mus(lambda);
    if (*tilings) return run_tilings(lower, upper, list);
    if (*eval) return run_eval(graph, pairing, eval_n, mode, terms);
    if (*verify) return run_verify(graph, max_n);
    if (*symbolic) return run_symbolic(lambda, sym_mode);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.kind()) ? kUsage : kCheckFailed;
  }
  return kUsage;
}
