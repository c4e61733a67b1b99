// Command line surface: compute invariants, generate family members, run
// verification suites, sweep corpora for extremes, and search for the
// minimal-LD complement witness.
//
// Exit codes: 0 ok, 2 malformed input, 3 violated precondition,
// 4 cap or time budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "locdom/automorphism.hpp"
#include "locdom/corpus.hpp"
#include "locdom/errors.hpp"
#include "locdom/families.hpp"
#include "locdom/graph_io.hpp"
#include "locdom/greedy.hpp"
#include "locdom/matching.hpp"
#include "locdom/trees.hpp"
#include "locdom/twins.hpp"
#include "locdom/verify.hpp"

namespace {

using namespace locdom;

Graph load_graph(const std::string& path) {
  if (path.empty() || path == "-") return read_graph_auto(std::cin);
  std::ifstream in(path);
  if (!in) fail(Err::kParse, "cannot open " + path);
  return read_graph_auto(in);
}

std::string witness_json(const Graph& g, const VertexSet& s) {
  std::ostringstream out;
  out << "[";
  bool sep = false;
  for (int v : s) {
    if (sep) out << ",";
    out << v;
    sep = true;
  }
  out << "]";
  if (!g.has_labels()) return out.str();
  out << ",\"witness_labels\":[";
  sep = false;
  for (int v : s) {
    if (sep) out << ",";
    out << "\"" << g.label(v) << "\"";
    sep = true;
  }
  out << "]";
  return out.str();
}

const char* method_name(Method m) {
  switch (m) {
    case Method::kSubsetSearch: return "subset-search";
    case Method::kFormula: return "formula";
    case Method::kConstruction: return "construction";
  }
  return "?";
}

int run_compute(const std::string& invariant, const std::string& file, int k,
                const std::string& format, const SolverOptions& opt) {
  Graph g = load_graph(file);
  InvariantResult res;
  if (invariant == "dim")
    res = metric_dimension(g, opt);
  else if (invariant == "det")
    res = determining_number(g, opt);
  else if (invariant == "lambda")
    res = location_domination_number(g, opt);
  else if (invariant == "gamma")
    res = domination_number(g, opt);
  else if (invariant == "gamma-k")
    res = k_domination_number(g, k, opt);
  else if (invariant == "Gamma")
    res = upper_domination_number(g, opt);
  else if (invariant == "alpha")
    res = independence_number(g, opt);
  else if (invariant == "omega")
    res = clique_number(g, opt);
  else if (invariant == "chi")
    res = chromatic_number(g, opt);
  else if (invariant == "alpha-prime") {
    Matching m = maximum_matching(g);
    if (format == "tsv") {
      std::cout << "invariant\tvalue\tedges\nalpha-prime\t" << m.edges.size() << "\t";
      bool sep = false;
      for (const auto& [u, v] : m.edges) {
        std::cout << (sep ? " " : "") << u << "-" << v;
        sep = true;
      }
      std::cout << "\n";
    } else {
      std::cout << "{\"invariant\":\"alpha-prime\",\"n\":" << g.order()
                << ",\"value\":" << m.edges.size() << ",\"edges\":[";
      bool sep = false;
      for (const auto& [u, v] : m.edges) {
        std::cout << (sep ? "," : "") << "[" << u << "," << v << "]";
        sep = true;
      }
      std::cout << "],\"method\":\"construction\"}\n";
    }
    return 0;
  } else {
    fail(Err::kBadParams, "unknown invariant: " + invariant);
  }

  if (format == "tsv") {
    std::cout << "invariant\tvalue\twitness\tmethod\n"
              << invariant << "\t" << res.value << "\t" << res.witness.to_string() << "\t"
              << method_name(res.method) << "\n";
  } else {
    std::cout << "{\"invariant\":\"" << invariant << "\",\"n\":" << g.order()
              << ",\"value\":" << res.value << ",\"witness\":" << witness_json(g, res.witness)
              << ",\"method\":\"" << method_name(res.method) << "\"";
    if (!res.coloring.empty()) {
      std::cout << ",\"coloring\":[";
      for (size_t i = 0; i < res.coloring.size(); ++i)
        std::cout << (i ? "," : "") << res.coloring[i];
      std::cout << "]";
    }
    std::cout << "}\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"locdom: exact solvers and constructions for graph resolvability and "
               "location-domination"};
  app.require_subcommand(1);

  std::string format = "json";
  uint64_t seed = 1;
  int cap = 0;
  long long budget_ms = 0;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--seed", seed, "Corpus RNG seed");
  app.add_option("--cap", cap, "Exact-solver order cap override");
  app.add_option("--time-budget-ms", budget_ms, "Per-solver time budget in milliseconds");

  auto solver_options = [&]() {
    SolverOptions opt;
    if (cap > 0) opt.cap = cap;
    if (budget_ms > 0) opt.time_budget = std::chrono::milliseconds(budget_ms);
    return opt;
  };

  // compute
  auto* compute = app.add_subcommand("compute", "Compute one invariant of one graph");
  std::string invariant, graph_file;
  int k_param = 2;
  compute
      ->add_option("invariant", invariant,
                   "dim|det|lambda|gamma|gamma-k|Gamma|alpha|omega|chi|alpha-prime")
      ->required();
  compute->add_option("graph", graph_file, "Graph file (graph6 or edge list); '-' for stdin");
  compute->add_option("--k", k_param, "k for gamma-k");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  std::string statement;
  VerifyParams vp;
  int opt_r = 0, opt_n = 0, opt_count = 0, opt_q = 0, opt_s = -1, opt_k = 0, opt_u0 = -1;
  bool all_seeds = false;
  bool list_statements = false;
  verify->add_option("statement", statement, "Statement id (see --list)");
  verify->add_flag("--list", list_statements, "List available statement ids");
  verify->add_option("--r", opt_r, "Family parameter r");
  verify->add_option("--n", opt_n, "Order parameter");
  verify->add_option("--count", opt_count, "Random corpus size");
  verify->add_option("--q", opt_q, "Family parameter q");
  verify->add_option("--s", opt_s, "Family parameter s");
  verify->add_option("--k", opt_k, "Common-neighbor bound k");
  verify->add_option("--seed-vertex", opt_u0, "Greedy partition seed vertex");
  verify->add_flag("--all-seeds", all_seeds, "Sweep every seed vertex in greedy suites");
  std::string corpus_selector, verify_corpus_file;
  verify->add_option("--corpus", corpus_selector,
                     "Restrict built-in corpora: exhaustive|random|both");
  verify->add_option("--corpus-file", verify_corpus_file,
                     "Replace the built-in corpora with a graph6 stream");

  // families
  auto* families = app.add_subcommand("families", "Family generators");
  auto* families_gen = families->add_subcommand("gen", "Generate one family member");
  std::string family_name, emit_format = "graph6";
  std::vector<int> family_params;
  families_gen->add_option("name", family_name, "path|cycle|complete|star|wheel|T_r|G_r|H_r|T_qs")
      ->required();
  families_gen->add_option("params", family_params, "Family parameters");
  families_gen->add_option("--emit", emit_format, "Output format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  // corpus-extremes
  auto* extremes =
      app.add_subcommand("corpus-extremes", "Maxima of the gap functions over a corpus");
  std::string corpus_file;
  extremes->add_option("corpus", corpus_file,
                       "graph6 stream (one record per line); '-' for stdin");

  // find-ore-witness
  auto* ore = app.add_subcommand(
      "find-ore-witness", "Search for a minimal locating-dominating set whose complement fails");
  int max_n = 6;
  ore->add_option("--max-n", max_n, "Largest order to search");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed())
      return run_compute(invariant, graph_file, k_param, format, solver_options());

    if (verify->parsed()) {
      if (list_statements) {
        for (const auto& id : statement_ids()) std::cout << id << "\n";
        return 0;
      }
      if (statement.empty()) fail(Err::kUnknownStatement, "no statement id given");
      vp.seed = seed;
      if (opt_r > 0) vp.r = opt_r;
      if (opt_n > 0) vp.n = opt_n;
      if (opt_count > 0) vp.count = opt_count;
      if (opt_q > 0) vp.q = opt_q;
      if (opt_s >= 0) vp.s = opt_s;
      if (opt_k > 0) vp.k = opt_k;
      if (opt_u0 >= 0) vp.seed_vertex = opt_u0;
      vp.all_seeds = all_seeds;
      if (!corpus_selector.empty()) vp.corpus = corpus_selector;
      if (!verify_corpus_file.empty()) {
        std::ifstream in(verify_corpus_file);
        if (!in) fail(Err::kParse, "cannot open " + verify_corpus_file);
        vp.supplied = parse_graph6_stream(in);
      }
      vp.solver = solver_options();
      VerificationReport rep = run_statement(statement, vp);
      std::cout << (format == "tsv" ? render_tsv(rep) : render_json_lines(rep));
      return rep.all_pass() ? 0 : 1;
    }

    if (families_gen->parsed()) {
      FamilySpec spec{family_from_string(family_name), family_params};
      Graph g = gen(spec);
      std::cout << (emit_format == "edgelist" ? emit_edge_list(g) : emit_graph6(g) + "\n");
      return 0;
    }

    if (extremes->parsed()) {
      std::vector<Graph> graphs;
      if (corpus_file.empty() || corpus_file == "-") {
        graphs = parse_graph6_stream(std::cin);
      } else {
        std::ifstream in(corpus_file);
        if (!in) fail(Err::kParse, "cannot open " + corpus_file);
        graphs = parse_graph6_stream(in);
      }
      CorpusExtremes ce = corpus_extremes(graphs, solver_options());
      std::cout << (format == "tsv" ? render_tsv(ce) : render_json(ce));
      return 0;
    }

    if (ore->parsed()) {
      auto witness = find_ore_witness(max_n, solver_options());
      if (!witness) {
        std::cout << (format == "tsv" ? "witness\tnone\n" : "{\"witness\":null}\n");
        return 0;
      }
      if (format == "tsv") {
        std::cout << "graph6\t" << witness->graph6 << "\nminimal_ld\t"
                  << witness->minimal_ld.to_string() << "\ncomplement\t"
                  << witness->complement.to_string() << "\n";
      } else {
        std::cout << "{\"graph6\":\"" << witness->graph6 << "\",\"minimal_ld\":\""
                  << witness->minimal_ld.to_string() << "\",\"complement\":\""
                  << witness->complement.to_string() << "\"}\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
