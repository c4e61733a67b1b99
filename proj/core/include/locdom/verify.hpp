#ifndef LOCDOM_VERIFY_HPP
#define LOCDOM_VERIFY_HPP

// Named verification suites. Every suite checks one cataloged statement
// against generated corpora using the exact solvers and predicate oracles,
// and reports one record per instance. Reports are byte-stable for a fixed
// seed.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locdom/invariants.hpp"

namespace locdom {

struct VerifyParams {
  uint64_t seed = 1;
  std::optional<int> r;
  std::optional<int> n;
  std::optional<int> count;
  std::optional<int> q;
  std::optional<int> s;
  std::optional<int> k;
  std::optional<int> seed_vertex;
  bool all_seeds = false;
  // Restricts the built-in corpora: "exhaustive", "random", or "both"
  // (default). Ignored when a corpus is supplied directly.
  std::optional<std::string> corpus;
  // Replaces the built-in corpora outright; each statement keeps only the
  // members meeting its preconditions.
  std::vector<Graph> supplied;
  SolverOptions solver;
};

struct InstanceRecord {
  std::string id;
  bool pass = false;
  long long slack = 0;  // bound minus attained value, when meaningful
  std::map<std::string, long long> values;
  std::map<std::string, std::string> sets;  // witness sets, rendered
  std::string note;
};

struct VerificationReport {
  std::string statement_id;
  std::map<std::string, std::string> params;
  std::vector<InstanceRecord> instances;

  int pass_count() const;
  int fail_count() const;
  long long max_slack() const;
  bool all_pass() const { return fail_count() == 0; }
};

const std::vector<std::string>& statement_ids();

// Err::kUnknownStatement for ids outside the catalog.
VerificationReport run_statement(const std::string& id, const VerifyParams& params);

std::string render_json_lines(const VerificationReport& report);
std::string render_tsv(const VerificationReport& report);

// Corpus sweep: maxima of dim-Det and lambda-Det over a stream of graphs of
// one common order, plus the maximum lambda over its twin-free members
// (evidence only, never a global value). Err::kMixedOrders on mixed input.
struct CorpusExtremes {
  int order = 0;
  long long count = 0;
  long long max_dim_minus_det = -1;
  std::string argmax_dim_minus_det;
  long long max_lambda_minus_det = -1;
  std::string argmax_lambda_minus_det;
  long long max_lambda_twin_free = -1;
  std::string argmax_lambda_twin_free;
  long long twin_free_count = 0;
};
CorpusExtremes corpus_extremes(const std::vector<Graph>& graphs, const SolverOptions& opt = {});
std::string render_json(const CorpusExtremes& ce);
std::string render_tsv(const CorpusExtremes& ce);

// First twin-free connected graph (orders 4..max_n, canonical enumeration
// order) carrying a minimal locating-dominating set whose complement is not
// locating-dominating.
struct OreWitness {
  std::string graph6;
  VertexSet minimal_ld;
  VertexSet complement;
};
std::optional<OreWitness> find_ore_witness(int max_n, const SolverOptions& opt = {});

}  // namespace locdom

#endif
