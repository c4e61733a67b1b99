#include "locdom/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "locdom/automorphism.hpp"
#include "locdom/corpus.hpp"
#include "locdom/errors.hpp"
#include "locdom/families.hpp"
#include "locdom/graph_io.hpp"
#include "locdom/greedy.hpp"
#include "locdom/matching.hpp"
#include "locdom/trees.hpp"
#include "locdom/twins.hpp"

namespace locdom {

int VerificationReport::pass_count() const {
  int c = 0;
  for (const auto& i : instances) c += i.pass ? 1 : 0;
  return c;
}

int VerificationReport::fail_count() const {
  return static_cast<int>(instances.size()) - pass_count();
}

long long VerificationReport::max_slack() const {
  long long m = 0;
  for (const auto& i : instances) m = std::max(m, i.slack);
  return m;
}

namespace {

using corpus::Rng;

constexpr double kPSchedule[3] = {0.2, 0.5, 0.8};

std::string p_tag(double p) { return p == 0.2 ? "p02" : (p == 0.5 ? "p05" : "p08"); }

std::string pad(int i, int width = 4) {
  std::string s = std::to_string(i);
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

// min t with 4^t >= n, i.e. the ceiling of (log2 n)/2.
long long half_log2_ceil(long long n) {
  long long t = 0, power = 1;
  while (power < n) {
    power *= 4;
    ++t;
  }
  return t;
}

struct CorpusItem {
  std::string id;
  Graph g;
};

struct Builder {
  VerificationReport rep;

  explicit Builder(std::string id) { rep.statement_id = std::move(id); }

  void param(const std::string& key, const std::string& value) { rep.params[key] = value; }
  void param(const std::string& key, long long value) { rep.params[key] = std::to_string(value); }

  InstanceRecord& add(const std::string& id) {
    rep.instances.push_back(InstanceRecord{id, true, 0, {}, {}, ""});
    return rep.instances.back();
  }

  VerificationReport finish() {
    std::stable_sort(rep.instances.begin(), rep.instances.end(),
                     [](const InstanceRecord& a, const InstanceRecord& b) { return a.id < b.id; });
    return std::move(rep);
  }
};

// Records an inequality lhs <= rhs and keeps the weaker-side slack.
void check_le(InstanceRecord& rec, const std::string& name, long long lhs, long long rhs) {
  rec.values[name + ".lhs"] = lhs;
  rec.values[name + ".rhs"] = rhs;
  if (lhs > rhs) rec.pass = false;
  rec.slack = std::max(rec.slack, rhs - lhs);
}

void check_eq(InstanceRecord& rec, const std::string& name, long long got, long long want) {
  rec.values[name + ".got"] = got;
  rec.values[name + ".want"] = want;
  if (got != want) rec.pass = false;
}

void check_true(InstanceRecord& rec, const std::string& name, bool ok) {
  rec.values[name] = ok ? 1 : 0;
  if (!ok) rec.pass = false;
}

// -- corpora -------------------------------------------------------------------

std::vector<CorpusItem> exhaustive_connected(int lo, int hi) {
  std::vector<CorpusItem> out;
  for (int n = lo; n <= hi; ++n)
    for (const Graph& g : corpus::all_connected_graphs(n)) out.push_back({emit_graph6(g), g});
  return out;
}

std::vector<CorpusItem> exhaustive_all(int lo, int hi) {
  std::vector<CorpusItem> out;
  for (int n = lo; n <= hi; ++n)
    for (const Graph& g : corpus::all_graphs(n)) out.push_back({emit_graph6(g), g});
  return out;
}

template <class Pred>
std::vector<CorpusItem> filtered(std::vector<CorpusItem> items, Pred&& keep) {
  std::vector<CorpusItem> out;
  for (auto& item : items)
    if (keep(item.g)) out.push_back(std::move(item));
  return out;
}

std::vector<CorpusItem> random_connected_twin_free_corpus(uint64_t seed, int count, int n_lo,
                                                          int n_hi) {
  Rng rng(seed);
  std::vector<CorpusItem> out;
  for (int i = 0; i < count; ++i) {
    int n = n_lo + (n_hi > n_lo ? i % (n_hi - n_lo + 1) : 0);
    double p = kPSchedule[i % 3];
    auto g = corpus::random_connected_twin_free(rng, n, p);
    if (!g) g = corpus::random_connected_twin_free(rng, n, 0.5);
    if (!g) fail(Err::kBadParams, "random corpus generation stalled");
    out.push_back({"rnd" + pad(i) + "-n" + std::to_string(n) + "-" + p_tag(p), *g});
  }
  return out;
}

// Random graphs enriched with duplicated vertices so twin machinery has
// real classes to chew on.
std::vector<CorpusItem> random_twinned_corpus(uint64_t seed, int count, int base_lo, int base_hi,
                                              int clones, bool connected_only) {
  Rng rng(seed);
  std::vector<CorpusItem> out;
  int made = 0, attempts = 0;
  while (made < count && attempts < count * 200) {
    ++attempts;
    int base_n = base_lo + rng.below(base_hi - base_lo + 1);
    double p = kPSchedule[rng.below(3)];
    Graph g = corpus::random_graph(rng, base_n, p);
    for (int c = 0; c < clones; ++c) {
      int n = g.order();
      int v = rng.below(n);
      bool closed = rng.coin(0.5);
      std::vector<Edge> edges = g.edges();
      for (int u : g.neighbors(v)) edges.emplace_back(u, n);
      if (closed) edges.emplace_back(v, n);
      g = Graph(n + 1, edges);
    }
    if (connected_only && !is_connected(g)) continue;
    out.push_back({"twn" + pad(made) + "-n" + std::to_string(g.order()) + "-" + p_tag(p), g});
    ++made;
  }
  if (made < count) fail(Err::kBadParams, "twinned corpus generation stalled");
  return out;
}

std::vector<CorpusItem> random_tree_corpus(uint64_t seed, int count, int n_lo, int n_hi) {
  Rng rng(seed);
  std::vector<CorpusItem> out;
  for (int i = 0; i < count; ++i) {
    int n = n_lo + (n_hi > n_lo ? i % (n_hi - n_lo + 1) : 0);
    Graph t = corpus::random_tree(rng, n);
    out.push_back({"tree" + pad(i) + "-n" + std::to_string(n), t});
  }
  return out;
}

std::vector<CorpusItem> random_k2k_free_corpus(uint64_t seed, int count, int n_lo, int n_hi,
                                               int k) {
  Rng rng(seed);
  std::vector<CorpusItem> out;
  for (int i = 0; i < count; ++i) {
    int n = n_lo + (n_hi > n_lo ? i % (n_hi - n_lo + 1) : 0);
    auto g = corpus::random_twin_free_k2k_free(rng, n, k, 2 * n);
    if (!g) fail(Err::kBadParams, "k2k-free corpus generation stalled");
    out.push_back({"c4f" + pad(i) + "-n" + std::to_string(n), *g});
  }
  return out;
}

std::vector<CorpusItem> random_graph_corpus(uint64_t seed, int count, int n_lo, int n_hi,
                                            bool connected_only) {
  Rng rng(seed);
  std::vector<CorpusItem> out;
  int made = 0, attempts = 0;
  while (made < count && attempts < count * 500) {
    ++attempts;
    int n = n_lo + (n_hi > n_lo ? made % (n_hi - n_lo + 1) : 0);
    double p = kPSchedule[made % 3];
    Graph g = corpus::random_graph(rng, n, p);
    if (connected_only && !is_connected(g)) continue;
    out.push_back({"rnd" + pad(made) + "-n" + std::to_string(n) + "-" + p_tag(p), g});
    ++made;
  }
  if (made < count) fail(Err::kBadParams, "random corpus generation stalled");
  return out;
}

bool want_exhaustive(const VerifyParams& vp) {
  return !vp.corpus || *vp.corpus == "both" || vp.corpus->find("random") == std::string::npos;
}

bool want_random(const VerifyParams& vp) {
  return !vp.corpus || *vp.corpus == "both" || vp.corpus->find("random") != std::string::npos;
}

// Statement corpora: a supplied corpus (filtered by the statement's
// preconditions) wins; otherwise the built-in exhaustive and random parts,
// subject to the corpus selector.
template <class Pred>
std::vector<CorpusItem> statement_corpus(const VerifyParams& vp, Pred&& pred,
                                         const std::function<std::vector<CorpusItem>()>& exhaustive,
                                         const std::function<std::vector<CorpusItem>()>& random_part) {
  if (!vp.supplied.empty()) {
    std::vector<CorpusItem> out;
    for (const Graph& g : vp.supplied)
      if (pred(g)) out.push_back({emit_graph6(g), g});
    return out;
  }
  std::vector<CorpusItem> items;
  if (want_exhaustive(vp) && exhaustive) items = filtered(exhaustive(), pred);
  if (want_random(vp) && random_part)
    for (auto& it : random_part()) items.push_back(std::move(it));
  return items;
}

// All minimal dominating sets, ascending as bitmasks. Word-sized orders only.
template <class F>
void for_each_minimal_dominating(const Graph& g, F&& f) {
  int n = g.order();
  std::vector<uint64_t> closed(n);
  for (int x = 0; x < n; ++x) closed[x] = g.neighbors(x).word0() | (1ULL << x);
  for (uint64_t s = 1; s < (1ULL << n); ++s) {
    bool dominating = true;
    uint64_t private_owner = 0;
    for (int x = 0; x < n && dominating; ++x) {
      uint64_t w = closed[x] & s;
      if (!w)
        dominating = false;
      else if (std::popcount(w) == 1)
        private_owner |= w;
    }
    if (dominating && private_owner == s) f(VertexSet::from_word(n, s));
  }
}

// -- statements ----------------------------------------------------------------

VerificationReport stmt_lemma_2_1(const VerifyParams& vp) {
  Builder b("lemma-2.1");
  int r = vp.r.value_or(6);
  b.param("r", r);
  Graph gr = gen_gr(r), hr = gen_hr(r);

  auto& g_det = b.add("G_" + std::to_string(r) + ".det");
  check_eq(g_det, "det", determining_number(gr, vp.solver).value, 0);
  auto& h_det = b.add("H_" + std::to_string(r) + ".det");
  check_eq(h_det, "det", determining_number(hr, vp.solver).value, 1);

  auto& g_dim = b.add("Gbar_" + std::to_string(r) + ".dim");
  InvariantResult dim_gbar = metric_dimension(complement(gr), vp.solver);
  check_eq(g_dim, "dim", dim_gbar.value, r);
  g_dim.sets["witness"] = dim_gbar.witness.to_string();
  auto& h_dim = b.add("Hbar_" + std::to_string(r) + ".dim");
  check_eq(h_dim, "dim", metric_dimension(complement(hr), vp.solver).value, r + 1);

  auto& g_l = b.add("G_" + std::to_string(r) + ".lambda");
  InvariantResult lam_g = location_domination_number(gr, vp.solver);
  check_eq(g_l, "lambda", lam_g.value, r + 1);
  g_l.sets["witness"] = lam_g.witness.to_string();
  auto& h_l = b.add("H_" + std::to_string(r) + ".lambda");
  check_eq(h_l, "lambda", location_domination_number(hr, vp.solver).value, r + 2);
  return b.finish();
}

VerificationReport stmt_thm_2_2(const VerifyParams& vp) {
  Builder b("thm-2.2");
  int n = vp.n.value_or(14);
  b.param("n", n);
  Graph w = dim_det_gap_witness(n);
  Graph wc = complement(w);  // the uncomplemented family member

  auto& dim_side = b.add("n" + std::to_string(n) + ".dim-det");
  check_eq(dim_side, "order", w.order(), n);
  long long dim = metric_dimension(w, vp.solver).value;
  long long det = determining_number(w, vp.solver).value;
  dim_side.values["dim"] = dim;
  dim_side.values["det"] = det;
  check_eq(dim_side, "gap", dim - det, n / 2 - 1);

  auto& lam_side = b.add("n" + std::to_string(n) + ".lambda-det");
  long long lam = location_domination_number(wc, vp.solver).value;
  long long det2 = determining_number(wc, vp.solver).value;
  lam_side.values["lambda"] = lam;
  lam_side.values["det"] = det2;
  check_eq(lam_side, "gap", lam - det2, n / 2);
  return b.finish();
}

VerificationReport stmt_lemma_3_1(const VerifyParams& vp) {
  Builder b("lemma-3.1");
  int count = vp.count.value_or(100);
  b.param("seed", static_cast<long long>(vp.seed));
  b.param("corpus", "all graphs n<=6 + " + std::to_string(count) + " twinned random");
  auto items = statement_corpus(
      vp, [](const Graph&) { return true; }, [] { return exhaustive_all(1, 6); },
      [&] { return random_twinned_corpus(vp.seed, count, 3, 8, 3, false); });

  Rng rep_rng(vp.seed ^ 0x5eedULL);
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    TwinDecomposition td = twin_decomposition(g);
    VertexSet all(g.order());
    int total = 0;
    bool disjoint = true;
    for (const auto& cls : td.classes) {
      if (all.intersects(cls)) disjoint = false;
      all |= cls;
      total += cls.count();
    }
    check_true(rec, "partition", disjoint && total == g.order() && all == VertexSet::full(g.order()));

    bool types_ok = true;
    for (size_t c = 0; c < td.classes.size(); ++c) {
      for (int u : td.classes[c])
        for (int v = td.classes[c].next(u); v >= 0; v = td.classes[c].next(v)) {
          bool inside = g.adjacent(u, v);
          if (td.class_type[c] == TwinType::kClique && !inside) types_ok = false;
          if (td.class_type[c] == TwinType::kIndependent && inside) types_ok = false;
          if (!are_twins(g, u, v)) types_ok = false;
        }
    }
    check_true(rec, "class-types", types_ok);

    // Cross-class adjacency must be all-or-nothing, which is exactly what
    // makes the quotient independent of the representatives.
    bool total_adjacency = true;
    for (size_t a = 0; a < td.classes.size() && total_adjacency; ++a)
      for (size_t c = a + 1; c < td.classes.size() && total_adjacency; ++c) {
        int seen = 0, pairs = 0;
        for (int u : td.classes[a])
          for (int v : td.classes[c]) {
            ++pairs;
            seen += g.adjacent(u, v) ? 1 : 0;
          }
        if (seen != 0 && seen != pairs) total_adjacency = false;
        bool star_edge = td.star.adjacent(static_cast<int>(a), static_cast<int>(c));
        if (star_edge != (seen == pairs && pairs > 0)) total_adjacency = false;
      }
    check_true(rec, "representative-independent", total_adjacency);

    // Direct spot check: rebuild the quotient from random representatives.
    bool rebuilds = true;
    for (int trial = 0; trial < 100 && rebuilds; ++trial) {
      std::vector<int> rep;
      rep.reserve(td.classes.size());
      for (const auto& cls : td.classes) {
        auto members = cls.to_vector();
        rep.push_back(members[rep_rng.below(static_cast<int>(members.size()))]);
      }
      for (size_t a = 0; a < rep.size() && rebuilds; ++a)
        for (size_t c = a + 1; c < rep.size(); ++c)
          if (g.adjacent(rep[a], rep[c]) != td.star.adjacent(static_cast<int>(a), static_cast<int>(c))) {
            rebuilds = false;
            break;
          }
    }
    check_true(rec, "random-representatives", rebuilds);
  }
  return b.finish();
}

VerificationReport stmt_lemma_3_2(const VerifyParams& vp) {
  Builder b("lemma-3.2");
  int count = vp.count.value_or(100);
  b.param("seed", static_cast<long long>(vp.seed));
  auto items = statement_corpus(
      vp, [](const Graph&) { return true; }, [] { return exhaustive_all(1, 6); },
      [&] { return random_twinned_corpus(vp.seed, count, 3, 8, 3, false); });
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    TwinDecomposition td = twin_decomposition(g);
    bool ok = true;
    for (size_t a = 0; a < td.classes.size(); ++a)
      for (size_t c = a + 1; c < td.classes.size(); ++c)
        if (td.class_type[a] == TwinType::kOne && td.class_type[c] == TwinType::kOne &&
            are_twins(td.star, static_cast<int>(a), static_cast<int>(c)))
          ok = false;
    check_true(rec, "singleton-classes-nontwin-in-quotient", ok);
    rec.values["r"] = td.order();
  }
  return b.finish();
}

VerificationReport stmt_lemma_3_3(const VerifyParams& vp) {
  Builder b("lemma-3.3");
  int count = vp.count.value_or(60);
  b.param("seed", static_cast<long long>(vp.seed));
  auto items = statement_corpus(
      vp, [](const Graph& g) { return g.order() <= kDeterminingCap; },
      [] { return exhaustive_connected(1, 6); },
      [&] { return random_twinned_corpus(vp.seed, count, 3, 7, 3, true); });
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    TwinDecomposition td = twin_decomposition(g);
    long long det = determining_number(g, vp.solver).value;
    rec.values["n"] = g.order();
    rec.values["r"] = td.order();
    check_le(rec, "n-minus-r<=det", g.order() - td.order(), det);
  }
  return b.finish();
}

VerificationReport stmt_lemma_3_4(const VerifyParams& vp) {
  Builder b("lemma-3.4");
  int count = vp.count.value_or(100);
  b.param("seed", static_cast<long long>(vp.seed));
  auto items = statement_corpus(
      vp, [](const Graph& g) { return is_connected(g); },
      [] { return exhaustive_connected(1, 7); },
      [&] { return random_twinned_corpus(vp.seed, count, 3, 8, 3, true); });
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    TwinDecomposition td = twin_decomposition(g);
    if (td.order() == 2 && td.star.adjacent(0, 1)) {
      rec.note = "quotient-is-K2";
      bool threw = false;
      try {
        build_tilde(g);
      } catch (const Error& e) {
        threw = e.kind() == Err::kStarIsK2;
      }
      check_true(rec, "K2-rejected", threw);
      continue;
    }
    TildeGraph tg = build_tilde(g);
    rec.values["n"] = g.order();
    rec.values["tilde_n"] = tg.graph.order();
    check_le(rec, "tilde_n<=n", tg.graph.order(), g.order());
    check_true(rec, "tilde-twin-free", is_twin_free(tg.graph));
    bool pendants_ok = true;
    for (int p : tg.pendants)
      if (tg.graph.degree(p) != 1) pendants_ok = false;
    check_true(rec, "pendants-degree-1", pendants_ok);
  }
  return b.finish();
}

VerificationReport stmt_lemma_3_5(const VerifyParams& vp) {
  Builder b("lemma-3.5");
  int count = vp.count.value_or(60);
  b.param("seed", static_cast<long long>(vp.seed));
  auto items = statement_corpus(
      vp, [](const Graph& g) { return g.order() >= 2 && g.order() <= 12 && is_connected(g); },
      [] { return exhaustive_connected(2, 7); },
      [&] { return random_twinned_corpus(vp.seed, count, 3, 7, 3, true); });
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    TwinDecomposition td = twin_decomposition(g);
    int n = g.order(), r = td.order();
    long long lambda_g = location_domination_number(g, vp.solver).value;
    long long det_g = determining_number(g, vp.solver).value;
    if (r == 2 && td.star.adjacent(0, 1)) {
      rec.note = "quotient-is-K2";
      check_le(rec, "lambda-det<=r-1", lambda_g - det_g, r - 1);
      continue;
    }
    TildeGraph tg = build_tilde(g);
    InvariantResult lam_tilde = location_domination_number(tg.graph, vp.solver);
    rec.values["lambda"] = lambda_g;
    rec.values["lambda_tilde"] = lam_tilde.value;
    check_le(rec, "lambda<=lambda_tilde+n-r", lambda_g, lam_tilde.value + n - r);
    VertexSet lifted = lift_ld_set(g, td, tg, lam_tilde.witness);
    rec.sets["lifted"] = lifted.to_string();
    check_true(rec, "lifted-is-ld", is_locating_dominating(g, lifted));
    check_le(rec, "lifted-size", lifted.count(), lam_tilde.value + n - r);
    check_le(rec, "lambda<=lifted-size", lambda_g, lifted.count());
  }
  return b.finish();
}

VerificationReport stmt_thm_3_6(const VerifyParams& vp) {
  Builder b("thm-3.6");
  int n = vp.n.value_or(6);
  b.param("n", n);
  long long max_gap = -1, max_tf_lambda = -1;
  std::string arg_gap, arg_tf;
  for (const Graph& g : corpus::all_connected_graphs(n)) {
    long long lam = location_domination_number(g, vp.solver).value;
    long long det = determining_number(g, vp.solver).value;
    if (lam - det > max_gap) {
      max_gap = lam - det;
      arg_gap = emit_graph6(g);
    }
    if (is_twin_free(g) && lam > max_tf_lambda) {
      max_tf_lambda = lam;
      arg_tf = emit_graph6(g);
    }
  }
  auto& rec = b.add("order-" + std::to_string(n));
  rec.sets["argmax_gap"] = arg_gap;
  rec.sets["argmax_twin_free_lambda"] = arg_tf;
  check_le(rec, "max(lambda-det)<=max_twin_free_lambda", max_gap, max_tf_lambda);
  return b.finish();
}

VerificationReport stmt_thm_4_1(const VerifyParams& vp) {
  Builder b("thm-4.1");
  int count = vp.count.value_or(100);
  b.param("seed", static_cast<long long>(vp.seed));
  auto items = statement_corpus(
      vp, [](const Graph& g) { return g.order() >= 2 && g.order() <= 18 && is_connected(g); },
      [] { return exhaustive_connected(2, 7); },
      [&] { return random_graph_corpus(vp.seed, count, 8, 14, true); });
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    long long sets = 0;
    bool complements_dominate = true;
    for_each_minimal_dominating(g, [&](const VertexSet& d) {
      ++sets;
      if (!is_dominating(g, VertexSet::full(g.order()).minus(d))) complements_dominate = false;
    });
    rec.values["minimal_dominating_sets"] = sets;
    check_true(rec, "complement-dominates", complements_dominate);
    long long gamma = domination_number(g, vp.solver).value;
    check_le(rec, "2*gamma<=n", 2 * gamma, g.order());
  }
  return b.finish();
}

VerificationReport stmt_thm_4_2(const VerifyParams& vp) {
  Builder b("thm-4.2");
  int count = vp.count.value_or(500);
  b.param("seed", static_cast<long long>(vp.seed));
  b.param("corpus", "connected twin-free: exhaustive n<=7 + " + std::to_string(count) +
                        " random n<=14");
  auto items = statement_corpus(
      vp,
      [](const Graph& g) { return g.order() <= 18 && is_connected(g) && is_twin_free(g); },
      [] { return exhaustive_connected(2, 7); },
      [&] { return random_connected_twin_free_corpus(vp.seed, count, 8, 14); });
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    long long sets = 0;
    bool all_ld = true;
    for_each_minimal_dominating(g, [&](const VertexSet& d) {
      ++sets;
      if (!is_locating_dominating(g, VertexSet::full(g.order()).minus(d))) all_ld = false;
    });
    rec.values["minimal_dominating_sets"] = sets;
    check_true(rec, "complement-is-ld", all_ld);
  }
  return b.finish();
}

std::vector<CorpusItem> corollary_corpus(const VerifyParams& vp, int max_random_n) {
  int count = vp.count.value_or(150);
  return statement_corpus(
      vp,
      [](const Graph& g) {
        return g.order() >= 2 && g.order() <= kUpperDominationCap && is_connected(g) &&
               is_twin_free(g);
      },
      [] { return exhaustive_connected(2, 7); },
      [&] { return random_connected_twin_free_corpus(vp.seed, count, 8, max_random_n); });
}

VerificationReport stmt_cor_4_3(const VerifyParams& vp) {
  Builder b("cor-4.3");
  b.param("seed", static_cast<long long>(vp.seed));
  for (const auto& [id, g] : corollary_corpus(vp, 14)) {
    auto& rec = b.add(id);
    int n = g.order();
    long long lam = location_domination_number(g, vp.solver).value;
    long long big_gamma = upper_domination_number(g, vp.solver).value;
    rec.values["lambda"] = lam;
    rec.values["Gamma"] = big_gamma;
    check_le(rec, "lambda<=n-Gamma", lam, n - big_gamma);
    Graph gc = complement(g);
    if (is_connected(gc)) {
      long long big_gamma_c = upper_domination_number(gc, vp.solver).value;
      rec.values["Gamma_complement"] = big_gamma_c;
      check_le(rec, "lambda<=n-Gamma_complement+1", lam, n - big_gamma_c + 1);
      long long lam_c = location_domination_number(gc, vp.solver).value;
      rec.values["lambda_complement"] = lam_c;
      check_le(rec, "|lambda-lambda_complement|<=1", std::abs(lam - lam_c), 1);
    } else {
      rec.note = "complement-disconnected: second bound skipped";
    }
  }
  return b.finish();
}

VerificationReport stmt_cor_4_4(const VerifyParams& vp) {
  Builder b("cor-4.4");
  b.param("seed", static_cast<long long>(vp.seed));
  for (const auto& [id, g] : corollary_corpus(vp, 14)) {
    auto& rec = b.add(id);
    int n = g.order();
    long long lam = location_domination_number(g, vp.solver).value;
    long long alpha = independence_number(g, vp.solver).value;
    rec.values["alpha"] = alpha;
    check_le(rec, "lambda<=n-alpha", lam, n - alpha);
    if (is_connected(complement(g))) {
      long long omega = clique_number(g, vp.solver).value;
      rec.values["omega"] = omega;
      check_le(rec, "lambda<=n-omega+1", lam, n - omega + 1);
    } else {
      rec.note = "complement-disconnected: second bound skipped";
    }
  }
  return b.finish();
}

VerificationReport stmt_cor_4_5(const VerifyParams& vp) {
  Builder b("cor-4.5");
  b.param("seed", static_cast<long long>(vp.seed));
  for (const auto& [id, g] : corollary_corpus(vp, 14)) {
    auto& rec = b.add(id);
    int n = g.order();
    long long lam = location_domination_number(g, vp.solver).value;
    long long chi = chromatic_number(g, vp.solver).value;
    long long chi_c = chromatic_number(complement(g), vp.solver).value;
    rec.values["chi"] = chi;
    rec.values["chi_complement"] = chi_c;
    check_le(rec, "lambda<=2n-2chi", lam, 2 * n - 2 * chi);
    check_le(rec, "lambda<=2n-2chi_complement+1", lam, 2 * n - (2 * chi_c - 1));
  }
  return b.finish();
}

VerificationReport stmt_cor_4_6(const VerifyParams& vp) {
  Builder b("cor-4.6");
  b.param("seed", static_cast<long long>(vp.seed));
  for (const auto& [id, g] : corollary_corpus(vp, 14)) {
    auto& rec = b.add(id);
    int n = g.order();
    long long t = half_log2_ceil(n);
    long long lam = location_domination_number(g, vp.solver).value;
    long long alpha = independence_number(g, vp.solver).value;
    long long omega = clique_number(g, vp.solver).value;
    check_le(rec, "ramsey-premise", t, std::max(alpha, omega));
    check_le(rec, "lambda<=n-ceil(log2n/2)+1", lam, n - t + 1);
  }
  return b.finish();
}

// Shared corpus for the greedy-partition statements.
std::vector<CorpusItem> greedy_corpus(const VerifyParams& vp, int default_count, int n_hi) {
  int count = vp.count.value_or(default_count);
  // A fixed order narrows the sweep to random graphs of exactly that order.
  int lo = vp.n.value_or(8), hi = vp.n.value_or(n_hi);
  return statement_corpus(
      vp, [](const Graph& g) { return is_twin_free(g); },
      [&] {
        return vp.n ? std::vector<CorpusItem>{} : exhaustive_all(1, 7);
      },
      [&] { return random_connected_twin_free_corpus(vp.seed, count, lo, hi); });
}

VerificationReport stmt_alg_1(const VerifyParams& vp) {
  Builder b("alg-1");
  b.param("seed", static_cast<long long>(vp.seed));
  b.param("all_seeds", vp.all_seeds ? "true" : "false");
  for (const auto& [id, g] : greedy_corpus(vp, 200, 24)) {
    int n = g.order();
    std::vector<int> seeds;
    if (vp.all_seeds)
      for (int v = 0; v < n; ++v) seeds.push_back(v);
    else
      seeds.push_back(std::min(vp.seed_vertex.value_or(0), n - 1));
    for (int u0 : seeds) {
      auto& rec = b.add(vp.all_seeds ? id + "-u" + std::to_string(u0) : id);
      GreedyTrace trace;
      GreedyPartition gp = run_algorithm1(g, u0, &trace);

      VertexSet all = gp.a | gp.b | gp.c;
      bool disjoint = !(gp.a.intersects(gp.b)) && !(gp.a.intersects(gp.c)) &&
                      !(gp.b.intersects(gp.c));
      check_true(rec, "partition", disjoint && all == VertexSet::full(n));

      // B and C must match their definitions on the final A.
      auto classes = classes_under(g, gp.a);
      VertexSet b_expect(n), c_expect(n);
      for (const auto& cls : classes) {
        if (gp.a.test(cls.first())) continue;
        if (cls.count() == 1)
          b_expect |= cls;
        else
          c_expect |= cls;
      }
      check_true(rec, "B-definition", gp.b == b_expect);
      check_true(rec, "C-definition", gp.c == c_expect);

      // Loop guard exhausted: no triple in C splits a surviving class.
      bool guard_left = false;
      std::vector<int> class_of(n, -1);
      for (size_t i = 0; i < classes.size(); ++i)
        for (int v : classes[i]) class_of[v] = static_cast<int>(i);
      for (int u : gp.c)
        for (int x : gp.c)
          for (int y = gp.c.next(x); y >= 0 && !guard_left; y = gp.c.next(y))
            if (u != x && u != y && class_of[x] == class_of[y] &&
                g.adjacent(u, x) != g.adjacent(u, y))
              guard_left = true;
      check_true(rec, "terminated", !guard_left);

      check_le(rec, "iterations<=n-1", static_cast<long long>(gp.a_order.size()) - 1, n - 1);

      bool monotone = true;
      for (size_t t = 0; t + 1 < trace.partitions.size(); ++t) {
        if (trace.partitions[t + 1].size() <= trace.partitions[t].size()) monotone = false;
        for (const VertexSet& fine : trace.partitions[t + 1]) {
          bool inside_one = false;
          for (const VertexSet& coarse : trace.partitions[t])
            if (coarse.contains_all(fine)) inside_one = true;
          if (!inside_one) monotone = false;
        }
      }
      check_true(rec, "strict-refinement", monotone);
    }
  }
  return b.finish();
}

VerificationReport stmt_lemma_5_2(const VerifyParams& vp) {
  Builder b("lemma-5.2");
  b.param("seed", static_cast<long long>(vp.seed));
  for (const auto& [id, g] : greedy_corpus(vp, 200, 24)) {
    auto& rec = b.add(id);
    GreedyPartition gp = run_algorithm1(g, std::min(vp.seed_vertex.value_or(0), g.order() - 1));
    auto unions = greedy_distinguishing_sets(gp);
    check_true(rec, "A+B", is_distinguishing(g, unions[0]));
    check_true(rec, "A+C", is_distinguishing(g, unions[1]));
    check_true(rec, "B+C", is_distinguishing(g, unions[2]));
    int smallest = std::min({unions[0].count(), unions[1].count(), unions[2].count()});
    check_le(rec, "smallest<=2n/3", smallest, 2 * g.order() / 3);
  }
  return b.finish();
}

VerificationReport stmt_lemma_5_5(const VerifyParams& vp) {
  Builder b("lemma-5.5");
  b.param("seed", static_cast<long long>(vp.seed));
  for (const auto& [id, g] : greedy_corpus(vp, 200, 24)) {
    auto& rec = b.add(id);
    GreedyPartition gp = run_algorithm1(g, std::min(vp.seed_vertex.value_or(0), g.order() - 1));
    auto dets = greedy_determining_sets(gp);
    check_true(rec, "A", is_determining(g, dets[0]));
    check_true(rec, "B+C", is_determining(g, dets[1]));
  }
  return b.finish();
}

VerificationReport stmt_thm_5_3(const VerifyParams& vp) {
  Builder b("thm-5.3");
  b.param("seed", static_cast<long long>(vp.seed));
  b.param("all_seeds", vp.all_seeds ? "true" : "false");
  for (const auto& [id, g] : greedy_corpus(vp, 200, 24)) {
    int n = g.order();
    if (n < 4) continue;  // stated for order >= 4
    auto& rec = b.add(id);
    std::vector<int> seeds;
    if (vp.all_seeds)
      for (int v = 0; v < n; ++v) seeds.push_back(v);
    else
      seeds.push_back(std::min(vp.seed_vertex.value_or(0), n - 1));
    int min_size = n + 1, max_size = -1;
    for (int u0 : seeds) {
      GreedyPartition gp = run_algorithm1(g, u0);
      VertexSet ld = greedy_ld_set(g, gp);
      if (u0 == seeds.front()) rec.sets["ld"] = ld.to_string();
      check_true(rec, "is-ld", is_locating_dominating(g, ld));
      min_size = std::min(min_size, ld.count());
      max_size = std::max(max_size, ld.count());
    }
    rec.values["min_size"] = min_size;
    check_le(rec, "size<=2n/3+1", max_size, 2 * n / 3 + 1);
  }
  return b.finish();
}

VerificationReport stmt_thm_5_6(const VerifyParams& vp) {
  Builder b("thm-5.6");
  b.param("seed", static_cast<long long>(vp.seed));
  b.param("all_seeds", vp.all_seeds ? "true" : "false");
  for (const auto& [id, g] : greedy_corpus(vp, 200, 24)) {
    int n = g.order();
    if (n < 4) continue;
    auto& rec = b.add(id);
    std::vector<int> seeds;
    if (vp.all_seeds)
      for (int v = 0; v < n; ++v) seeds.push_back(v);
    else
      seeds.push_back(std::min(vp.seed_vertex.value_or(0), n - 1));
    int min_size = n + 1, max_size = -1;
    for (int u0 : seeds) {
      GreedyPartition gp = run_algorithm1(g, u0);
      auto dets = greedy_determining_sets(gp);
      int smallest = std::min(dets[0].count(), dets[1].count());
      min_size = std::min(min_size, smallest);
      max_size = std::max(max_size, smallest);
    }
    rec.values["min_size"] = min_size;
    check_le(rec, "greedy-det<=n/2", max_size, n / 2);
    if (n <= kDeterminingCap) {
      long long det = determining_number(g, vp.solver).value;
      check_le(rec, "det<=n/2", det, n / 2);
      check_le(rec, "det<=greedy", det, min_size);
    }
  }
  return b.finish();
}

VerificationReport stmt_lemma_6_1(const VerifyParams& vp) {
  Builder b("lemma-6.1");
  int k = vp.k.value_or(2);
  b.param("k", k);
  b.param("seed", static_cast<long long>(vp.seed));
  int count = vp.count.value_or(100);
  auto items = statement_corpus(
      vp, [&](const Graph& g) { return !common_neighbor_excess(g, k); },
      [] { return exhaustive_connected(2, 7); },
      [&] { return random_k2k_free_corpus(vp.seed, count, 5, 14, k); });

  Rng rng(vp.seed ^ 0xd00dULL);
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    int n = g.order();
    std::vector<VertexSet> samples;
    if (n <= kSubsetSearchCap) samples.push_back(k_domination_number(g, k, vp.solver).witness);
    for (int t = 0; t < 10; ++t) {
      VertexSet d(n);
      for (int v = 0; v < n; ++v)
        if (rng.coin(0.4)) d.set(v);
      samples.push_back(d);
    }
    long long checked = 0;
    bool ok = true;
    for (const VertexSet& d : samples) {
      for (int x = 0; x < n && ok; ++x) {
        if (d.test(x) || (g.neighbors(x) & d).count() < k) continue;
        for (int y = 0; y < n && ok; ++y) {
          if (y == x || d.test(y)) continue;
          ++checked;
          bool distinguished = false;
          for (int u : d)
            if (distinguishes(g, u, x, y)) {
              distinguished = true;
              break;
            }
          if (!distinguished) ok = false;
        }
      }
    }
    rec.values["pairs_checked"] = checked;
    check_true(rec, "k-dominated-are-distinguished", ok);
  }
  return b.finish();
}

VerificationReport stmt_prop_6_2(const VerifyParams& vp) {
  Builder b("prop-6.2");
  int k = vp.k.value_or(2);
  b.param("k", k);
  b.param("seed", static_cast<long long>(vp.seed));
  int count = vp.count.value_or(60);
  auto items = statement_corpus(
      vp,
      [&](const Graph& g) {
        return g.order() >= 2 && g.order() <= kSubsetSearchCap && is_connected(g) &&
               !common_neighbor_excess(g, k);
      },
      [] { return exhaustive_connected(2, 7); },
      [&] { return random_k2k_free_corpus(vp.seed, count, 6, 14, k); });
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    int n = g.order();
    long long gamma = domination_number(g, vp.solver).value;
    long long lam = location_domination_number(g, vp.solver).value;
    InvariantResult gk = k_domination_number(g, k, vp.solver);
    rec.values["gamma"] = gamma;
    rec.values["lambda"] = lam;
    rec.values["gamma_k"] = gk.value;
    check_le(rec, "gamma<=lambda", gamma, lam);
    check_le(rec, "lambda<=gamma_k", lam, gk.value);
    check_true(rec, "k-dominating-witness-is-ld", is_locating_dominating(g, gk.witness));
    // Monotone in k.
    long long prev = gamma;
    for (int j = 2; j <= 3; ++j) {
      long long cur = k_domination_number(g, j, vp.solver).value;
      check_le(rec, "gamma_" + std::to_string(j - 1) + "<=gamma_" + std::to_string(j), prev, cur);
      prev = cur;
    }
    if (g.min_degree() >= k)
      check_le(rec, "(k+1)lambda<=k*n", (k + 1) * lam, static_cast<long long>(k) * n);
  }
  return b.finish();
}

VerificationReport stmt_lemma_6_3(const VerifyParams& vp) {
  Builder b("lemma-6.3");
  b.param("seed", static_cast<long long>(vp.seed));
  int count = vp.count.value_or(200);
  auto items = statement_corpus(
      vp, [](const Graph& g) { return g.order() >= 2; },
      [] { return exhaustive_connected(2, 7); },
      [&] { return random_graph_corpus(vp.seed, count, 8, 16, false); });
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    Matching m = maximum_matching(g);
    rec.values["matching"] = static_cast<long long>(m.edges.size());
    long long cases[4] = {0, 0, 0, 0};
    bool ok = true;
    for (const Edge& e : m.edges) {
      int c = edge_case(g, m, e);
      if (c < 1 || c > 3)
        ok = false;
      else
        ++cases[c];
    }
    rec.values["case1"] = cases[1];
    rec.values["case2"] = cases[2];
    rec.values["case3"] = cases[3];
    check_true(rec, "trichotomy", ok);
    check_true(rec, "unmatched-independent", [&] {
      for (int x : m.unmatched)
        if ((g.neighbors(x) & m.unmatched).count() > 0) return false;
      return true;
    }());
  }
  return b.finish();
}

VerificationReport stmt_lemma_6_4(const VerifyParams& vp) {
  Builder b("lemma-6.4");
  b.param("seed", static_cast<long long>(vp.seed));
  int count = vp.count.value_or(200);
  auto items = statement_corpus(
      vp, [](const Graph& g) { return is_twin_free(g); },
      [] { return exhaustive_all(1, 7); },
      [&] { return random_connected_twin_free_corpus(vp.seed, count, 8, 20); });
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    Matching m = maximum_matching(g);
    Matching fixed = eliminate_um(g, m);
    check_true(rec, "um-empty", um_set(g, fixed).empty());
    check_eq(rec, "cardinality", static_cast<long long>(fixed.edges.size()),
             static_cast<long long>(m.edges.size()));
    rec.values["um_before"] = um_set(g, m).count();
  }
  return b.finish();
}

VerificationReport stmt_prop_6_5(const VerifyParams& vp) {
  Builder b("prop-6.5");
  b.param("seed", static_cast<long long>(vp.seed));
  int count = vp.count.value_or(500);
  b.param("count", count);
  auto items = statement_corpus(
      vp,
      [](const Graph& g) {
        return g.order() >= 4 && is_connected(g) && is_twin_free(g) &&
               !common_neighbor_excess(g, 2);
      },
      [] { return exhaustive_connected(4, 7); },
      [&] { return random_k2k_free_corpus(vp.seed, count, 8, 24, 2); });
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    int n = g.order();
    MatchedPartition mp = v1_construction(g);
    rec.sets["v1"] = mp.v1.to_string();
    check_true(rec, "v1-is-ld", is_locating_dominating(g, mp.v1));
    check_eq(rec, "v1-size-is-matching-number", mp.v1.count(),
             static_cast<long long>(mp.matching.edges.size()));
    check_le(rec, "v1<=n/2", mp.v1.count(), n / 2);
    bool two_dom = true;
    for (int x : mp.matching.unmatched)
      if ((g.neighbors(x) & mp.v1).count() < 2) two_dom = false;
    check_true(rec, "unmatched-2-dominated", two_dom);
    if (n <= 12) {
      long long lam = location_domination_number(g, vp.solver).value;
      check_le(rec, "lambda<=v1", lam, mp.v1.count());
    }
  }
  return b.finish();
}

VerificationReport stmt_thm_6_6(const VerifyParams& vp) {
  Builder b("thm-6.6");
  b.param("seed", static_cast<long long>(vp.seed));
  // Equality end: the corona families are C4-free.
  for (int r : {6, 7}) {
    Graph gr = gen_gr(r);
    auto& rec = b.add("G_" + std::to_string(r));
    long long lam = location_domination_number(gr, vp.solver).value;
    long long det = determining_number(gr, vp.solver).value;
    check_eq(rec, "lambda-det", lam - det, gr.order() / 2);
    check_true(rec, "c4-free", !common_neighbor_excess(gr, 2));
  }
  // Upper-bound end on C4-free corpora within the solver caps.
  int count = vp.count.value_or(100);
  auto items = statement_corpus(
      vp,
      [](const Graph& g) {
        return g.order() >= 2 && g.order() <= kDeterminingCap && is_connected(g) &&
               is_twin_free(g) && !common_neighbor_excess(g, 2);
      },
      [] { return exhaustive_connected(2, 7); },
      [&] { return random_k2k_free_corpus(vp.seed, count, 8, 12, 2); });
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    long long lam = location_domination_number(g, vp.solver).value;
    long long det = determining_number(g, vp.solver).value;
    check_le(rec, "lambda-det<=n/2", lam - det, g.order() / 2);
  }
  return b.finish();
}

VerificationReport stmt_thm_6_7(const VerifyParams& vp) {
  Builder b("thm-6.7");
  int q = vp.q.value_or(7);
  b.param("q", q);
  std::vector<int> s_values;
  if (vp.s)
    s_values.push_back(*vp.s);
  else
    for (int s = 0; s < 7; ++s) s_values.push_back(s);
  for (int s : s_values) {
    auto& rec = b.add("T_" + std::to_string(q) + "_" + std::to_string(s));
    Graph t = gen_tqs(q, s);
    int n = t.order();
    check_eq(rec, "order", n, 7 * q + s);
    check_true(rec, "is-tree", is_tree(t));
    check_true(rec, "c4-free", !common_neighbor_excess(t, 2));
    check_true(rec, "twin-free", is_twin_free(t));
    long long dim = tree_metric_dimension(t).value;
    check_eq(rec, "dim", dim, s <= 3 ? 2 * q : 2 * q + 1);
    check_eq(rec, "dim-is-2n/7-floor", dim, 2 * n / 7);
    check_true(rec, "trivial-automorphisms", is_determining(t, VertexSet(n)));
  }
  return b.finish();
}

VerificationReport stmt_prop_7_1(const VerifyParams& vp) {
  Builder b("prop-7.1");
  b.param("seed", static_cast<long long>(vp.seed));
  int count = vp.count.value_or(200);
  auto items = statement_corpus(
      vp, [](const Graph& g) { return g.order() <= kSubsetSearchCap && is_tree(g); },
      [] {
        std::vector<CorpusItem> trees;
        for (int n = 1; n <= 10; ++n)
          for (const Graph& t : corpus::all_trees(n)) trees.push_back({emit_graph6(t), t});
        return trees;
      },
      [&] { return random_tree_corpus(vp.seed, count, 4, 14); });
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    InvariantResult formula = tree_metric_dimension(g);
    long long searched = metric_dimension(g, vp.solver).value;
    check_eq(rec, "formula-vs-search", formula.value, searched);
    check_true(rec, "witness-resolves", is_resolving(g, formula.witness));
  }
  return b.finish();
}

VerificationReport stmt_lemma_7_2(const VerifyParams& vp) {
  Builder b("lemma-7.2");
  b.param("seed", static_cast<long long>(vp.seed));
  int count = vp.count.value_or(500);
  b.param("count", count);
  auto items = statement_corpus(
      vp, [](const Graph& g) { return is_tree(g); },
      [] {
        std::vector<CorpusItem> trees;
        for (int n = 1; n <= 10; ++n)
          for (const Graph& t : corpus::all_trees(n)) trees.push_back({emit_graph6(t), t});
        return trees;
      },
      [&] { return random_tree_corpus(vp.seed, count, 4, 30); });
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    check_true(rec, "bound-holds", terprime_bound_check(g));
    long long worst = 0;
    for (const auto& info : analyze_tree(g).exterior_majors)
      worst = std::max(worst, static_cast<long long>(7 * info.ter_prime));
    rec.values["max_7terprime"] = worst;
  }
  return b.finish();
}

VerificationReport stmt_lemma_7_3(const VerifyParams& vp) {
  Builder b("lemma-7.3");
  b.param("seed", static_cast<long long>(vp.seed));
  int count = vp.count.value_or(300);
  b.param("count", count);
  auto items = statement_corpus(
      vp,
      [](const Graph& g) { return g.order() <= kDeterminingTreeCap && is_tree(g); },
      [] {
        std::vector<CorpusItem> trees;
        for (int n = 4; n <= 10; ++n)
          for (const Graph& t : corpus::all_trees(n)) trees.push_back({emit_graph6(t), t});
        return trees;
      },
      [&] { return random_tree_corpus(vp.seed, count, 4, 30); });
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    long long bound = tree_det_lower_bound(g);
    long long det = determining_number(g, vp.solver).value;
    rec.values["det"] = det;
    check_le(rec, "sum(ter-ter')<=det", bound, det);
  }
  return b.finish();
}

VerificationReport stmt_thm_7_4(const VerifyParams& vp) {
  Builder b("thm-7.4");
  b.param("seed", static_cast<long long>(vp.seed));
  for (int s : {0, 3, 5}) {
    auto& rec = b.add("witness-T_7_" + std::to_string(s));
    Graph t = gen_tqs(7, s);
    long long dim = tree_metric_dimension(t).value;
    bool det0 = is_determining(t, VertexSet(t.order()));
    check_true(rec, "det-zero", det0);
    check_eq(rec, "gap-attains-2n/7", dim, 2 * t.order() / 7);
  }
  int count = vp.count.value_or(200);
  auto items = statement_corpus(
      vp,
      [](const Graph& g) {
        return g.order() >= 2 && g.order() <= kDeterminingTreeCap && is_tree(g);
      },
      [] {
        std::vector<CorpusItem> trees;
        for (int n = 2; n <= 10; ++n)
          for (const Graph& t : corpus::all_trees(n)) trees.push_back({emit_graph6(t), t});
        return trees;
      },
      [&] { return random_tree_corpus(vp.seed, count, 4, 20); });
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    long long dim = tree_metric_dimension(g).value;
    long long det = determining_number(g, vp.solver).value;
    check_le(rec, "dim-det<=2n/7", dim - det, 2 * g.order() / 7);
  }
  return b.finish();
}

VerificationReport stmt_thm_7_5(const VerifyParams& vp) {
  Builder b("thm-7.5");
  b.param("seed", static_cast<long long>(vp.seed));
  for (int r : {6, 7}) {
    auto& rec = b.add("witness-G_" + std::to_string(r));
    Graph gr = gen_gr(r);
    long long lam = location_domination_number(gr, vp.solver).value;
    long long det = determining_number(gr, vp.solver).value;
    check_true(rec, "is-tree", is_tree(gr));
    check_eq(rec, "gap-attains-n/2", lam - det, gr.order() / 2);
  }
  int count = vp.count.value_or(200);
  auto items = statement_corpus(
      vp,
      [](const Graph& g) {
        return g.order() >= 2 && g.order() <= kSubsetSearchCap && is_tree(g);
      },
      [] {
        std::vector<CorpusItem> trees;
        for (int n = 2; n <= 10; ++n)
          for (const Graph& t : corpus::all_trees(n)) trees.push_back({emit_graph6(t), t});
        return trees;
      },
      [&] { return random_tree_corpus(vp.seed, count, 4, 14); });
  for (const auto& [id, g] : items) {
    auto& rec = b.add(id);
    long long lam = location_domination_number(g, vp.solver).value;
    long long det = determining_number(g, vp.solver).value;
    check_le(rec, "lambda-det<=n/2", lam - det, g.order() / 2);
  }
  return b.finish();
}

using StatementFn = VerificationReport (*)(const VerifyParams&);

const std::vector<std::pair<std::string, StatementFn>>& registry() {
  static const std::vector<std::pair<std::string, StatementFn>> table = {
      {"lemma-2.1", stmt_lemma_2_1}, {"thm-2.2", stmt_thm_2_2},
      {"lemma-3.1", stmt_lemma_3_1}, {"lemma-3.2", stmt_lemma_3_2},
      {"lemma-3.3", stmt_lemma_3_3}, {"lemma-3.4", stmt_lemma_3_4},
      {"lemma-3.5", stmt_lemma_3_5}, {"thm-3.6", stmt_thm_3_6},
      {"thm-4.1", stmt_thm_4_1},     {"thm-4.2", stmt_thm_4_2},
      {"cor-4.3", stmt_cor_4_3},     {"cor-4.4", stmt_cor_4_4},
      {"cor-4.5", stmt_cor_4_5},     {"cor-4.6", stmt_cor_4_6},
      {"alg-1", stmt_alg_1},         {"lemma-5.2", stmt_lemma_5_2},
      {"lemma-5.5", stmt_lemma_5_5}, {"thm-5.3", stmt_thm_5_3},
      {"thm-5.6", stmt_thm_5_6},     {"lemma-6.1", stmt_lemma_6_1},
      {"prop-6.2", stmt_prop_6_2},   {"lemma-6.3", stmt_lemma_6_3},
      {"lemma-6.4", stmt_lemma_6_4}, {"prop-6.5", stmt_prop_6_5},
      {"thm-6.6", stmt_thm_6_6},     {"thm-6.7", stmt_thm_6_7},
      {"prop-7.1", stmt_prop_7_1},   {"lemma-7.2", stmt_lemma_7_2},
      {"lemma-7.3", stmt_lemma_7_3}, {"thm-7.4", stmt_thm_7_4},
      {"thm-7.5", stmt_thm_7_5},
  };
  return table;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& statement_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : registry()) v.push_back(id);
    return v;
  }();
  return ids;
}

VerificationReport run_statement(const std::string& id, const VerifyParams& params) {
  for (const auto& [name, fn] : registry())
    if (name == id) {
      VerificationReport rep = fn(params);
      if (!params.supplied.empty())
        rep.params["corpus"] = "supplied:" + std::to_string(params.supplied.size());
      else if (params.corpus)
        rep.params["corpus_selector"] = *params.corpus;
      return rep;
    }
  fail(Err::kUnknownStatement, "unknown statement id: " + id);
}

std::string render_json_lines(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& rec : report.instances) {
    out << "{\"statement\":\"" << json_escape(report.statement_id) << "\",\"instance\":\""
        << json_escape(rec.id) << "\",\"pass\":" << (rec.pass ? "true" : "false");
    if (rec.slack) out << ",\"slack\":" << rec.slack;
    for (const auto& [k, v] : rec.values) out << ",\"" << json_escape(k) << "\":" << v;
    for (const auto& [k, v] : rec.sets)
      out << ",\"" << json_escape(k) << "\":\"" << json_escape(v) << "\"";
    if (!rec.note.empty()) out << ",\"note\":\"" << json_escape(rec.note) << "\"";
    out << "}\n";
  }
  out << "{\"statement\":\"" << json_escape(report.statement_id) << "\",\"summary\":{\"pass\":"
      << report.pass_count() << ",\"fail\":" << report.fail_count()
      << ",\"max_slack\":" << report.max_slack() << ",\"params\":{";
  bool sep = false;
  for (const auto& [k, v] : report.params) {
    if (sep) out << ",";
    out << "\"" << json_escape(k) << "\":\"" << json_escape(v) << "\"";
    sep = true;
  }
  out << "}}}\n";
  return out.str();
}

std::string render_tsv(const VerificationReport& report) {
  std::ostringstream out;
  out << "statement\tinstance\tpass\tslack\tdetail\n";
  for (const auto& rec : report.instances) {
    out << report.statement_id << "\t" << rec.id << "\t" << (rec.pass ? "pass" : "FAIL") << "\t"
        << rec.slack << "\t";
    bool sep = false;
    for (const auto& [k, v] : rec.values) {
      if (sep) out << " ";
      out << k << "=" << v;
      sep = true;
    }
    if (!rec.note.empty()) out << (sep ? " " : "") << "note=" << rec.note;
    out << "\n";
  }
  out << report.statement_id << "\tsummary\t" << (report.fail_count() == 0 ? "pass" : "FAIL")
      << "\t" << report.max_slack() << "\tpass=" << report.pass_count()
      << " fail=" << report.fail_count() << "\n";
  return out.str();
}

CorpusExtremes corpus_extremes(const std::vector<Graph>& graphs, const SolverOptions& opt) {
  CorpusExtremes ce;
  if (graphs.empty()) fail(Err::kBadParams, "corpus_extremes: empty corpus");
  ce.order = graphs[0].order();
  for (const Graph& g : graphs)
    if (g.order() != ce.order)
      fail(Err::kMixedOrders, "corpus_extremes: graphs of different orders supplied");
  for (const Graph& g : graphs) {
    ++ce.count;
    std::string id = emit_graph6(g);
    long long dim = metric_dimension(g, opt).value;
    long long lam = location_domination_number(g, opt).value;
    long long det = determining_number(g, opt).value;
    if (det > dim || dim > lam)
      throw std::logic_error("corpus_extremes: invariant chain violated for " + id);
    if (dim - det > ce.max_dim_minus_det) {
      ce.max_dim_minus_det = dim - det;
      ce.argmax_dim_minus_det = id;
    }
    if (lam - det > ce.max_lambda_minus_det) {
      ce.max_lambda_minus_det = lam - det;
      ce.argmax_lambda_minus_det = id;
    }
    if (is_twin_free(g)) {
      ++ce.twin_free_count;
      if (lam > ce.max_lambda_twin_free) {
        ce.max_lambda_twin_free = lam;
        ce.argmax_lambda_twin_free = id;
      }
    }
  }
  return ce;
}

std::string render_json(const CorpusExtremes& ce) {
  std::ostringstream out;
  out << "{\"order\":" << ce.order << ",\"count\":" << ce.count
      << ",\"max_dim_minus_det\":" << ce.max_dim_minus_det << ",\"argmax_dim_minus_det\":\""
      << json_escape(ce.argmax_dim_minus_det) << "\",\"max_lambda_minus_det\":"
      << ce.max_lambda_minus_det << ",\"argmax_lambda_minus_det\":\""
      << json_escape(ce.argmax_lambda_minus_det) << "\",\"twin_free_count\":"
      << ce.twin_free_count << ",\"max_lambda_twin_free\":" << ce.max_lambda_twin_free
      << ",\"argmax_lambda_twin_free\":\"" << json_escape(ce.argmax_lambda_twin_free)
      << "\",\"role\":\"corpus maxima only; conjecture evidence, not global values\"}\n";
  return out.str();
}

std::string render_tsv(const CorpusExtremes& ce) {
  std::ostringstream out;
  out << "metric\tvalue\targmax\n";
  out << "order\t" << ce.order << "\t\n";
  out << "count\t" << ce.count << "\t\n";
  out << "max_dim_minus_det\t" << ce.max_dim_minus_det << "\t" << ce.argmax_dim_minus_det << "\n";
  out << "max_lambda_minus_det\t" << ce.max_lambda_minus_det << "\t" << ce.argmax_lambda_minus_det
      << "\n";
  out << "twin_free_count\t" << ce.twin_free_count << "\t\n";
  out << "max_lambda_twin_free\t" << ce.max_lambda_twin_free << "\t" << ce.argmax_lambda_twin_free
      << "\n";
  return out.str();
}

std::optional<OreWitness> find_ore_witness(int max_n, const SolverOptions&) {
  if (max_n > 8) fail(Err::kCapExceeded, "find_ore_witness: max order 8");
  for (int n = 4; n <= max_n; ++n) {
    for (const Graph& g : corpus::all_connected_graphs(n)) {
      if (!is_twin_free(g)) continue;
      for (uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        VertexSet d = VertexSet::from_word(n, mask);
        if (!is_locating_dominating(g, d)) continue;
        bool minimal = true;
        for (int v : d) {
          VertexSet reduced = d;
          reduced.reset(v);
          if (is_locating_dominating(g, reduced)) {
            minimal = false;
            break;
          }
        }
        if (!minimal) continue;
        VertexSet rest = VertexSet::full(n).minus(d);
        if (!is_locating_dominating(g, rest)) return OreWitness{emit_graph6(g), d, rest};
      }
    }
  }
  return std::nullopt;
}

}  // namespace locdom
