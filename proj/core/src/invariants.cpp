#include "locdom/invariants.hpp"

#include <algorithm>
#include <bit>

#include "locdom/errors.hpp"
#include "locdom/twins.hpp"
#include "solver_util.hpp"

namespace locdom {

namespace {

using detail::bit;
using detail::Deadline;

void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g)) fail(Err::kDisconnected, std::string(op) + " requires a connected graph");
}

int effective_cap(const Graph& g, const SolverOptions& opt, int fallback, const char* op) {
  int cap = opt.cap.value_or(fallback);
  if (g.order() > cap)
    fail(Err::kCapExceeded, std::string(op) + ": order " + std::to_string(g.order()) +
                                " exceeds cap " + std::to_string(cap));
  return cap;
}

// Subset-search skeleton for minimization problems on word-sized graphs.
// Scans cardinalities lo..hi; within a cardinality, candidates are
// forced_mask plus a colex-ordered choice from free_vertices. The first
// feasible set wins.
template <class Feasible>
std::optional<VertexSet> min_subset_search(int n, int lo, int hi, uint64_t forced_mask,
                                           const std::vector<int>& free_vertices, Deadline& dl,
                                           Feasible&& feasible) {
  int forced_count = std::popcount(forced_mask);
  int m = static_cast<int>(free_vertices.size());
  for (int k = std::max(lo, forced_count); k <= hi; ++k) {
    uint64_t found = 0;
    bool stop = detail::for_each_colex_subset(m, k - forced_count, [&](const std::vector<int>& pick) {
      dl.poll();
      uint64_t s = forced_mask;
      for (int i : pick) s |= bit(free_vertices[i]);
      if (feasible(s)) {
        found = s;
        return true;
      }
      return false;
    });
    if (stop) return detail::set_from_word(n, found);
  }
  return std::nullopt;
}

struct TwinSeed {
  uint64_t forced = 0;            // all but the least vertex of every twin class
  std::vector<int> free_vertices; // class representatives, ascending
  int lower_bound = 0;            // n - r
};

TwinSeed twin_seed(const Graph& g) {
  TwinSeed seed;
  TwinDecomposition td = twin_decomposition(g);
  for (int v : td.omega) seed.forced |= bit(v);
  for (int v = 0; v < g.order(); ++v)
    if (!td.omega.test(v)) seed.free_vertices.push_back(v);
  seed.lower_bound = td.omega.count();
  return seed;
}

std::vector<uint64_t> adjacency_words(const Graph& g) {
  std::vector<uint64_t> w(g.order());
  for (int v = 0; v < g.order(); ++v) w[v] = g.neighbors(v).word0();
  return w;
}

}  // namespace

// -- resolving ----------------------------------------------------------------

bool resolves(const DistanceMatrix& d, int u, int x, int y) {
  return d.at(u, x) != d.at(u, y);
}

bool resolves(const Graph& g, int u, int x, int y) {
  require_connected(g, "resolves");
  DistanceMatrix d = distances(g);
  return resolves(d, u, x, y);
}

bool is_resolving(const Graph& g, const VertexSet& s) {
  require_connected(g, "is_resolving");
  DistanceMatrix d = distances(g);
  int n = g.order();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool hit = false;
      for (int u : s)
        if (d.at(u, x) != d.at(u, y)) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
  return true;
}

InvariantResult metric_dimension(const Graph& g, const SolverOptions& opt) {
  require_connected(g, "metric_dimension");
  int n = g.order();
  if (n == 1) return {0, VertexSet(1), Method::kSubsetSearch, {}};
  effective_cap(g, opt, kSubsetSearchCap, "metric_dimension");
  Deadline dl(opt.time_budget);

  DistanceMatrix d = distances(g);
  std::vector<uint64_t> pair_mask;
  pair_mask.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      uint64_t m = 0;
      for (int u = 0; u < n; ++u)
        if (d.at(u, x) != d.at(u, y)) m |= bit(u);
      pair_mask.push_back(m);
    }

  TwinSeed seed = twin_seed(g);
  auto feasible = [&](uint64_t s) {
    for (uint64_t m : pair_mask)
      if (!(s & m)) return false;
    return true;
  };
  auto witness = min_subset_search(n, std::max(1, seed.lower_bound), n - 1, seed.forced,
                                   seed.free_vertices, dl, feasible);
  // Any n-1 vertices resolve, so the scan cannot come back empty.
  return {witness->count(), *witness, Method::kSubsetSearch, {}};
}

// -- distinguishing / locating-dominating -------------------------------------

bool distinguishes(const Graph& g, int u, int x, int y) {
  return u == x || u == y || g.adjacent(u, x) != g.adjacent(u, y);
}

bool is_distinguishing(const Graph& g, const VertexSet& d) {
  int n = g.order();
  for (int x = 0; x < n; ++x) {
    if (d.test(x)) continue;
    for (int y = x + 1; y < n; ++y) {
      if (d.test(y)) continue;
      if (!(g.neighbors(x) ^ g.neighbors(y)).intersects(d)) return false;
    }
  }
  return true;
}

bool is_dominating(const Graph& g, const VertexSet& d) {
  for (int x = 0; x < g.order(); ++x)
    if (!d.test(x) && !g.neighbors(x).intersects(d)) return false;
  return true;
}

bool is_k_dominating(const Graph& g, const VertexSet& d, int k) {
  if (k < 1) fail(Err::kBadParams, "k-domination requires k >= 1");
  for (int x = 0; x < g.order(); ++x)
    if (!d.test(x) && (g.neighbors(x) & d).count() < k) return false;
  return true;
}

bool is_minimal_dominating(const Graph& g, const VertexSet& d) {
  if (!is_dominating(g, d)) return false;
  for (int v : d) {
    VertexSet reduced = d;
    reduced.reset(v);
    if (is_dominating(g, reduced)) return false;
  }
  return true;
}

bool is_locating_dominating(const Graph& g, const VertexSet& d) {
  return is_distinguishing(g, d) && is_dominating(g, d);
}

InvariantResult location_domination_number(const Graph& g, const SolverOptions& opt) {
  require_connected(g, "location_domination_number");
  int n = g.order();
  if (n == 1) return {1, VertexSet::of(1, {0}), Method::kSubsetSearch, {}};
  effective_cap(g, opt, kSubsetSearchCap, "location_domination_number");
  Deadline dl(opt.time_budget);

  std::vector<uint64_t> adj = adjacency_words(g);
  std::vector<uint64_t> pair_mask;
  std::vector<uint64_t> dom_mask(n);
  for (int x = 0; x < n; ++x) dom_mask[x] = adj[x] | bit(x);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      pair_mask.push_back((adj[x] ^ adj[y]) | bit(x) | bit(y));

  TwinSeed seed = twin_seed(g);
  auto feasible = [&](uint64_t s) {
    for (uint64_t m : dom_mask)
      if (!(s & m)) return false;
    for (uint64_t m : pair_mask)
      if (!(s & m)) return false;
    return true;
  };
  auto witness = min_subset_search(n, std::max(1, seed.lower_bound), n - 1, seed.forced,
                                   seed.free_vertices, dl, feasible);
  return {witness->count(), *witness, Method::kSubsetSearch, {}};
}

VertexSet complete_to_ld(const Graph& g, const VertexSet& d) {
  if (!is_distinguishing(g, d))
    fail(Err::kNotDistinguishing, "complete_to_ld: input set is not distinguishing");
  VertexSet out = d;
  int undominated = -1;
  for (int x = 0; x < g.order(); ++x) {
    if (d.test(x) || g.neighbors(x).intersects(d)) continue;
    // Two undominated vertices would share the empty code.
    if (undominated >= 0)
      throw std::logic_error("complete_to_ld: distinguishing set left two vertices undominated");
    undominated = x;
  }
  if (undominated >= 0) out.set(undominated);
  return out;
}

// -- domination ----------------------------------------------------------------

InvariantResult domination_number(const Graph& g, const SolverOptions& opt) {
  int n = g.order();
  effective_cap(g, opt, kSubsetSearchCap, "domination_number");
  Deadline dl(opt.time_budget);
  std::vector<uint64_t> closed(n);
  for (int x = 0; x < n; ++x) closed[x] = g.neighbors(x).word0() | bit(x);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  auto feasible = [&](uint64_t s) {
    for (uint64_t m : closed)
      if (!(s & m)) return false;
    return true;
  };
  auto witness = min_subset_search(n, 1, n, 0, all, dl, feasible);
  return {witness->count(), *witness, Method::kSubsetSearch, {}};
}

InvariantResult k_domination_number(const Graph& g, int k, const SolverOptions& opt) {
  if (k < 1) fail(Err::kBadParams, "k-domination requires k >= 1");
  int n = g.order();
  effective_cap(g, opt, kSubsetSearchCap, "k_domination_number");
  Deadline dl(opt.time_budget);
  std::vector<uint64_t> adj = adjacency_words(g);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  auto feasible = [&](uint64_t s) {
    for (int x = 0; x < n; ++x) {
      if (s & bit(x)) continue;
      if (std::popcount(adj[x] & s) < k) return false;
    }
    return true;
  };
  auto witness = min_subset_search(n, 1, n, 0, all, dl, feasible);
  return {witness->count(), *witness, Method::kSubsetSearch, {}};
}

InvariantResult upper_domination_number(const Graph& g, const SolverOptions& opt) {
  int n = g.order();
  effective_cap(g, opt, kUpperDominationCap, "upper_domination_number");
  Deadline dl(opt.time_budget);
  std::vector<uint64_t> closed(n);
  for (int x = 0; x < n; ++x) closed[x] = g.neighbors(x).word0() | bit(x);

  int best = -1;
  uint64_t best_set = 0;
  for (uint64_t s = 0; s < (1ULL << n); ++s) {
    dl.poll();
    if (std::popcount(s) <= best) continue;
    bool dominating = true;
    uint64_t private_owner = 0;  // members witnessed by a private neighbor
    for (int x = 0; x < n && dominating; ++x) {
      uint64_t w = closed[x] & s;
      if (!w) dominating = false;
      else if (std::popcount(w) == 1) private_owner |= w;
    }
    if (dominating && private_owner == s) {
      best = std::popcount(s);
      best_set = s;
    }
  }
  return {best, detail::set_from_word(n, best_set), Method::kSubsetSearch, {}};
}

VertexSet ore_complement_ld(const Graph& g, const VertexSet& d) {
  if (!is_twin_free(g)) fail(Err::kNotTwinFree, "ore_complement_ld requires a twin-free graph");
  if (g.min_degree() == 0)
    fail(Err::kIsolatedVertex, "ore_complement_ld requires a graph without isolated vertices");
  if (!is_minimal_dominating(g, d))
    fail(Err::kNotMinimalDominating, "ore_complement_ld: set is not a minimal dominating set");
  VertexSet out = VertexSet::full(g.order()).minus(d);
  if (!is_locating_dominating(g, out))
    throw std::logic_error("ore_complement_ld: complement failed the locating-dominating check");
  return out;
}

// -- classical parameters -------------------------------------------------------

namespace {

struct MisSearch {
  const std::vector<uint64_t>& closed;  // N[v] words
  Deadline& dl;
  int best = 0;
  uint64_t best_set = 0;

  void run(uint64_t cand, uint64_t cur, int cur_size) {
    dl.poll();
    if (cur_size + std::popcount(cand) <= best) return;
    if (!cand) {
      best = cur_size;
      best_set = cur;
      return;
    }
    int v = std::countr_zero(cand);
    run(cand & ~closed[v], cur | bit(v), cur_size + 1);
    run(cand & ~bit(v), cur, cur_size);
  }
};

}  // namespace

InvariantResult independence_number(const Graph& g, const SolverOptions& opt) {
  int n = g.order();
  effective_cap(g, opt, kSubsetSearchCap, "independence_number");
  Deadline dl(opt.time_budget);
  std::vector<uint64_t> closed(n);
  for (int v = 0; v < n; ++v) closed[v] = g.neighbors(v).word0() | bit(v);
  MisSearch search{closed, dl};
  search.run(n == 64 ? ~0ULL : (bit(n) - 1), 0, 0);
  return {search.best, detail::set_from_word(n, search.best_set), Method::kSubsetSearch, {}};
}

InvariantResult clique_number(const Graph& g, const SolverOptions& opt) {
  InvariantResult r = independence_number(complement(g), opt);
  return r;
}

namespace {

// k-colorability backtracking, most saturated vertex first.
struct Coloring {
  const Graph& g;
  int k;
  Deadline& dl;
  std::vector<int> color;  // -1 = uncolored

  bool extend(int colored, int used) {
    dl.poll();
    if (colored == g.order()) return true;
    int pick = -1, pick_sat = -1;
    for (int v = 0; v < g.order(); ++v) {
      if (color[v] >= 0) continue;
      uint64_t seen = 0;
      for (int u : g.neighbors(v))
        if (color[u] >= 0) seen |= bit(color[u]);
      int sat = std::popcount(seen);
      if (sat > pick_sat) {
        pick = v;
        pick_sat = sat;
      }
    }
    int limit = std::min(k, used + 1);  // at most one brand-new color
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (int u : g.neighbors(pick))
        if (color[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[pick] = c;
      if (extend(colored + 1, std::max(used, c + 1))) return true;
      color[pick] = -1;
    }
    return false;
  }
};

}  // namespace

InvariantResult chromatic_number(const Graph& g, const SolverOptions& opt) {
  int n = g.order();
  effective_cap(g, opt, kSubsetSearchCap, "chromatic_number");
  Deadline dl(opt.time_budget);
  if (n == 0) return {0, VertexSet(0), Method::kSubsetSearch, {}};
  for (int k = 1; k <= n; ++k) {
    Coloring attempt{g, k, dl, std::vector<int>(n, -1)};
    if (attempt.extend(0, 0)) {
      InvariantResult r{k, VertexSet(n), Method::kSubsetSearch, attempt.color};
      return r;
    }
  }
  throw std::logic_error("chromatic_number: no coloring found");  // unreachable
}

}  // namespace locdom
