#include "locdom/families.hpp"

#include <algorithm>
#include <cctype>

#include "locdom/errors.hpp"

namespace locdom {

namespace {

void need(bool ok, const std::string& msg) {
  if (!ok) fail(Err::kBadParams, msg);
}

std::vector<std::string> numbered(const std::string& prefix, int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = prefix + std::to_string(i);
  return labels;
}

}  // namespace

Family family_from_string(const std::string& name) {
  std::string key;
  for (char c : name)
    if (c != '_') key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (key == "path") return Family::kPath;
  if (key == "cycle") return Family::kCycle;
  if (key == "complete") return Family::kComplete;
  if (key == "star") return Family::kStar;
  if (key == "wheel") return Family::kWheel;
  if (key == "tr") return Family::kTr;
  if (key == "gr") return Family::kGr;
  if (key == "hr") return Family::kHr;
  if (key == "tqs") return Family::kTqs;
  fail(Err::kBadParams, "unknown family: " + name);
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kComplete: return "complete";
    case Family::kStar: return "star";
    case Family::kWheel: return "wheel";
    case Family::kTr: return "T_r";
    case Family::kGr: return "G_r";
    case Family::kHr: return "H_r";
    case Family::kTqs: return "T_qs";
  }
  return "?";
}

Graph gen(const FamilySpec& spec) {
  auto arity = [&](size_t want) {
    need(spec.params.size() == want,
         family_to_string(spec.name) + " takes " + std::to_string(want) + " parameter(s)");
  };
  switch (spec.name) {
    case Family::kPath: arity(1); return gen_path(spec.params[0]);
    case Family::kCycle: arity(1); return gen_cycle(spec.params[0]);
    case Family::kComplete: arity(1); return gen_complete(spec.params[0]);
    case Family::kStar: arity(1); return gen_star(spec.params[0]);
    case Family::kWheel: arity(1); return gen_wheel(spec.params[0]);
    case Family::kTr: arity(1); return gen_tr(spec.params[0]);
    case Family::kGr: arity(1); return gen_gr(spec.params[0]);
    case Family::kHr: arity(1); return gen_hr(spec.params[0]);
    case Family::kTqs: arity(2); return gen_tqs(spec.params[0], spec.params[1]);
  }
  fail(Err::kBadParams, "unknown family");
}

Graph gen_path(int n) {
  need(n >= 1, "path needs order >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph gen_cycle(int n) {
  need(n >= 3, "cycle needs order >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph gen_complete(int n) {
  need(n >= 1, "complete graph needs order >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph gen_star(int leaves) {
  need(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph gen_wheel(int rim) {
  need(rim >= 3, "wheel needs rim length >= 3");
  std::vector<Edge> e;
  for (int i = 1; i <= rim; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i == rim ? 1 : i + 1);
  }
  return Graph(rim + 1, e);
}

Graph gen_tr(int r) {
  need(r >= 6, "T_r needs r >= 6");
  std::vector<Edge> e;
  for (int i = 1; i < r; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, 3);
  return Graph(r + 1, e, numbered("u", r + 1));
}

Graph gen_gr(int r) {
  need(r >= 6, "G_r needs r >= 6");
  return corona_k1(gen_tr(r));
}

Graph gen_hr(int r) {
  need(r >= 6, "H_r needs r >= 6");
  Graph gr = gen_gr(r);
  int n = gr.order();
  std::vector<Edge> e = gr.edges();
  e.emplace_back(0, n);
  std::vector<std::string> labels(gr.labels());
  labels.push_back("v0'");
  return Graph(n + 1, e, std::move(labels));
}

Graph gen_tqs(int q, int s) {
  need(q >= 7, "T_qs needs q >= 7");
  need(s >= 0 && s < 7, "T_qs needs 0 <= s < 7");
  // Every spine vertex doubles as the branch vertex of its own 7-vertex
  // bush: a path of length 2 and a path of length 3 plus a pendant, so each
  // bush hangs three legs of pairwise distinct lengths off the spine.
  // Block i occupies vertices 7i..7i+6, local layout matching T_6 with the
  // spine vertex sitting at local index 3.
  constexpr int kSpineLocal = 3;
  int n = 7 * q + s;
  std::vector<Edge> e;
  std::vector<std::string> labels(n);
  auto global = [](int block, int local) { return 7 * block + local; };
  for (int i = 0; i < q; ++i) {
    for (int local = 1; local < 6; ++local) e.emplace_back(global(i, local), global(i, local + 1));
    e.emplace_back(global(i, 0), global(i, kSpineLocal));
    for (int local = 0; local < 7; ++local)
      labels[global(i, local)] =
          local == kSpineLocal ? "u" + std::to_string(i)
                               : "u" + std::to_string(i) + "." + std::to_string(local);
  }
  // Spine adjacency: the q-vertex tree (u1..u_{q-1} path, pendant u0 on u3).
  auto spine = [&](int i) { return global(i, kSpineLocal); };
  for (int i = 1; i + 1 < q; ++i) e.emplace_back(spine(i), spine(i + 1));
  e.emplace_back(spine(0), spine(3));

  if (s >= 1 && s <= 3) {
    // Stretch the spine edge {u1,u2} into a path through s fresh vertices.
    e.erase(std::find(e.begin(), e.end(), Edge{spine(1), spine(2)}));
    int prev = spine(1);
    for (int i = 0; i < s; ++i) {
      int w = 7 * q + i;
      e.emplace_back(prev, w);
      labels[w] = "w" + std::to_string(i);
      prev = w;
    }
    e.emplace_back(prev, spine(2));
  } else if (s >= 4) {
    // Hang a path of length s off spine vertex u1.
    int prev = spine(1);
    for (int i = 0; i < s; ++i) {
      int w = 7 * q + i;
      e.emplace_back(prev, w);
      labels[w] = "w" + std::to_string(i);
      prev = w;
    }
  }
  return Graph(n, e, std::move(labels));
}

Graph dim_det_gap_witness(int n) {
  need(n >= 14, "gap witness needs order >= 14");
  if (n % 2 == 0) return complement(gen_gr(n / 2 - 1));
  return complement(gen_hr((n - 1) / 2 - 1));
}

}  // namespace locdom
