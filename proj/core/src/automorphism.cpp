#include "locdom/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "locdom/errors.hpp"
#include "locdom/trees.hpp"
#include "locdom/twins.hpp"
#include "solver_util.hpp"

namespace locdom {

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
  int n = g.order();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) return false;
  return true;
}

std::vector<int> equitable_colors(const Graph& g, const std::vector<int>& initial) {
  int n = g.order();
  using Signature = std::pair<int, std::vector<int>>;
  std::vector<int> color = initial;
  // Normalize to dense ids ordered by value so the result only depends on
  // the initial color ordering.
  {
    std::map<int, int> dense;
    for (int c : color) dense.emplace(c, 0);
    int next = 0;
    for (auto& [value, id] : dense) id = next++;
    for (int& c : color) c = dense[c];
  }
  int classes = color.empty() ? 0 : 1 + *std::max_element(color.begin(), color.end());
  for (;;) {
    std::vector<Signature> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> around;
      for (int u : g.neighbors(v)) around.push_back(color[u]);
      std::sort(around.begin(), around.end());
      sig[v] = {color[v], std::move(around)};
    }
    std::map<Signature, int> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) color[v] = ids[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  return color;
}

namespace {

// Backtracking completion of a partial vertex map into an automorphism.
// Images stay inside refinement cells; adjacency to already-mapped vertices
// must agree in both directions (the count comparison covers non-edges).
struct ExtendSearch {
  const Graph& g;
  const std::vector<int>& color;
  std::vector<int> img;
  VertexSet assigned_dom;
  VertexSet used_img;
  std::vector<int> todo;

  ExtendSearch(const Graph& gr, const std::vector<int>& col)
      : g(gr), color(col), img(gr.order(), -1), assigned_dom(gr.order()), used_img(gr.order()) {}

  void assign(int u, int x) {
    img[u] = x;
    assigned_dom.set(u);
    used_img.set(x);
  }

  bool consistent(int u, int x) const {
    VertexSet mapped_nbrs = g.neighbors(u) & assigned_dom;
    if ((g.neighbors(x) & used_img).count() != mapped_nbrs.count()) return false;
    for (int v : mapped_nbrs)
      if (!g.adjacent(x, img[v])) return false;
    return true;
  }

  bool run(size_t pos) {
    if (pos == todo.size()) return true;
    int u = todo[pos];
    for (int x = 0; x < g.order(); ++x) {
      if (color[x] != color[u] || used_img.test(x)) continue;
      if (!consistent(u, x)) continue;
      assign(u, x);
      if (run(pos + 1)) return true;
      img[u] = -1;
      assigned_dom.reset(u);
      used_img.reset(x);
    }
    return false;
  }
};

std::vector<int> cell_sizes(const std::vector<int>& color) {
  std::vector<int> size;
  for (int c : color) {
    if (c >= static_cast<int>(size.size())) size.resize(c + 1, 0);
    ++size[c];
  }
  return size;
}

void sort_by_cell(std::vector<int>& vs, const std::vector<int>& color,
                  const std::vector<int>& size) {
  std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) {
    if (size[color[a]] != size[color[b]]) return size[color[a]] < size[color[b]];
    return a < b;
  });
}

}  // namespace

std::optional<AutomorphismWitness> nontrivial_automorphism_fixing(const Graph& g,
                                                                  const VertexSet& fixed) {
  int n = g.order();
  if (n <= 1) return std::nullopt;

  auto initial_colors = [&](int prefix) {
    // Vertices of `fixed` and everything below `prefix` are pinned as
    // singleton cells; the rest start from their degree.
    std::vector<int> c(n);
    for (int v = 0; v < n; ++v)
      c[v] = (v < prefix || fixed.test(v)) ? v : n + g.degree(v);
    return c;
  };

  std::vector<int> base = equitable_colors(g, initial_colors(0));
  std::vector<int> base_size = cell_sizes(base);

  for (int w = 0; w < n; ++w) {
    if (fixed.test(w)) continue;
    if (base_size[base[w]] == 1) continue;  // pinning a prefix only shrinks cells
    std::vector<int> color = equitable_colors(g, initial_colors(w));
    std::vector<int> size = cell_sizes(color);
    if (size[color[w]] == 1) continue;

    for (int x = w + 1; x < n; ++x) {
      if (color[x] != color[w]) continue;
      ExtendSearch search(g, color);
      for (int v = 0; v < n; ++v)
        if (v < w || fixed.test(v)) search.assign(v, v);
      if (!search.consistent(w, x)) continue;
      search.assign(w, x);
      for (int v = w + 1; v < n; ++v)
        if (search.img[v] < 0) search.todo.push_back(v);
      sort_by_cell(search.todo, color, size);
      if (search.run(0)) return AutomorphismWitness{search.img};
    }
  }
  return std::nullopt;
}

bool is_determining(const Graph& g, const VertexSet& s) {
  return !nontrivial_automorphism_fixing(g, s).has_value();
}

InvariantResult determining_number(const Graph& g, const SolverOptions& opt) {
  int n = g.order();
  int fallback = is_tree(g) ? kDeterminingTreeCap : kDeterminingCap;
  int cap = opt.cap.value_or(fallback);
  if (n > cap)
    fail(Err::kCapExceeded, "determining_number: order " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
  detail::Deadline dl(opt.time_budget);

  TwinDecomposition td = twin_decomposition(g);
  std::vector<int> free_vertices;
  for (int v = 0; v < n; ++v)
    if (!td.omega.test(v)) free_vertices.push_back(v);
  int lb = td.omega.count();
  int m = static_cast<int>(free_vertices.size());

  for (int k = lb; k <= std::max(0, n - 1); ++k) {
    VertexSet found;
    bool stop =
        detail::for_each_colex_subset(m, k - lb, [&](const std::vector<int>& pick) {
          dl.poll();
          VertexSet s = td.omega;
          for (int i : pick) s.set(free_vertices[i]);
          if (is_determining(g, s)) {
            found = s;
            return true;
          }
          return false;
        });
    if (stop) return {k, found, Method::kSubsetSearch, {}};
  }
  throw std::logic_error("determining_number: no determining set found");  // unreachable
}

std::vector<VertexSet> orbits(const Graph& g, const SolverOptions& opt) {
  int n = g.order();
  int fallback = is_tree(g) ? kDeterminingTreeCap : kDeterminingCap;
  int cap = opt.cap.value_or(fallback);
  if (n > cap)
    fail(Err::kCapExceeded,
         "orbits: order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));

  std::vector<int> color = equitable_colors(g, std::vector<int>(n, 0));
  std::vector<int> size = cell_sizes(color);

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  for (int c = 0; c < static_cast<int>(size.size()); ++c) {
    if (size[c] <= 1) continue;
    int v0 = -1;
    for (int v = 0; v < n; ++v)
      if (color[v] == c) {
        v0 = v;
        break;
      }
    for (int v = v0 + 1; v < n; ++v) {
      if (color[v] != c || find(v) == find(v0)) continue;
      ExtendSearch search(g, color);
      if (!search.consistent(v0, v)) continue;
      search.assign(v0, v);
      for (int u = 0; u < n; ++u)
        if (u != v0) search.todo.push_back(u);
      sort_by_cell(search.todo, color, size);
      if (search.run(0))
        for (int u = 0; u < n; ++u) unite(u, search.img[u]);
    }
  }

  std::map<int, VertexSet> groups;
  for (int v = 0; v < n; ++v) {
    auto [it, fresh] = groups.try_emplace(find(v), VertexSet(n));
    it->second.set(v);
  }
  std::vector<VertexSet> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(members);
  return out;
}

}  // namespace locdom
