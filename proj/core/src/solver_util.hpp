#ifndef LOCDOM_SRC_SOLVER_UTIL_HPP
#define LOCDOM_SRC_SOLVER_UTIL_HPP

// Internal helpers shared by the exact solvers.

#include <chrono>
#include <cstdint>
#include <numeric>
#include <vector>

#include "locdom/errors.hpp"
#include "locdom/vertex_set.hpp"

namespace locdom::detail {

class Deadline {
 public:
  explicit Deadline(std::optional<std::chrono::milliseconds> budget) {
    if (budget) end_ = std::chrono::steady_clock::now() + *budget;
  }

  // Cheap to call in inner loops; the clock is read every 1024th poll.
  void poll() {
    if (!end_) return;
    if (++tick_ % 1024 != 0) return;
    if (std::chrono::steady_clock::now() > *end_)
      fail(Err::kTimeout, "time budget exceeded");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
  uint64_t tick_ = 0;
};

// Visits the k-subsets of {0..m-1} in colex order until f returns true.
// f receives the chosen indices, ascending. Returns whether f stopped it.
template <class F>
bool for_each_colex_subset(int m, int k, F&& f) {
  if (k < 0 || k > m) return false;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  for (;;) {
    if (f(static_cast<const std::vector<int>&>(c))) return true;
    int i = 0;
    while (i < k) {
      int limit = (i + 1 < k) ? c[i + 1] : m;
      if (c[i] + 1 < limit) break;
      ++i;
    }
    if (i == k) return false;
    ++c[i];
    for (int j = 0; j < i; ++j) c[j] = j;
  }
}

inline VertexSet set_from_word(int n, uint64_t bits) { return VertexSet::from_word(n, bits); }

inline uint64_t bit(int v) { return 1ULL << v; }

}  // namespace locdom::detail

#endif
