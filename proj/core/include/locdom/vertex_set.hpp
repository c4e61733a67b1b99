#ifndef LOCDOM_VERTEX_SET_HPP
#define LOCDOM_VERTEX_SET_HPP

// Bitset over a fixed vertex universe 0..n-1. One 64-bit word covers the
// common case; larger universes spill into further words.

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace locdom {

class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
    assert(universe >= 0);
  }

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.set(v);
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.w_) w = ~0ULL;
    s.trim();
    return s;
  }

  static VertexSet from_word(int universe, uint64_t bits) {
    assert(universe <= 64);
    VertexSet s(universe);
    if (!s.w_.empty()) s.w_[0] = bits;
    s.trim();
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    assert(v >= 0 && v < n_);
    return (w_[v >> 6] >> (v & 63)) & 1ULL;
  }

  void set(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] |= 1ULL << (v & 63);
  }

  void reset(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] &= ~(1ULL << (v & 63));
  }

  void clear() {
    for (auto& w : w_) w = 0;
  }

  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  // First member, or -1.
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  // First member strictly greater than v, or -1.
  int next(int v) const {
    int i = (v + 1) >> 6;
    if (i >= static_cast<int>(w_.size())) return -1;
    uint64_t w = w_[i] & (~0ULL << ((v + 1) & 63));
    for (;;) {
      if (w) return i * 64 + std::countr_zero(w);
      if (++i >= static_cast<int>(w_.size())) return -1;
      w = w_[i];
    }
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  VertexSet& operator^=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  VertexSet minus(const VertexSet& o) const {
    assert(n_ == o.n_);
    VertexSet r(*this);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
  }

  VertexSet complemented() const {
    VertexSet r(*this);
    for (auto& w : r.w_) w = ~w;
    r.trim();
    return r;
  }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool contains_all(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (o.w_[i] & ~w_[i]) return false;
    return true;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (size_t i = a.w_.size(); i-- > 0;)
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    return false;
  }

  // Single-word view; universe must fit one word.
  uint64_t word0() const {
    assert(n_ <= 64);
    return w_.empty() ? 0 : w_[0];
  }

  const std::vector<uint64_t>& words() const { return w_; }

  std::vector<int> to_vector() const {
    std::vector<int> r;
    r.reserve(count());
    for (int v = first(); v >= 0; v = next(v)) r.push_back(v);
    return r;
  }

  std::string to_string() const {
    std::string s = "{";
    bool sep = false;
    for (int v = first(); v >= 0; v = next(v)) {
      if (sep) s += ',';
      s += std::to_string(v);
      sep = true;
    }
    s += '}';
    return s;
  }

  class const_iterator {
   public:
    const_iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
    int operator*() const { return v_; }
    const_iterator& operator++() {
      v_ = s_->next(v_);
      return *this;
    }
    bool operator!=(const const_iterator& o) const { return v_ != o.v_; }

   private:
    const VertexSet* s_;
    int v_;
  };

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, -1}; }

 private:
  void trim() {
    if (n_ % 64 != 0 && !w_.empty()) w_.back() &= (~0ULL >> (64 - n_ % 64));
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace locdom

#endif
