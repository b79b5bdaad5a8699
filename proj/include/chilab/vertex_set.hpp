#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "chilab/error.hpp"

#ifndef CHILAB_MAX_VERTICES
#define CHILAB_MAX_VERTICES 64
#endif

namespace chilab {

inline constexpr int kMaxVertices = CHILAB_MAX_VERTICES;
static_assert(kMaxVertices >= 1 && kMaxVertices <= 1024, "vertex cap out of range");

// Fixed-capacity set of vertex indices. One adjacency word at the default
// cap of 64; a larger compile-time cap switches to the multi-word layout.
class VertexSet {
 public:
  static constexpr int kWords = (kMaxVertices + 63) / 64;

  constexpr VertexSet() : words_{} {}

  static VertexSet single(int v) {
    VertexSet s;
    s.add(v);
    return s;
  }

  static VertexSet full(int n) {
    check_index_bound(n);
    VertexSet s;
    for (int w = 0; w < kWords; ++w) {
      int lo = w * 64;
      if (n <= lo) break;
      int bits = n - lo >= 64 ? 64 : n - lo;
      s.words_[w] = bits == 64 ? ~0ULL : ((1ULL << bits) - 1);
    }
    return s;
  }

  static VertexSet of(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  void add(int v) {
    check_index(v);
    words_[v >> 6] |= 1ULL << (v & 63);
  }

  void remove(int v) {
    check_index(v);
    words_[v >> 6] &= ~(1ULL << (v & 63));
  }

  bool contains(int v) const {
    if (v < 0 || v >= kMaxVertices) return false;
    return (words_[v >> 6] >> (v & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool any() const { return !empty(); }

  void clear() { words_.fill(0); }

  // Lowest member, or -1 when empty.
  int first() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }

  // Lowest member strictly above v, or -1.
  int next_after(int v) const {
    if (v < -1) v = -1;
    int w = (v + 1) >> 6;
    if (w >= kWords) return -1;
    std::uint64_t masked = words_[w] & (~0ULL << ((v + 1) & 63));
    while (true) {
      if (masked) return w * 64 + std::countr_zero(masked);
      if (++w >= kWords) return -1;
      masked = words_[w];
    }
  }

  bool intersects(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  bool contains_all(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (o.words_[w] & ~words_[w]) return false;
    return true;
  }

  VertexSet operator&(const VertexSet& o) const {
    VertexSet r;
    for (int w = 0; w < kWords; ++w) r.words_[w] = words_[w] & o.words_[w];
    return r;
  }

  VertexSet operator|(const VertexSet& o) const {
    VertexSet r;
    for (int w = 0; w < kWords; ++w) r.words_[w] = words_[w] | o.words_[w];
    return r;
  }

  // Set difference.
  VertexSet operator-(const VertexSet& o) const {
    VertexSet r;
    for (int w = 0; w < kWords; ++w) r.words_[w] = words_[w] & ~o.words_[w];
    return r;
  }

  VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
  VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
  VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }

  bool operator==(const VertexSet& o) const { return words_ == o.words_; }
  bool operator!=(const VertexSet& o) const { return words_ != o.words_; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next_after(v)) out.push_back(v);
    return out;
  }

  // Iteration over members in increasing order.
  class iterator {
   public:
    iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next_after(v_);
      return *this;
    }
    bool operator!=(const iterator& o) const { return v_ != o.v_; }

   private:
    const VertexSet* set_;
    int v_;
  };

  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, -1); }

 private:
  static void check_index(int v) {
    if (v < 0 || v >= kMaxVertices) fail(ErrorKind::range, "vertex index " + std::to_string(v) + " outside capacity " + std::to_string(kMaxVertices));
  }
  static void check_index_bound(int n) {
    if (n < 0 || n > kMaxVertices) fail(ErrorKind::capacity, "vertex count " + std::to_string(n) + " exceeds capacity " + std::to_string(kMaxVertices));
  }

  std::array<std::uint64_t, kWords> words_;
};

}  // namespace chilab
