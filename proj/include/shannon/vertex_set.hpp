#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace shannon {

/// Fixed-capacity set of vertex indices packed into 64-bit words.
class VertexSet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  VertexSet() = default;
  explicit VertexSet(std::size_t capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  static VertexSet full(std::size_t capacity) {
    VertexSet s(capacity);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t capacity() const { return capacity_; }

  bool test(std::size_t i) const {
    assert(i < capacity_);
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(std::size_t i) {
    assert(i < capacity_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < capacity_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w != 0) return true;
    return false;
  }
  bool none() const { return !any(); }

  /// Smallest element >= from, or npos.
  std::size_t next(std::size_t from = 0) const {
    if (from >= capacity_) return npos;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= words_.size()) return npos;
      w = words_[wi];
    }
  }
  std::size_t first() const { return next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(o.capacity_ == capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    assert(o.capacity_ == capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Removes every element of o.
  VertexSet& subtract(const VertexSet& o) {
    assert(o.capacity_ == capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  /// Set complement within [0, capacity).
  VertexSet complemented() const {
    VertexSet s = *this;
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic order on sorted element lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    std::size_t x = a.first(), y = b.first();
    while (x != npos && y != npos) {
      if (x != y) return x < y;
      x = a.next(x + 1);
      y = b.next(y + 1);
    }
    return x == npos && y != npos;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

 private:
  void trim() {
    if (capacity_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (capacity_ % 64)) - 1;
  }

  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace shannon
