#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace cyclesmith {

// Fixed-capacity bitset over 64-bit words. Unlike std::bitset it exposes
// iteration over set bits and keeps the tail words masked, so set algebra
// (&, |, and-not) stays valid after complement.
template <int Capacity>
class FixedBitset {
  static_assert(Capacity > 0);
  static constexpr int kWords = (Capacity + 63) / 64;

 public:
  constexpr FixedBitset() = default;

  static constexpr FixedBitset up_to(int n) {
    FixedBitset s;
    for (int w = 0; w < kWords; ++w) {
      int lo = w * 64;
      if (n <= lo) break;
      int bits = n - lo >= 64 ? 64 : n - lo;
      s.words_[w] = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
    }
    return s;
  }

  constexpr bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  constexpr void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  constexpr void clear() { words_ = {}; }

  constexpr int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  constexpr bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  constexpr bool none() const { return !any(); }

  // Index of the lowest set bit, or -1.
  constexpr int lowest() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }

  // Lowest set bit with index > i, or -1.
  constexpr int next_after(int i) const {
    int w = (i + 1) >> 6;
    if (w >= kWords) return -1;
    std::uint64_t rest = words_[w] & (~std::uint64_t{0} << ((i + 1) & 63));
    if (((i + 1) & 63) == 0) rest = words_[w];
    while (true) {
      if (rest) return w * 64 + std::countr_zero(rest);
      if (++w >= kWords) return -1;
      rest = words_[w];
    }
  }

  friend constexpr FixedBitset operator&(FixedBitset a, const FixedBitset& b) {
    for (int i = 0; i < kWords; ++i) a.words_[i] &= b.words_[i];
    return a;
  }
  friend constexpr FixedBitset operator|(FixedBitset a, const FixedBitset& b) {
    for (int i = 0; i < kWords; ++i) a.words_[i] |= b.words_[i];
    return a;
  }
  friend constexpr FixedBitset operator^(FixedBitset a, const FixedBitset& b) {
    for (int i = 0; i < kWords; ++i) a.words_[i] ^= b.words_[i];
    return a;
  }
  // a & ~b, the frequent "minus" in neighborhood algebra.
  friend constexpr FixedBitset and_not(FixedBitset a, const FixedBitset& b) {
    for (int i = 0; i < kWords; ++i) a.words_[i] &= ~b.words_[i];
    return a;
  }
  constexpr FixedBitset& operator&=(const FixedBitset& b) { return *this = *this & b; }
  constexpr FixedBitset& operator|=(const FixedBitset& b) { return *this = *this | b; }

  constexpr bool operator==(const FixedBitset&) const = default;

  std::uint64_t word(int i) const { return words_[i]; }

  class const_iterator {
   public:
    const_iterator(const FixedBitset* s, int idx) : s_(s), idx_(idx) {}
    int operator*() const { return idx_; }
    const_iterator& operator++() {
      idx_ = s_->next_after(idx_);
      return *this;
    }
    bool operator!=(const const_iterator& o) const { return idx_ != o.idx_; }

   private:
    const FixedBitset* s_;
    int idx_;
  };
  const_iterator begin() const { return {this, lowest()}; }
  const_iterator end() const { return {this, -1}; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace cyclesmith
