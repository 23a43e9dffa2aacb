#pragma once
// Fixed-size bitset with word-parallel set operations.
// std::vector<bool> has no efficient word access, std::bitset is compile-time
// sized; graph rows and subgroup masks need a runtime size, hence this.

#include <cstdint>
#include <vector>

namespace commgraph {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size_bits() const { return nbits_; }

  void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  // this &= ~o; returns true if any bit survives.
  bool and_not(const Bitset& o) {
    std::uint64_t live = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      words_[k] &= ~o.words_[k];
      live |= words_[k];
    }
    return live != 0;
  }

  bool operator==(const Bitset& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }
  bool operator!=(const Bitset& o) const { return !(*this == o); }
  // Lexicographic on words; gives a deterministic order for equal sizes.
  bool operator<(const Bitset& o) const {
    if (nbits_ != o.nbits_) return nbits_ < o.nbits_;
    return words_ < o.words_;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  int find_first() const { return find_next(-1); }
  // Smallest set bit strictly greater than i, or -1.
  int find_next(int i) const {
    int k = (i + 1) >> 6;
    if (k >= static_cast<int>(words_.size())) return -1;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << ((i + 1) & 63));
    while (true) {
      if (w) return k * 64 + __builtin_ctzll(w);
      if (++k >= static_cast<int>(words_.size())) return -1;
      w = words_[k];
    }
  }

  template <typename F>
  void for_each(F f) const {
    for (int i = find_first(); i >= 0; i = find_next(i)) f(i);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace commgraph
