#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gsq {

// Dynamic fixed-universe bitset used for adjacency rows. Small (one word up
// to 64 vertices) but grows for line graphs of larger inputs.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }

  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bitset& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  int count_and(const Bitset& o) const {
    int c = 0;
    for (size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
    return c;
  }

  // True when every set bit of *this is also set in o.
  bool subset_of(const Bitset& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  int first() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
    return -1;
  }

  template <class F>
  void for_each(F f) const {  // ascending order
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t x = w_[k];
      while (x) {
        f(int(k * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) = default;

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace gsq
