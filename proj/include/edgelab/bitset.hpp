#pragma once

// Fixed-universe dynamic bitset over 64-bit words. Vertices are dense
// indices, so all the hot kernels reduce to word AND + popcount.

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace edgelab {

class Bitset {
 public:
  Bitset() : nbits_(0) {}
  explicit Bitset(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  void set(std::size_t i) { w_[i >> 6] |= (1ULL << (i & 63)); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }
  void clear() { std::fill(w_.begin(), w_.end(), 0ULL); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t x : w_) c += std::popcount(x);
    return c;
  }

  // |this AND other|
  std::size_t and_count(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
    return c;
  }

  // |this AND NOT other|
  std::size_t minus_count(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & ~o.w_[k]);
    return c;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset r(nbits_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }
  Bitset operator|(const Bitset& o) const {
    Bitset r(nbits_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] | o.w_[k];
    return r;
  }
  // this AND NOT other
  Bitset minus(const Bitset& o) const {
    Bitset r(nbits_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & ~o.w_[k];
    return r;
  }
  Bitset complement() const {
    Bitset r(nbits_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
    r.trim();
    return r;
  }

  bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

  bool any() const {
    for (std::uint64_t x : w_)
      if (x) return true;
    return false;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t x = w_[k];
      while (x) {
        unsigned b = std::countr_zero(x);
        f(k * 64 + b);
        x &= x - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  void trim() {
    if (nbits_ % 64 != 0 && !w_.empty()) w_.back() &= (1ULL << (nbits_ % 64)) - 1;
  }

  std::size_t nbits_;
  std::vector<std::uint64_t> w_;
};

}  // namespace edgelab
