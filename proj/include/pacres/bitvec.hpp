#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pacres/simd.hpp"

namespace pacres {

// Fixed-width bit vector backed by uint64 words; bulk ops route through
// the kernel layer.  Trailing bits of the last word are kept zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t bits)
      : bits_(bits), w_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  std::size_t words() const { return w_.size(); }
  const std::uint64_t* data() const { return w_.data(); }
  std::uint64_t* data() { return w_.data(); }

  bool get(std::size_t i) const {
    return (w_[i >> 6] >> (i & 63)) & 1ull;
  }
  void set(std::size_t i, bool v) {
    const std::uint64_t bit = 1ull << (i & 63);
    if (v)
      w_[i >> 6] |= bit;
    else
      w_[i >> 6] &= ~bit;
  }

  void xor_with(const BitVec& o) {
    simd::active().xor_inplace(w_.data(), o.w_.data(), w_.size());
  }
  void and_with(const BitVec& o) {
    simd::active().and_inplace(w_.data(), o.w_.data(), w_.size());
  }
  void or_with(const BitVec& o) {
    simd::active().or_inplace(w_.data(), o.w_.data(), w_.size());
  }
  std::uint64_t popcount() const {
    return simd::active().popcount(w_.data(), w_.size());
  }
  bool is_zero() const {
    return simd::active().is_zero(w_.data(), w_.size());
  }
  bool subset_of(const BitVec& o) const {
    return simd::active().subset(w_.data(), o.w_.data(), w_.size());
  }
  std::uint64_t popcount_and(const BitVec& o) const {
    return simd::active().popcount_and2(w_.data(), o.w_.data(), w_.size());
  }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.bits_ == b.bits_ && a.w_ == b.w_;
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace pacres
