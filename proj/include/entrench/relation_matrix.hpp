#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "entrench/truth_mask.hpp"

namespace entrench {

/// Dense binary relation over all algebra elements; row a, column b holds aRb.
/// Intended for n <= 3 (at most 256 x 256 bits).
class RelationMatrix {
 public:
  RelationMatrix() = default;
  explicit RelationMatrix(std::size_t elements)
      : n_(elements), words_((elements + 63) / 64), bits_(n_ * words_, 0) {}

  std::size_t elements() const { return n_; }

  bool test(TruthMask a, TruthMask b) const {
    return (bits_[a.bits * words_ + b.bits / 64] >> (b.bits % 64)) & 1u;
  }
  void set(TruthMask a, TruthMask b, bool value = true) {
    std::uint64_t& w = bits_[a.bits * words_ + b.bits / 64];
    const std::uint64_t bit = std::uint64_t{1} << (b.bits % 64);
    w = value ? (w | bit) : (w & ~bit);
  }

  /// Row of `a` as packed 64-bit words, least significant column first.
  const std::uint64_t* row(TruthMask a) const { return bits_.data() + a.bits * words_; }
  std::uint64_t* row(TruthMask a) { return bits_.data() + a.bits * words_; }
  std::size_t words_per_row() const { return words_; }

  std::size_t count() const;

  friend bool operator==(const RelationMatrix&, const RelationMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline std::size_t RelationMatrix::count() const {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

}  // namespace entrench
