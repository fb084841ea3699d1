#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace entrench {

/// Semantic identity of a sentence: bit v is set iff the sentence holds under
/// valuation v, where bit j of v is the truth value of the j-th variable.
struct TruthMask {
  std::uint32_t bits = 0;

  constexpr TruthMask() = default;
  constexpr explicit TruthMask(std::uint32_t b) : bits(b) {}

  constexpr auto operator<=>(const TruthMask&) const = default;
};

constexpr TruthMask meet(TruthMask a, TruthMask b) { return TruthMask{a.bits & b.bits}; }
constexpr TruthMask join(TruthMask a, TruthMask b) { return TruthMask{a.bits | b.bits}; }

/// Every model of `a` is a model of `b`.
constexpr bool entails(TruthMask a, TruthMask b) { return (a.bits & ~b.bits) == 0; }

constexpr bool is_bottom(TruthMask a) { return a.bits == 0; }

/// Maximum number of variables the engine can ever represent (32 valuations).
inline constexpr int kHardVariableLimit = 5;

/// The Lindenbaum algebra of an n-variable vocabulary: 2^(2^n) masks.
class Algebra {
 public:
  explicit Algebra(int variables);

  int variables() const { return variables_; }
  /// Number of valuations, 2^n.
  std::uint32_t valuations() const { return valuations_; }
  /// Number of algebra elements, 2^(2^n).
  std::uint64_t size() const { return std::uint64_t{1} << valuations_; }

  TruthMask top() const { return TruthMask{top_}; }
  TruthMask bottom() const { return TruthMask{}; }
  bool is_top(TruthMask a) const { return a.bits == top_; }
  bool contains(TruthMask a) const { return (a.bits & ~top_) == 0; }

  TruthMask complement(TruthMask a) const { return TruthMask{~a.bits & top_}; }
  TruthMask arrow(TruthMask a, TruthMask b) const { return join(complement(a), b); }

  /// Mask of the j-th atomic variable.
  TruthMask variable(int j) const;

  /// Element with index i in ascending numeric order (the mask whose bits are i).
  TruthMask element(std::uint64_t i) const { return TruthMask{static_cast<std::uint32_t>(i)}; }

  /// Hex rendering padded to the valuation width, e.g. "0x5f" at n = 3.
  std::string hex(TruthMask a) const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  int variables_;
  std::uint32_t valuations_;
  std::uint32_t top_;
};

/// Default cap for materializing the whole algebra (n <= 4, 65 536 masks).
inline constexpr int kEnumerationLimit = 4;

/// All masks of the algebra in ascending numeric order.
/// Throws VocabularyTooLarge when n exceeds `limit`.
std::vector<TruthMask> enumerate_algebra(const Algebra& algebra, int limit = kEnumerationLimit);

}  // namespace entrench
