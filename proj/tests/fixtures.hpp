#pragma once

#include "entrench/entrenchment.hpp"
#include "entrench/formula.hpp"

namespace fixture {

using namespace entrench;

inline Vocabulary pbf() { return Vocabulary({"p", "b", "f"}); }

/// The bird example: p is the penguin, b the bird, f the flyer.
inline GeneratorBase figure1() {
  const Vocabulary v = pbf();
  auto g = [&](const char* l, const char* r) { return Generator{parse(l, v), parse(r, v)}; };
  return GeneratorBase(v, {g("p", "false"), g("true", "p -> b"), g("true", "p -> !f"), g("b -> f", "f -> b"),
                           g("b -> f", "!p")});
}

inline Vocabulary phi_psi_chi() { return Vocabulary({"phi", "psi", "chi"}); }

/// Subset order over D = {phi, phi | psi | chi}.
inline EntrenchmentOracle example5() {
  const Vocabulary v = phi_psi_chi();
  return subset_order_oracle({parse("phi", v), parse("phi | psi | chi", v)}, v);
}

inline std::uint32_t mask(const char* text, const Vocabulary& v) { return truth_mask(parse(text, v), v).bits; }

inline std::vector<std::pair<std::uint32_t, std::uint32_t>> raw_pairs(const GeneratorBase& b) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (auto [l, r] : b.mask_pairs()) out.emplace_back(l.bits, r.bits);
  return out;
}

}  // namespace fixture
