#pragma once

#include <memory>
#include <vector>

#include "entrench/entrenchment.hpp"
#include "entrench/formula.hpp"
#include "entrench/truth_mask.hpp"
#include "entrench/verdict.hpp"

namespace entrench {

/// Minimum of a filter: stable and nonzero. The filter is {x : c |- x}, so a
/// smaller mask denotes a larger filter.
struct FilterMin {
  TruthMask c;

  constexpr auto operator<=>(const FilterMin&) const = default;
};

struct InferenceResult {
  Formula antecedent;
  Formula consequent;
  bool verdict = false;
  std::vector<FilterMin> maximal_bases;
  /// Minima of the extension theories, deduplicated, ascending.
  std::vector<TruthMask> extensions;
  /// Join of `extensions`; zero when there are none (the whole language).
  TruthMask sceptical_min;
};

/// Maxiconsistent inference over one entrenchment oracle.
///
/// Construction scans the algebra once for stable elements (n <= 4 for
/// closure oracles, n <= 3 otherwise). Queries are pure and thread safe;
/// sceptical extensions are memoized per antecedent.
class InferenceEngine {
 public:
  explicit InferenceEngine(EntrenchmentOracle oracle);

  const EntrenchmentOracle& oracle() const;
  Algebra algebra() const { return oracle().algebra(); }

  /// beta is not entrenched below !alpha.
  bool coherent(TruthMask beta, TruthMask alpha) const;

  /// All filter minima, ascending. Empty for the inconsistent ordering.
  const std::vector<FilterMin>& filters() const;
  bool is_filter(TruthMask c) const;

  /// Filters inside Coh(alpha): filter minima consistent with alpha.
  std::vector<FilterMin> bases(TruthMask alpha) const;
  /// Inclusion-maximal bases.
  std::vector<FilterMin> maximal_bases(TruthMask alpha) const;
  /// { c & alpha : c maximal base }, deduplicated, ascending.
  std::vector<TruthMask> extensions(TruthMask alpha) const;
  /// Join of the extensions, zero when there are none.
  TruthMask sceptical_extension(TruthMask alpha) const;

  bool infer(TruthMask alpha, TruthMask beta) const {
    return entails(sceptical_extension(alpha), beta);
  }
  InferenceResult infer(const Formula& alpha, const Formula& beta) const;

  /// e(alpha) empty, E(alpha) the whole language, alpha |~ false and
  /// top <= !alpha must agree.
  Verdict empty_chain_check(TruthMask alpha) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace entrench
