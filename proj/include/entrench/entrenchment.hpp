#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "entrench/formula.hpp"
#include "entrench/relation_matrix.hpp"
#include "entrench/truth_mask.hpp"
#include "entrench/verdict.hpp"

namespace entrench {

/// One constraint `lower <= upper`.
struct Generator {
  Formula lower;
  Formula upper;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Finite set of entrenchment constraints. The pair list is kept verbatim;
/// `mask_pairs()` is its semantic de-duplication.
class GeneratorBase {
 public:
  GeneratorBase(Vocabulary vocab, std::vector<Generator> pairs);

  const Vocabulary& vocabulary() const { return vocab_; }
  const std::vector<Generator>& pairs() const { return pairs_; }
  const std::vector<std::pair<TruthMask, TruthMask>>& mask_pairs() const { return masks_; }

 private:
  Vocabulary vocab_;
  std::vector<Generator> pairs_;
  std::vector<std::pair<TruthMask, TruthMask>> masks_;
};

/// Fixpoint of: m := seed; while some constraint l <= r has m |- l and not
/// m |- r, set m := m & r. The result is the meet of the up-set of `seed` in
/// the least partial entrenchment containing `base`, so
/// leq(seed, x) iff closure_meet(seed) |- x.
TruthMask closure_meet(TruthMask seed, const GeneratorBase& base);
TruthMask closure_meet(TruthMask seed, const std::vector<std::pair<TruthMask, TruthMask>>& pairs);

namespace detail {
class OracleBackend;
}

/// Decision service for an entrenchment relation over the Lindenbaum algebra.
/// Immutable and cheap to copy; `leq` is safe to call concurrently.
///
/// - closure: the least partial entrenchment containing a GeneratorBase.
/// - table: an explicit relation (n <= 3); carries no guarantee, run
///   validate_axioms before using it for inference.
/// - derived: computed from an inference relation (see bridge.hpp).
class EntrenchmentOracle {
 public:
  enum class Backend { closure, table, derived };

  static EntrenchmentOracle closure(GeneratorBase base);
  static EntrenchmentOracle table(Vocabulary vocab, RelationMatrix relation);
  static EntrenchmentOracle derived(Vocabulary vocab, std::function<bool(TruthMask, TruthMask)> leq,
                                    std::string provenance);

  bool leq(TruthMask a, TruthMask b) const;
  bool strict(TruthMask a, TruthMask b) const { return leq(a, b) && !leq(b, a); }

  Backend backend() const;
  const std::string& provenance() const;
  const Vocabulary& vocabulary() const;
  Algebra algebra() const { return vocabulary().algebra(); }

  /// Generator base of a closure oracle, otherwise nullptr.
  const GeneratorBase* base() const;
  /// Relation of a table oracle, otherwise nullptr.
  const RelationMatrix* table() const;
  /// closure_meet of a closure oracle (cached for n <= 4).
  TruthMask closure_meet(TruthMask seed) const;

  /// The inconsistent ordering (everything below everything) iff top <= bottom.
  bool inconsistent() const { return leq(algebra().top(), algebra().bottom()); }

 private:
  explicit EntrenchmentOracle(std::shared_ptr<const detail::OracleBackend> impl)
      : impl_(std::move(impl)) {}

  std::shared_ptr<const detail::OracleBackend> impl_;
};

/// Full relation as a matrix. Throws VocabularyTooLarge for n > 3.
RelationMatrix materialize(const EntrenchmentOracle& o);

/// Least partial entrenchment containing `base`, by direct saturation of the
/// Dominance, Transitivity and Conjunction rules. Independent of closure_meet.
/// Throws VocabularyTooLarge for n > 3.
EntrenchmentOracle closure_table(const GeneratorBase& base);

/// `c` is the minimum of the filter it generates: leq(c, x) implies c |- x.
/// Closure oracles use the fixpoint test; other backends scan the algebra
/// (n <= 3, otherwise VocabularyTooLarge).
bool is_stable(TruthMask c, const EntrenchmentOracle& o);

/// Dominance over all pairs; Transitivity and Conjunction over all (or sampled)
/// triples. Witness labels name the violated axiom.
Verdict validate_axioms(const EntrenchmentOracle& o, ScanMode mode = ScanMode::exhaustive());

enum class StructureProperty { connectivity, weak_disjunction, splitting };

std::string to_string(StructureProperty p);

/// Connectivity (pairs), Weak Disjunction and Splitting (triples).
Verdict structure_check(const EntrenchmentOracle& o, StructureProperty property,
                        ScanMode mode = ScanMode::exhaustive());

/// Subset-entailment order: a <= b iff every B subset of `d` that entails a
/// also entails b (the empty conjunction being true). n <= 3.
EntrenchmentOracle subset_order_oracle(const std::vector<Formula>& d, const Vocabulary& vocab);

/// Connected entrenchment from a ranking of valuations: a <= b iff the most
/// plausible countermodel of a is at least as plausible as that of b.
/// `ranks[v]` is the rank of valuation v; a missing countermodel ranks above all.
EntrenchmentOracle ranked_oracle(const Vocabulary& vocab, const std::vector<int>& ranks);

}  // namespace entrench
