#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "entrench/entrenchment.hpp"
#include "entrench/formula.hpp"
#include "entrench/inference.hpp"
#include "entrench/relation_matrix.hpp"
#include "entrench/verdict.hpp"

namespace entrench {

/// A consequence relation on the algebra, queried pointwise.
class InferenceService {
 public:
  enum class Provenance { engine, derived_n, external_table };

  /// Maxiconsistent inference of `engine`.
  static InferenceService from_engine(InferenceEngine engine);
  static InferenceService from_function(Vocabulary vocab, std::function<bool(TruthMask, TruthMask)> query,
                                        Provenance provenance);
  /// Row a, column b holds a |~ b. n <= 3.
  static InferenceService from_table(Vocabulary vocab, RelationMatrix relation);

  bool query(TruthMask a, TruthMask b) const { return query_(a, b); }

  const Vocabulary& vocabulary() const { return *vocab_; }
  Algebra algebra() const { return vocab_->algebra(); }
  Provenance provenance() const { return provenance_; }
  /// Source engine for engine services, otherwise nullptr.
  const InferenceEngine* engine() const { return engine_.get(); }

 private:
  InferenceService(std::shared_ptr<const Vocabulary> vocab, std::function<bool(TruthMask, TruthMask)> query,
                   Provenance provenance, std::shared_ptr<const InferenceEngine> engine)
      : vocab_(std::move(vocab)), query_(std::move(query)), provenance_(provenance), engine_(std::move(engine)) {}

  std::shared_ptr<const Vocabulary> vocab_;
  std::function<bool(TruthMask, TruthMask)> query_;
  Provenance provenance_;
  std::shared_ptr<const InferenceEngine> engine_;
};

std::string to_string(InferenceService::Provenance p);

/// a |~ b iff !a | !b <= !a.
InferenceService n_translate(const EntrenchmentOracle& o);
/// a <= b iff (!a | !b) |~ !a. Memoized for n <= 3.
EntrenchmentOracle p_translate(const InferenceService& s);
/// a <= b iff a & b is valid or !(a & b) does not infer a, so the most
/// normal worlds refuting one of them include a world refuting a. Recovers the
/// connected ordering of a rational relation. Memoized for n <= 3.
EntrenchmentOracle gm_translate(const InferenceService& s);

/// Inference of a connected entrenchment: top <= !alpha, or alpha together
/// with every x strictly above !alpha entails gamma. Throws VocabularyTooLarge
/// beyond the enumeration cap.
bool connected_infer(const EntrenchmentOracle& o, TruthMask alpha, TruthMask gamma);

struct Conditional {
  Formula antecedent;
  Formula consequent;
};

struct ConditionalKB {
  Vocabulary vocab;
  std::vector<Conditional> conditionals;
};

struct KbReport {
  struct Entry {
    Conditional conditional;
    bool holds = false;
  };
  std::vector<Entry> entries;
  /// The compiled ordering is the inconsistent one: everything infers false.
  bool inconsistent = false;
  Verdict weak_disjunction;
};

struct CompiledKB {
  GeneratorBase base;
  KbReport report;
};

/// One generator (!a | !b, !a) per conditional a |~ b, then a report of which
/// conditionals the closure actually supports. Experimental: the translation
/// is not complete for partial orders, so nothing here is a failure.
CompiledKB compile_kb(const ConditionalKB& kb, ScanMode mode = ScanMode::exhaustive());

}  // namespace entrench
