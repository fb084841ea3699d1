#include "entrench/bridge.hpp"

#include <atomic>

#include "entrench/errors.hpp"

namespace entrench {

namespace {

/// Thread-safe boolean cache over mask pairs; concurrent fills are idempotent.
class PairMemo {
 public:
  explicit PairMemo(const Algebra& alg)
      : size_(alg.variables() <= 3 ? alg.size() : 0),
        cells_(size_ ? std::make_unique<std::atomic<std::uint8_t>[]>(size_ * size_) : nullptr) {
    for (std::uint64_t i = 0; i < size_ * size_; ++i) cells_[i].store(0, std::memory_order_relaxed);
  }

  template <class Fn>
  bool get(TruthMask a, TruthMask b, Fn&& compute) {
    if (!size_) return compute();
    auto& cell = cells_[a.bits * size_ + b.bits];
    const std::uint8_t v = cell.load(std::memory_order_relaxed);
    if (v) return v == 2;
    const bool r = compute();
    cell.store(r ? 2 : 1, std::memory_order_relaxed);
    return r;
  }

 private:
  std::uint64_t size_;
  std::unique_ptr<std::atomic<std::uint8_t>[]> cells_;
};

}  // namespace

InferenceService InferenceService::from_engine(InferenceEngine engine) {
  auto e = std::make_shared<const InferenceEngine>(std::move(engine));
  auto vocab = std::make_shared<const Vocabulary>(e->oracle().vocabulary());
  return InferenceService(
      vocab, [e](TruthMask a, TruthMask b) { return e->infer(a, b); }, Provenance::engine, e);
}

InferenceService InferenceService::from_function(Vocabulary vocab,
                                                 std::function<bool(TruthMask, TruthMask)> query,
                                                 Provenance provenance) {
  return InferenceService(std::make_shared<const Vocabulary>(std::move(vocab)), std::move(query), provenance,
                          nullptr);
}

InferenceService InferenceService::from_table(Vocabulary vocab, RelationMatrix relation) {
  if (vocab.size() > 3) throw VocabularyTooLarge("inference tables need n <= 3");
  if (relation.elements() != vocab.algebra().size())
    throw Error("inference table size does not match the vocabulary");
  auto table = std::make_shared<const RelationMatrix>(std::move(relation));
  return from_function(
      std::move(vocab), [table](TruthMask a, TruthMask b) { return table->test(a, b); },
      Provenance::external_table);
}

std::string to_string(InferenceService::Provenance p) {
  switch (p) {
    case InferenceService::Provenance::engine: return "engine";
    case InferenceService::Provenance::derived_n: return "derived-N";
    case InferenceService::Provenance::external_table: return "external-table";
  }
  return "?";
}

InferenceService n_translate(const EntrenchmentOracle& o) {
  const Algebra alg = o.algebra();
  return InferenceService::from_function(
      o.vocabulary(),
      [o, alg](TruthMask a, TruthMask b) {
        const TruthMask not_a = alg.complement(a);
        return o.leq(join(not_a, alg.complement(b)), not_a);
      },
      InferenceService::Provenance::derived_n);
}

EntrenchmentOracle p_translate(const InferenceService& s) {
  const Algebra alg = s.algebra();
  auto memo = std::make_shared<PairMemo>(alg);
  return EntrenchmentOracle::derived(
      s.vocabulary(),
      [s, alg, memo](TruthMask a, TruthMask b) {
        return memo->get(a, b, [&] {
          const TruthMask not_a = alg.complement(a);
          return s.query(join(not_a, alg.complement(b)), not_a);
        });
      },
      "P(" + to_string(s.provenance()) + ")");
}

EntrenchmentOracle gm_translate(const InferenceService& s) {
  const Algebra alg = s.algebra();
  auto memo = std::make_shared<PairMemo>(alg);
  return EntrenchmentOracle::derived(
      s.vocabulary(),
      [s, alg, memo](TruthMask a, TruthMask b) {
        return memo->get(a, b, [&] {
          const TruthMask both = meet(a, b);
          return alg.is_top(both) || !s.query(alg.complement(both), a);
        });
      },
      "GM(" + to_string(s.provenance()) + ")");
}

bool connected_infer(const EntrenchmentOracle& o, TruthMask alpha, TruthMask gamma) {
  const Algebra alg = o.algebra();
  if (alg.variables() > kEnumerationLimit)
    throw VocabularyTooLarge("connected_infer enumerates the algebra; needs n <= 4");
  const TruthMask not_alpha = alg.complement(alpha);
  if (o.leq(alg.top(), not_alpha)) return true;
  TruthMask above = alg.top();
  for (std::uint64_t i = 0; i < alg.size(); ++i) {
    const TruthMask x = alg.element(i);
    if (o.strict(not_alpha, x)) above = meet(above, x);
  }
  return entails(meet(above, alpha), gamma);
}

namespace {

Formula negate(const Formula& f) {
  return f.connective() == Connective::negation ? f.operand(0) : Formula::negation(f);
}

}  // namespace

CompiledKB compile_kb(const ConditionalKB& kb, ScanMode mode) {
  std::vector<Generator> pairs;
  for (const auto& c : kb.conditionals) {
    Formula not_a = negate(c.antecedent);
    pairs.push_back({Formula::disjunction(not_a, negate(c.consequent)), not_a});
  }
  GeneratorBase base(kb.vocab, std::move(pairs));
  const EntrenchmentOracle o = EntrenchmentOracle::closure(base);
  const InferenceEngine engine(o);

  KbReport report;
  report.inconsistent = o.inconsistent();
  for (const auto& c : kb.conditionals)
    report.entries.push_back({c, engine.infer(c.antecedent, c.consequent).verdict});
  const Algebra alg = o.algebra();
  if (!mode.is_sampled() && alg.variables() > kTripleScanLimit) mode = ScanMode::sampled(0);
  report.weak_disjunction = structure_check(o, StructureProperty::weak_disjunction, mode);
  return {std::move(base), std::move(report)};
}

}  // namespace entrench
