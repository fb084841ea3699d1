#include "entrench/entrenchment.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <optional>

#include "entrench/errors.hpp"

namespace entrench {

// ---------------------------------------------------------------------------
// GeneratorBase

GeneratorBase::GeneratorBase(Vocabulary vocab, std::vector<Generator> pairs)
    : vocab_(std::move(vocab)), pairs_(std::move(pairs)) {
  for (const auto& g : pairs_) {
    std::pair<TruthMask, TruthMask> m{truth_mask(g.lower, vocab_), truth_mask(g.upper, vocab_)};
    if (std::find(masks_.begin(), masks_.end(), m) == masks_.end()) masks_.push_back(m);
  }
}

TruthMask closure_meet(TruthMask seed, const std::vector<std::pair<TruthMask, TruthMask>>& pairs) {
  TruthMask m = seed;
  bool fired = true;
  while (fired) {
    fired = false;
    for (const auto& [lower, upper] : pairs) {
      if (entails(m, lower) && !entails(m, upper)) {
        m = meet(m, upper);
        fired = true;
      }
    }
  }
  return m;
}

TruthMask closure_meet(TruthMask seed, const GeneratorBase& base) {
  return closure_meet(seed, base.mask_pairs());
}

// ---------------------------------------------------------------------------
// Backends

namespace detail {

class OracleBackend {
 public:
  OracleBackend(Vocabulary vocab, std::string provenance)
      : vocab_(std::move(vocab)), provenance_(std::move(provenance)) {}
  virtual ~OracleBackend() = default;

  virtual bool leq(TruthMask a, TruthMask b) const = 0;
  virtual EntrenchmentOracle::Backend kind() const = 0;

  const Vocabulary& vocabulary() const { return vocab_; }
  const std::string& provenance() const { return provenance_; }

 private:
  Vocabulary vocab_;
  std::string provenance_;
};

class ClosureBackend final : public OracleBackend {
 public:
  explicit ClosureBackend(GeneratorBase base)
      : OracleBackend(base.vocabulary(), "closure"), base_(std::move(base)) {
    const Algebra alg = vocabulary().algebra();
    if (alg.variables() <= kEnumerationLimit) {
      meets_.resize(static_cast<std::size_t>(alg.size()));
      for (std::uint64_t i = 0; i < alg.size(); ++i)
        meets_[i] = entrench::closure_meet(alg.element(i), base_).bits;
    }
  }

  TruthMask meet_of(TruthMask seed) const {
    if (!meets_.empty()) return TruthMask{meets_[seed.bits]};
    return entrench::closure_meet(seed, base_);
  }

  bool leq(TruthMask a, TruthMask b) const override { return entails(meet_of(a), b); }
  EntrenchmentOracle::Backend kind() const override { return EntrenchmentOracle::Backend::closure; }
  const GeneratorBase& base() const { return base_; }

 private:
  GeneratorBase base_;
  std::vector<std::uint32_t> meets_;
};

class TableBackend final : public OracleBackend {
 public:
  TableBackend(Vocabulary vocab, RelationMatrix relation)
      : OracleBackend(std::move(vocab), "table"), relation_(std::move(relation)) {
    if (relation_.elements() != vocabulary().algebra().size())
      throw Error("relation table size does not match the vocabulary");
  }

  bool leq(TruthMask a, TruthMask b) const override { return relation_.test(a, b); }
  EntrenchmentOracle::Backend kind() const override { return EntrenchmentOracle::Backend::table; }
  const RelationMatrix& relation() const { return relation_; }

 private:
  RelationMatrix relation_;
};

class DerivedBackend final : public OracleBackend {
 public:
  DerivedBackend(Vocabulary vocab, std::function<bool(TruthMask, TruthMask)> leq, std::string provenance)
      : OracleBackend(std::move(vocab), std::move(provenance)), leq_(std::move(leq)) {}

  bool leq(TruthMask a, TruthMask b) const override { return leq_(a, b); }
  EntrenchmentOracle::Backend kind() const override { return EntrenchmentOracle::Backend::derived; }

 private:
  std::function<bool(TruthMask, TruthMask)> leq_;
};

}  // namespace detail

EntrenchmentOracle EntrenchmentOracle::closure(GeneratorBase base) {
  return EntrenchmentOracle(std::make_shared<detail::ClosureBackend>(std::move(base)));
}

EntrenchmentOracle EntrenchmentOracle::table(Vocabulary vocab, RelationMatrix relation) {
  if (vocab.size() > 3) throw VocabularyTooLarge("table oracles need n <= 3");
  return EntrenchmentOracle(std::make_shared<detail::TableBackend>(std::move(vocab), std::move(relation)));
}

EntrenchmentOracle EntrenchmentOracle::derived(Vocabulary vocab,
                                               std::function<bool(TruthMask, TruthMask)> leq,
                                               std::string provenance) {
  return EntrenchmentOracle(
      std::make_shared<detail::DerivedBackend>(std::move(vocab), std::move(leq), std::move(provenance)));
}

bool EntrenchmentOracle::leq(TruthMask a, TruthMask b) const { return impl_->leq(a, b); }
EntrenchmentOracle::Backend EntrenchmentOracle::backend() const { return impl_->kind(); }
const std::string& EntrenchmentOracle::provenance() const { return impl_->provenance(); }
const Vocabulary& EntrenchmentOracle::vocabulary() const { return impl_->vocabulary(); }

const GeneratorBase* EntrenchmentOracle::base() const {
  auto* c = dynamic_cast<const detail::ClosureBackend*>(impl_.get());
  return c ? &c->base() : nullptr;
}

const RelationMatrix* EntrenchmentOracle::table() const {
  auto* t = dynamic_cast<const detail::TableBackend*>(impl_.get());
  return t ? &t->relation() : nullptr;
}

TruthMask EntrenchmentOracle::closure_meet(TruthMask seed) const {
  auto* c = dynamic_cast<const detail::ClosureBackend*>(impl_.get());
  if (!c) throw Error("closure_meet needs a closure oracle");
  return c->meet_of(seed);
}

RelationMatrix materialize(const EntrenchmentOracle& o) {
  if (const RelationMatrix* t = o.table()) return *t;
  const Algebra alg = o.algebra();
  if (alg.variables() > 3) throw VocabularyTooLarge("materializing a relation needs n <= 3");
  RelationMatrix m(static_cast<std::size_t>(alg.size()));
  for (std::uint64_t a = 0; a < alg.size(); ++a)
    for (std::uint64_t b = 0; b < alg.size(); ++b)
      if (o.leq(alg.element(a), alg.element(b))) m.set(alg.element(a), alg.element(b));
  return m;
}

// ---------------------------------------------------------------------------
// Rule saturation

EntrenchmentOracle closure_table(const GeneratorBase& base) {
  const Algebra alg = base.vocabulary().algebra();
  if (alg.variables() > 3) throw VocabularyTooLarge("closure_table needs n <= 3");
  const auto n = static_cast<std::uint32_t>(alg.size());
  RelationMatrix r(n);
  std::deque<std::pair<std::uint32_t, std::uint32_t>> work;
  auto add = [&](std::uint32_t a, std::uint32_t b) {
    if (r.test(TruthMask{a}, TruthMask{b})) return;
    r.set(TruthMask{a}, TruthMask{b});
    work.emplace_back(a, b);
  };

  for (std::uint32_t a = 0; a < n; ++a)  // Dominance
    for (std::uint32_t b = 0; b < n; ++b)
      if (entails(TruthMask{a}, TruthMask{b})) add(a, b);
  for (const auto& [lower, upper] : base.mask_pairs()) add(lower.bits, upper.bits);

  std::vector<std::uint32_t> row;
  while (!work.empty()) {
    const auto [c, x] = work.front();
    work.pop_front();
    row.clear();
    for (std::uint32_t y = 0; y < n; ++y)
      if (r.test(TruthMask{c}, TruthMask{y})) row.push_back(y);
    for (std::uint32_t y : row) add(c, x & y);  // Conjunction: c<=x, c<=y
    for (std::uint32_t z = 0; z < n; ++z)       // Transitivity: c<=x<=z
      if (r.test(TruthMask{x}, TruthMask{z})) add(c, z);
    for (std::uint32_t d = 0; d < n; ++d)       // Transitivity: d<=c<=x
      if (r.test(TruthMask{d}, TruthMask{c})) add(d, x);
  }
  return EntrenchmentOracle::table(base.vocabulary(), std::move(r));
}

bool is_stable(TruthMask c, const EntrenchmentOracle& o) {
  if (o.backend() == EntrenchmentOracle::Backend::closure) return o.closure_meet(c) == c;
  const Algebra alg = o.algebra();
  if (alg.variables() > 3) throw VocabularyTooLarge("stability scan needs n <= 3 for this backend");
  for (std::uint64_t i = 0; i < alg.size(); ++i) {
    const TruthMask x = alg.element(i);
    if (o.leq(c, x) && !entails(c, x)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Law scans

namespace {

/// leq through a materialized matrix when the algebra is small enough.
class FastLeq {
 public:
  explicit FastLeq(const EntrenchmentOracle& o) : o_(o) {
    if (o.algebra().variables() <= 3) m_ = materialize(o);
  }
  bool operator()(TruthMask a, TruthMask b) const { return m_ ? m_->test(a, b) : o_.leq(a, b); }

 private:
  const EntrenchmentOracle& o_;
  std::optional<RelationMatrix> m_;
};

ScanMode pair_mode(const Algebra& alg, ScanMode mode) {
  // Pair scans stay exhaustive whenever the cap allows it, even in sampled mode.
  return alg.variables() <= kPairScanLimit ? ScanMode::exhaustive() : mode;
}

}  // namespace

Verdict validate_axioms(const EntrenchmentOracle& o, ScanMode mode) {
  const Algebra alg = o.algebra();
  require_exhaustive(alg, 3, mode, "validate_axioms");
  Verdict v("axioms", mode);
  FastLeq leq(o);

  v.instances += for_each_tuple<2>(alg, pair_mode(alg, mode), [&](const auto& t) {
    if (entails(t[0], t[1]) && !leq(t[0], t[1])) v.record("dominance", {t[0], t[1]});
  });
  v.instances += for_each_tuple<3>(alg, mode, [&](const auto& t) {
    if (leq(t[0], t[1]) && leq(t[1], t[2]) && !leq(t[0], t[2]))
      v.record("transitivity", {t[0], t[1], t[2]});
  });
  v.instances += for_each_tuple<3>(alg, mode, [&](const auto& t) {
    // t = (c, a, b): c <= a and c <= b must give c <= a & b.
    if (leq(t[0], t[1]) && leq(t[0], t[2]) && !leq(t[0], meet(t[1], t[2])))
      v.record("conjunction", {t[0], t[1], t[2]});
  });
  return v;
}

std::string to_string(StructureProperty p) {
  switch (p) {
    case StructureProperty::connectivity: return "connectivity";
    case StructureProperty::weak_disjunction: return "weak_disjunction";
    case StructureProperty::splitting: return "splitting";
  }
  return "?";
}

Verdict structure_check(const EntrenchmentOracle& o, StructureProperty property, ScanMode mode) {
  const Algebra alg = o.algebra();
  Verdict v(to_string(property), mode);
  FastLeq leq(o);
  switch (property) {
    case StructureProperty::connectivity:
      require_exhaustive(alg, 2, mode, "connectivity");
      v.instances = for_each_tuple<2>(alg, mode, [&](const auto& t) {
        if (!mode.is_sampled() && t[1] < t[0]) return;
        if (!leq(t[0], t[1]) && !leq(t[1], t[0])) v.record("incomparable", {t[0], t[1]});
      });
      break;
    case StructureProperty::weak_disjunction:
      require_exhaustive(alg, 3, mode, "weak_disjunction");
      v.instances = for_each_tuple<3>(alg, mode, [&](const auto& t) {
        const TruthMask a = t[0], b = t[1], c = t[2];
        const TruthMask not_a = alg.complement(a);
        if (leq(alg.arrow(a, b), not_a) && leq(alg.arrow(a, c), not_a) &&
            !leq(alg.arrow(a, join(b, c)), not_a))
          v.record("alpha,beta,gamma", {a, b, c});
      });
      break;
    case StructureProperty::splitting:
      require_exhaustive(alg, 3, mode, "splitting");
      v.instances = for_each_tuple<3>(alg, mode, [&](const auto& t) {
        const TruthMask a = t[0], b = t[1], c = t[2];
        if (!leq(join(a, alg.complement(b)), a) && leq(join(a, c), a) &&
            !leq(join(join(a, b), c), join(a, b)))
          v.record("alpha,beta,gamma", {a, b, c});
      });
      break;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Fixture constructions

EntrenchmentOracle subset_order_oracle(const std::vector<Formula>& d, const Vocabulary& vocab) {
  const Algebra alg = vocab.algebra();
  if (alg.variables() > 3) throw VocabularyTooLarge("subset order oracle needs n <= 3");
  if (d.size() > 16) throw Error("subset order oracle supports at most 16 generating sentences");
  std::vector<TruthMask> members;
  for (const auto& f : d) members.push_back(truth_mask(f, vocab));
  std::vector<TruthMask> subsets;  // mask of the conjunction of each B
  for (std::uint32_t s = 0; s < (1u << members.size()); ++s) {
    TruthMask m = alg.top();
    for (std::size_t i = 0; i < members.size(); ++i)
      if ((s >> i) & 1u) m = meet(m, members[i]);
    subsets.push_back(m);
  }
  RelationMatrix r(static_cast<std::size_t>(alg.size()));
  for (std::uint64_t i = 0; i < alg.size(); ++i) {
    for (std::uint64_t j = 0; j < alg.size(); ++j) {
      const TruthMask a = alg.element(i), b = alg.element(j);
      bool ok = true;
      for (TruthMask s : subsets)
        if (entails(s, a) && !entails(s, b)) {
          ok = false;
          break;
        }
      if (ok) r.set(a, b);
    }
  }
  return EntrenchmentOracle::table(vocab, std::move(r));
}

EntrenchmentOracle ranked_oracle(const Vocabulary& vocab, const std::vector<int>& ranks) {
  const Algebra alg = vocab.algebra();
  if (alg.variables() > 3) throw VocabularyTooLarge("ranked oracle needs n <= 3");
  if (ranks.size() != alg.valuations()) throw Error("ranked oracle needs one rank per valuation");
  std::vector<int> level(static_cast<std::size_t>(alg.size()), INT_MAX);
  for (std::uint64_t i = 0; i < alg.size(); ++i)
    for (std::uint32_t v = 0; v < alg.valuations(); ++v)
      if (!((i >> v) & 1u)) level[i] = std::min(level[i], ranks[v]);
  RelationMatrix r(static_cast<std::size_t>(alg.size()));
  for (std::uint64_t a = 0; a < alg.size(); ++a)
    for (std::uint64_t b = 0; b < alg.size(); ++b)
      if (level[a] <= level[b]) r.set(alg.element(a), alg.element(b));
  return EntrenchmentOracle::table(vocab, std::move(r));
}

}  // namespace entrench
