#include "doctest.h"
#include "entrench/audit.hpp"
#include "entrench/entrenchment.hpp"
#include "entrench/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace entrench;
using fixture::mask;

namespace {

TruthMask T(std::uint32_t b) { return TruthMask{b}; }

Vocabulary vocab_of(int n) {
  std::vector<std::string> names{"p", "q", "r"};
  names.resize(static_cast<std::size_t>(n));
  return Vocabulary(names);
}

}  // namespace

TEST_CASE("closure_meet on the bird base") {
  const GeneratorBase base = fixture::figure1();
  // (p -> b) & (p -> !f) is 0xdd & 0x5f = 0x5d; 0x5f is p -> !f alone.
  CHECK(closure_meet(T(0xFF), base).bits == 0x5D);
  CHECK(closure_meet(T(0xF0), base).bits == 0x40);
  CHECK(closure_meet(T(0xAA), base).bits == 0x00);
  const auto table = materialize(closure_table(base));
  for (std::uint32_t seed : {0xFFu, 0xF0u, 0xAAu}) {
    const std::uint32_t got = closure_meet(T(seed), base).bits;
    for (std::uint32_t x = 0; x < 256; ++x) CHECK(table.test(T(seed), T(x)) == oracle::subset_of(got, x));
  }
}

TEST_CASE("leq and strict on the bird base") {
  const auto o = EntrenchmentOracle::closure(fixture::figure1());
  const Vocabulary v = fixture::pbf();
  CHECK(o.leq(T(mask("f", v)), T(mask("!p", v))));
  CHECK_FALSE(o.leq(T(mask("!p", v)), T(mask("f", v))));
  CHECK(o.strict(T(mask("f", v)), T(mask("!p", v))));
  CHECK(o.strict(T(0x00), T(0xFF)));
  for (std::uint32_t a = 0; a < 256; ++a) {
    CHECK(o.leq(T(a), T(a)));
    CHECK_FALSE(o.strict(T(a), T(a)));
  }
  CHECK_FALSE(o.inconsistent());
  CHECK(o.backend() == EntrenchmentOracle::Backend::closure);
  REQUIRE(o.base() != nullptr);
  CHECK(o.table() == nullptr);
}

TEST_CASE("is_stable on the bird base") {
  const auto o = EntrenchmentOracle::closure(fixture::figure1());
  CHECK(is_stable(T(0x40), o));
  CHECK_FALSE(is_stable(T(0xFF), o));
  CHECK(is_stable(T(0x00), o));
  // Table backend answers the same through its full scan.
  const auto t = closure_table(fixture::figure1());
  for (std::uint32_t c = 0; c < 256; ++c) CHECK(is_stable(T(c), o) == is_stable(T(c), t));
}

TEST_CASE("closure_table reference cases") {
  const Vocabulary v = vocab_of(2);
  const auto empty = materialize(closure_table(GeneratorBase(v, {})));
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b) CHECK(empty.test(T(a), T(b)) == oracle::subset_of(a, b));

  const GeneratorBase collapse(v, {{Formula::truth(), Formula::falsity()}});
  const auto all = materialize(closure_table(collapse));
  CHECK(all.count() == 16u * 16u);
  CHECK(EntrenchmentOracle::closure(collapse).inconsistent());

  CHECK_THROWS_AS(closure_table(GeneratorBase(Vocabulary({"a", "b", "c", "d"}), {})), VocabularyTooLarge);
}

TEST_CASE("closure_meet and closure_table match the naive saturation at n <= 2") {
  for (int n = 1; n <= 2; ++n)
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const GeneratorBase base = random_base(seed, vocab_of(n));
      const oracle::Relation ref = oracle::least_entrenchment(n, fixture::raw_pairs(base));
      const auto o = EntrenchmentOracle::closure(base);
      const auto t = materialize(closure_table(base));
      for (std::uint32_t a = 0; a < ref.size; ++a)
        for (std::uint32_t b = 0; b < ref.size; ++b) {
          CHECK(o.leq(T(a), T(b)) == ref(a, b));
          CHECK(t.test(T(a), T(b)) == ref(a, b));
        }
    }
}

TEST_CASE("fixpoint is monotone and the stability tests agree at n <= 2") {
  for (int n = 1; n <= 2; ++n)
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const GeneratorBase base = random_base(seed, vocab_of(n));
      const auto o = EntrenchmentOracle::closure(base);
      const auto derived = EntrenchmentOracle::derived(
          base.vocabulary(), [o](TruthMask a, TruthMask b) { return o.leq(a, b); }, "copy");
      const std::uint32_t size = 1u << (1u << n);
      for (std::uint32_t a = 0; a < size; ++a) {
        for (std::uint32_t b = 0; b < size; ++b)
          if (oracle::subset_of(a, b))
            CHECK(entails(closure_meet(T(a), base), closure_meet(T(b), base)));
        const bool fast = closure_meet(T(a), base).bits == a;
        CHECK(is_stable(T(a), o) == fast);
        CHECK(is_stable(T(a), derived) == fast);
        if (fast)
          for (std::uint32_t x = 0; x < size; ++x) CHECK(o.leq(T(a), T(x)) == oracle::subset_of(a, x));
      }
    }
}

TEST_CASE("validate_axioms holds on closures of random bases") {
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const auto o = EntrenchmentOracle::closure(random_base(seed, vocab_of(n)));
      const ScanMode mode = n == 3 ? ScanMode::sampled(seed, 20000) : ScanMode::exhaustive();
      const Verdict v = validate_axioms(o, mode);
      CHECK_MESSAGE(v.pass, "n=" << n << " seed=" << seed);
    }
}

TEST_CASE("validate_axioms on fixtures and a broken table") {
  CHECK(validate_axioms(EntrenchmentOracle::closure(fixture::figure1())).pass);
  CHECK(validate_axioms(fixture::example5()).pass);

  const Vocabulary v = vocab_of(1);
  RelationMatrix broken(4);
  broken.set(T(mask("p", v)), T(0));
  const Verdict bad = validate_axioms(EntrenchmentOracle::table(v, broken));
  CHECK_FALSE(bad.pass);
  REQUIRE_FALSE(bad.counterexamples.empty());
  CHECK(bad.counterexamples.front().label == "dominance");
  CHECK(bad.counterexamples.size() <= kMaxCounterexamples);
}

TEST_CASE("verdicts are reproducible under sampling") {
  const auto o = EntrenchmentOracle::closure(fixture::figure1());
  const Verdict a = structure_check(o, StructureProperty::weak_disjunction, ScanMode::sampled(9, 5000));
  const Verdict b = structure_check(o, StructureProperty::weak_disjunction, ScanMode::sampled(9, 5000));
  CHECK(a.instances == 5000);
  CHECK(a.pass == b.pass);
  CHECK(a.counterexamples == b.counterexamples);
  CHECK_THROWS_AS(structure_check(EntrenchmentOracle::closure(GeneratorBase(Vocabulary({"a", "b", "c", "d"}), {})),
                                  StructureProperty::splitting),
                  VocabularyTooLarge);
}

TEST_CASE("subset order over {phi, phi | psi | chi}") {
  const auto o = fixture::example5();
  const Vocabulary v = fixture::phi_psi_chi();
  CHECK(o.leq(T(mask("phi | psi", v)), T(mask("phi", v))));
  CHECK(o.leq(T(mask("phi | chi", v)), T(mask("phi", v))));
  CHECK_FALSE(o.leq(T(mask("phi | psi | chi", v)), T(mask("phi", v))));
  for (std::uint32_t a = 0; a < 256; ++a) CHECK(o.leq(T(a), T(0xFF)));

  const Verdict wd = structure_check(o, StructureProperty::weak_disjunction);
  CHECK_FALSE(wd.pass);
  // The textbook triple (!phi, psi, chi) is among the violations.
  const TruthMask a = T(mask("!phi", v)), b = T(mask("psi", v)), c = T(mask("chi", v));
  const Algebra alg = v.algebra();
  CHECK(o.leq(alg.arrow(a, b), alg.complement(a)));
  CHECK(o.leq(alg.arrow(a, c), alg.complement(a)));
  CHECK_FALSE(o.leq(alg.arrow(a, join(b, c)), alg.complement(a)));
}

TEST_CASE("connectivity fails on the bird base") {
  const auto o = EntrenchmentOracle::closure(fixture::figure1());
  const Vocabulary v = fixture::pbf();
  CHECK_FALSE(o.leq(T(mask("f -> b", v)), T(mask("!p", v))));
  CHECK_FALSE(o.leq(T(mask("!p", v)), T(mask("f -> b", v))));
  CHECK_FALSE(structure_check(o, StructureProperty::connectivity).pass);
}

TEST_CASE("ranked oracles are connected entrenchments") {
  const Vocabulary v = vocab_of(2);
  const auto o = ranked_oracle(v, {2, 0, 1, 0});
  CHECK(validate_axioms(o).pass);
  CHECK(structure_check(o, StructureProperty::connectivity).pass);
  // Connected orders need not be weakly disjunctive: here valuations 1 and 3
  // tie at the lowest rank.
  CHECK_FALSE(structure_check(o, StructureProperty::weak_disjunction).pass);
}
