#include "doctest.h"
#include "entrench/audit.hpp"
#include "entrench/errors.hpp"
#include "fixtures.hpp"

using namespace entrench;

namespace {

TruthMask T(std::uint32_t b) { return TruthMask{b}; }

const Verdict& find(const std::vector<Verdict>& vs, const std::string& law) {
  for (const auto& v : vs)
    if (v.law == law) return v;
  FAIL("missing law " << law);
  throw;
}

const Vocabulary& two() {
  static const Vocabulary v({"p", "q"});
  return v;
}

}  // namespace

TEST_CASE("random_base is deterministic per seed") {
  const GeneratorBase a = random_base(1, two());
  const GeneratorBase b = random_base(1, two());
  const GeneratorBase c = random_base(2, two());
  CHECK(a.pairs() == b.pairs());
  CHECK(a.pairs().size() == 3);
  CHECK(a.pairs() != c.pairs());
  CHECK(validate_axioms(EntrenchmentOracle::closure(a)).pass);
}

TEST_CASE("system P on the bird base, sampled") {
  const auto s = InferenceService::from_engine(InferenceEngine(EntrenchmentOracle::closure(fixture::figure1())));
  const auto vs = check_system_p(s, ScanMode::sampled(42, 20000));
  CHECK(vs.size() == 8);
  for (const auto& v : vs) CHECK_MESSAGE(v.pass, v.law);
}

TEST_CASE("system P fails on a corrupted service") {
  const Vocabulary one({"p"});
  const auto src = InferenceService::from_engine(InferenceEngine(EntrenchmentOracle::closure(GeneratorBase(one, {}))));
  // Classical consequence with a single pair removed breaks supraclassicality.
  const auto s = InferenceService::from_function(
      one, [src](TruthMask a, TruthMask b) { return !(a.bits == 3 && b.bits == 3) && src.query(a, b); },
      InferenceService::Provenance::external_table);
  const auto vs = check_system_p(s);
  CHECK_FALSE(all_pass(vs));
  CHECK_FALSE(find(vs, "supraclassicality").pass);
  CHECK_FALSE(find(vs, "supraclassicality").counterexamples.empty());
}

TEST_CASE("guards refuse unsuitable orderings") {
  CHECK_THROWS_AS(check_connected_laws(EntrenchmentOracle::closure(fixture::figure1())), ConnectivityRequired);
  CHECK_THROWS_AS(check_wd_laws(fixture::example5()), WeakDisjunctionRequired);
}

TEST_CASE("connected laws on a chain and on ranked tables") {
  const Vocabulary one({"p"});
  const auto chain = EntrenchmentOracle::closure(GeneratorBase(one, {{parse("!p", one), Formula::falsity()}}));
  CHECK(all_pass(check_connected_laws(chain)));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) CHECK(all_pass(check_connected_laws(random_connected_oracle(seed, two()))));
}

TEST_CASE("weak disjunction laws on P of the engine") {
  const auto s = InferenceService::from_engine(InferenceEngine(EntrenchmentOracle::closure(random_base(5, two()))));
  CHECK(all_pass(check_wd_laws(p_translate(s))));
}

TEST_CASE("the literal max-base overlap statement is refuted at (true, b)") {
  const InferenceEngine e(EntrenchmentOracle::closure(fixture::figure1()));
  const Vocabulary v = fixture::pbf();
  const TruthMask top = T(0xFF), b = T(fixture::mask("b", v));
  CHECK(b.bits == 0xCC);
  const auto left = e.maximal_bases(top);
  const auto right = e.maximal_bases(meet(top, b));
  bool overlap = false;
  for (auto x : left)
    for (auto y : right) overlap = overlap || x == y;
  // Printed reading: top |~ b iff the bases overlap. Overlap holds but the inference does not.
  CHECK(overlap);
  CHECK_FALSE(e.infer(top, b));
  // Corrected reading: not (top |~ !b) iff overlap.
  CHECK_FALSE(e.infer(top, v.algebra().complement(b)));
}

TEST_CASE("identity batteries on random bases at n = 2") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto o = EntrenchmentOracle::closure(random_base(seed, two()));
    for (auto suite : {IdentitySuite::lemma1, IdentitySuite::roundtrips, IdentitySuite::theorem6,
                       IdentitySuite::empty_chain, IdentitySuite::oracle_equivalence}) {
      const auto vs = check_identities(suite, o);
      CHECK_MESSAGE(all_pass(vs), to_string(suite) << " seed " << seed);
    }
  }
}

TEST_CASE("all_pass ignores informational verdicts") {
  Verdict ok("a", ScanMode::exhaustive());
  Verdict info("b", ScanMode::exhaustive());
  info.record("x", {});
  info.informational = true;
  CHECK(all_pass({ok, info}));
  info.informational = false;
  CHECK_FALSE(all_pass({ok, info}));
}
