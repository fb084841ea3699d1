#include <algorithm>

#include "doctest.h"
#include "entrench/audit.hpp"
#include "entrench/errors.hpp"
#include "entrench/inference.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace entrench;
using fixture::mask;

namespace {

TruthMask T(std::uint32_t b) { return TruthMask{b}; }

std::vector<std::uint32_t> bits(const std::vector<FilterMin>& v) {
  std::vector<std::uint32_t> out;
  for (auto f : v) out.push_back(f.c.bits);
  return out;
}

std::vector<std::uint32_t> bits(const std::vector<TruthMask>& v) {
  std::vector<std::uint32_t> out;
  for (auto m : v) out.push_back(m.bits);
  return out;
}

oracle::Relation relation_of(const EntrenchmentOracle& o, int n) {
  oracle::Relation rel(n);
  for (std::uint32_t a = 0; a < rel.size; ++a)
    for (std::uint32_t b = 0; b < rel.size; ++b)
      if (o.leq(T(a), T(b))) rel.set(a, b);
  return rel;
}

const InferenceEngine& bird_engine() {
  static const InferenceEngine e(EntrenchmentOracle::closure(fixture::figure1()));
  return e;
}

const oracle::Relation& bird_relation() {
  static const oracle::Relation r = oracle::least_entrenchment(3, fixture::raw_pairs(fixture::figure1()));
  return r;
}

}  // namespace

TEST_CASE("coherence on the bird base") {
  const auto& e = bird_engine();
  const Vocabulary v = fixture::pbf();
  CHECK(e.coherent(T(mask("f -> b", v)), T(mask("p", v))));
  CHECK_FALSE(e.coherent(T(mask("f", v)), T(mask("p", v))));
  for (std::uint32_t a = 1; a < 256; ++a) CHECK_FALSE(e.coherent(T(0), T(a)));
}

TEST_CASE("filters match the definitional scan") {
  const auto& e = bird_engine();
  CHECK(bits(e.filters()) == oracle::filters(bird_relation()));
  CHECK(e.is_filter(T(0x40)));
  CHECK(e.is_filter(T(0x04)));
  CHECK(e.is_filter(T(0x01)));
  CHECK_FALSE(e.is_filter(T(0xFF)));
  CHECK_FALSE(e.is_filter(T(0x00)));

  const Vocabulary one({"p"});
  const InferenceEngine empty(EntrenchmentOracle::closure(GeneratorBase(one, {})));
  CHECK(bits(empty.filters()) == std::vector<std::uint32_t>{1, 2, 3});
  const InferenceEngine collapsed(
      EntrenchmentOracle::closure(GeneratorBase(one, {{Formula::truth(), Formula::falsity()}})));
  CHECK(collapsed.filters().empty());
}

TEST_CASE("maximal bases and extensions of the bird base") {
  const auto& e = bird_engine();
  const auto& rel = bird_relation();
  const Vocabulary v = fixture::pbf();
  const TruthMask p = T(mask("p", v));

  // Reference values come from the definitional oracle.
  CHECK(bits(e.maximal_bases(p)) == oracle::maximal_bases(rel, p.bits));
  CHECK(bits(e.maximal_bases(p)) == std::vector<std::uint32_t>{0x09, 0x0C, 0x18, 0x48});
  CHECK(bits(e.extensions(p)) == std::vector<std::uint32_t>{0x08});
  CHECK(e.sceptical_extension(p).bits == 0x08);

  CHECK(bits(e.maximal_bases(T(0xFF))) == oracle::maximal_bases(rel, 0xFF));
  CHECK(bits(e.extensions(T(0xFF))) == oracle::extensions(rel, 0xFF));
  // The two narrated theories (!b&!f&!p and b&f&!p) are present, as are
  // b&!f&!p and the two-valuation theory (p&b&!f) | (!p&!b&f).
  CHECK(bits(e.extensions(T(0xFF))) == std::vector<std::uint32_t>{0x01, 0x04, 0x18, 0x40});
  CHECK(e.sceptical_extension(T(0xFF)).bits == 0x5D);

  CHECK(e.maximal_bases(T(0)).empty());
  CHECK(e.extensions(T(0)).empty());
  CHECK(e.sceptical_extension(T(0)).bits == 0);
}

TEST_CASE("inference queries on the bird base") {
  const auto& e = bird_engine();
  const Vocabulary v = fixture::pbf();
  const InferenceResult r = e.infer(parse("p", v), parse("b", v));
  CHECK(r.verdict);
  CHECK(bits(r.extensions) == std::vector<std::uint32_t>{0x08});
  CHECK(r.sceptical_min.bits == 0x08);
  CHECK(bits(r.maximal_bases).size() == 4);
  CHECK(e.infer(parse("p", v), parse("!f", v)).verdict);
  // The two-valuation extension contains a p-world, so !p is not sceptical.
  CHECK_FALSE(e.infer(parse("true", v), parse("!p", v)).verdict);
  CHECK(e.infer(parse("true", v), parse("p -> b", v)).verdict);
  CHECK(e.infer(parse("true", v), parse("p -> !f", v)).verdict);
  CHECK_FALSE(e.infer(parse("true", v), parse("f -> b", v)).verdict);
  for (std::uint32_t b = 0; b < 256; ++b) CHECK(e.infer(T(0), T(b)));
}

TEST_CASE("infer matches the definitional oracle on every pair of the bird base") {
  const auto& e = bird_engine();
  const auto& rel = bird_relation();
  for (std::uint32_t a = 0; a < 256; a += 3) {
    const auto ext = oracle::extensions(rel, a);
    CHECK(bits(e.extensions(T(a))) == ext);
    for (std::uint32_t b = 0; b < 256; ++b) CHECK(e.infer(T(a), T(b)) == oracle::infer(rel, a, b));
  }
}

TEST_CASE("engine agrees with the definitional oracle on random bases at n = 2") {
  const Vocabulary v({"p", "q"});
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto o = EntrenchmentOracle::closure(random_base(seed, v));
    const InferenceEngine e(o);
    const oracle::Relation rel = relation_of(o, 2);
    CHECK(bits(e.filters()) == oracle::filters(rel));
    for (std::uint32_t a = 0; a < 16; ++a) {
      CHECK(bits(e.maximal_bases(T(a))) == oracle::maximal_bases(rel, a));
      for (std::uint32_t b = 0; b < 16; ++b) CHECK(e.infer(T(a), T(b)) == oracle::infer(rel, a, b));
    }
  }
}

TEST_CASE("result invariants") {
  const auto& e = bird_engine();
  for (std::uint32_t a = 0; a < 256; ++a) {
    std::uint32_t joined = 0;
    std::vector<std::uint32_t> expected;
    for (auto c : e.maximal_bases(T(a))) expected.push_back(c.c.bits & a);
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    const auto ext = bits(e.extensions(T(a)));
    CHECK(ext == expected);
    for (auto x : ext) {
      CHECK(oracle::subset_of(x, a));
      joined |= x;
    }
    CHECK(e.sceptical_extension(T(a)).bits == joined);
    // bases(a) via the mask shortcut equals bases(a) via coherence of every member.
    for (auto c : e.bases(T(a))) {
      for (std::uint32_t x = 0; x < 256; x += 5)
        if (oracle::subset_of(c.c.bits, x)) CHECK(e.coherent(T(x), T(a)));
    }
  }
}

TEST_CASE("empty chain agrees") {
  const auto& e = bird_engine();
  const Vocabulary v = fixture::pbf();
  CHECK(e.empty_chain_check(T(mask("p & f", v))).pass);
  CHECK(e.empty_chain_check(T(0)).pass);
  CHECK(e.empty_chain_check(T(0xFF)).pass);
  CHECK_FALSE(e.extensions(T(0xFF)).empty());
  for (std::uint32_t a = 0; a < 256; ++a) CHECK(e.empty_chain_check(T(a)).pass);
}

TEST_CASE("inference engine caps") {
  const Vocabulary four({"a", "b", "c", "d"});
  CHECK_NOTHROW(InferenceEngine(EntrenchmentOracle::closure(GeneratorBase(four, {}))));
  const auto closure = EntrenchmentOracle::closure(GeneratorBase(four, {}));
  CHECK_THROWS_AS(InferenceEngine(EntrenchmentOracle::derived(
                      four, [closure](TruthMask a, TruthMask b) { return closure.leq(a, b); }, "x")),
                  VocabularyTooLarge);
}
