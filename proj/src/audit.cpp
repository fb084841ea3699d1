#include "entrench/audit.hpp"

#include <algorithm>
#include <random>

#include "entrench/errors.hpp"

namespace entrench {

namespace {

using MaskSet = std::vector<std::uint32_t>;

ScanMode pair_mode(const Algebra& alg, ScanMode mode) {
  return alg.variables() <= kPairScanLimit ? ScanMode::exhaustive() : mode;
}

/// Maximal bases of every antecedent, as sorted mask lists.
class MaxBaseTable {
 public:
  explicit MaxBaseTable(const InferenceEngine& e) : e_(e) {
    const auto size = static_cast<std::size_t>(e.algebra().size());
    max_.resize(size);
    join_.resize(size);
    for (std::size_t a = 0; a < size; ++a) {
      std::uint32_t j = 0;
      for (const FilterMin& f : e.maximal_bases(TruthMask{static_cast<std::uint32_t>(a)})) {
        max_[a].push_back(f.c.bits);
        j |= f.c.bits;
      }
      join_[a] = j;
    }
  }

  const MaskSet& max(TruthMask a) const { return max_[a.bits]; }
  /// Minimum of the intersection of the maximal bases; 0 when there are none.
  TruthMask meet_of_filters(TruthMask a) const { return TruthMask{join_[a.bits]}; }

  MaskSet bases(TruthMask a) const {
    MaskSet out;
    for (const FilterMin& f : e_.filters())
      if (f.c.bits & a.bits) out.push_back(f.c.bits);
    return out;
  }

  bool overlap(TruthMask a, TruthMask b) const {
    const MaskSet &x = max(a), &y = max(b);
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() && j != y.end()) {
      if (*i == *j) return true;
      if (*i < *j) ++i; else ++j;
    }
    return false;
  }

 private:
  const InferenceEngine& e_;
  std::vector<MaskSet> max_;
  std::vector<std::uint32_t> join_;
};

MaskSet set_union(const MaskSet& a, const MaskSet& b) {
  MaskSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
MaskSet set_intersection(const MaskSet& a, const MaskSet& b) {
  MaskSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
MaskSet set_difference(const MaskSet& a, const MaskSet& b) {
  MaskSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
bool subset(const MaskSet& a, const MaskSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Verdict rm_rule(const Algebra& alg, const std::function<bool(TruthMask, TruthMask)>& q, ScanMode mode) {
  Verdict v("rational_monotonicity", mode);
  v.instances = for_each_tuple<3>(alg, mode, [&](const auto& t) {
    const TruthMask a = t[0], b = t[1], g = t[2];
    if (q(a, g) && !q(a, alg.complement(b)) && !q(meet(a, b), g)) v.record("alpha,beta,gamma", {a, b, g});
  });
  return v;
}

Verdict renamed(Verdict v, std::string law) {
  v.law = std::move(law);
  return v;
}

}  // namespace

bool all_pass(const std::vector<Verdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass || v.informational; });
}

// ---------------------------------------------------------------------------

std::vector<Verdict> check_system_p(const InferenceService& s, ScanMode mode) {
  const Algebra alg = s.algebra();
  require_exhaustive(alg, 3, mode, "sysp");
  const ScanMode pairs = pair_mode(alg, mode);
  auto q = [&s](TruthMask a, TruthMask b) { return s.query(a, b); };
  std::vector<Verdict> out;

  Verdict sc("supraclassicality", pairs);
  sc.instances = for_each_tuple<2>(alg, pairs, [&](const auto& t) {
    if (entails(t[0], t[1]) && !q(t[0], t[1])) sc.record("alpha,beta", {t[0], t[1]});
  });
  out.push_back(sc);

  // Premises a |- b, b |- c, a |~ c; conclusion b |~ c.
  Verdict lle("left_logical_equivalence", mode);
  lle.instances = for_each_tuple<3>(alg, mode, [&](const auto& t) {
    if (entails(t[0], t[1]) && entails(t[1], t[2]) && q(t[0], t[2]) && !q(t[1], t[2]))
      lle.record("alpha,beta,gamma", {t[0], t[1], t[2]});
  });
  out.push_back(lle);

  Verdict rw("right_weakening", mode);
  rw.instances = for_each_tuple<3>(alg, mode, [&](const auto& t) {
    if (q(t[0], t[1]) && entails(t[1], t[2]) && !q(t[0], t[2])) rw.record("alpha,beta,gamma", {t[0], t[1], t[2]});
  });
  out.push_back(rw);

  Verdict conj("and", mode);
  conj.instances = for_each_tuple<3>(alg, mode, [&](const auto& t) {
    if (q(t[0], t[1]) && q(t[0], t[2]) && !q(t[0], meet(t[1], t[2])))
      conj.record("alpha,beta,gamma", {t[0], t[1], t[2]});
  });
  out.push_back(conj);

  Verdict cut("cut", mode);
  cut.instances = for_each_tuple<3>(alg, mode, [&](const auto& t) {
    if (q(t[0], t[1]) && q(meet(t[0], t[1]), t[2]) && !q(t[0], t[2]))
      cut.record("alpha,beta,gamma", {t[0], t[1], t[2]});
  });
  out.push_back(cut);

  Verdict cm("cautious_monotonicity", mode);
  cm.instances = for_each_tuple<3>(alg, mode, [&](const auto& t) {
    if (q(t[0], t[1]) && q(t[0], t[2]) && !q(meet(t[0], t[1]), t[2]))
      cm.record("alpha,beta,gamma", {t[0], t[1], t[2]});
  });
  out.push_back(cm);

  Verdict disj("or", mode);
  disj.instances = for_each_tuple<3>(alg, mode, [&](const auto& t) {
    if (q(t[0], t[2]) && q(t[1], t[2]) && !q(join(t[0], t[1]), t[2]))
      disj.record("alpha,beta,gamma", {t[0], t[1], t[2]});
  });
  out.push_back(disj);

  Verdict wt("weak_transitivity", mode);
  wt.instances = for_each_tuple<3>(alg, mode, [&](const auto& t) {
    const TruthMask a = t[0], b = t[1], c = t[2];
    if (q(join(a, b), a) && q(join(b, c), b) && !q(join(a, c), a)) wt.record("alpha,beta,gamma", {a, b, c});
  });
  out.push_back(wt);
  return out;
}

std::vector<Verdict> check_rational(const InferenceService& s, const InferenceEngine& engine, ScanMode mode) {
  const Algebra alg = s.algebra();
  require_exhaustive(alg, 3, mode, "rm");
  const MaxBaseTable mb(engine);
  auto q = [&s](TruthMask a, TruthMask b) { return s.query(a, b); };
  std::vector<Verdict> out;

  out.push_back(renamed(rm_rule(alg, q, mode), "rm"));

  auto filter_instance = [&](TruthMask a, TruthMask b, TruthMask g) {
    const TruthMask ab = meet(a, b);
    if (!mb.overlap(a, ab)) return true;
    if (!entails(mb.meet_of_filters(a), alg.arrow(a, g))) return true;
    return entails(mb.meet_of_filters(ab), alg.arrow(ab, g));
  };
  auto rule_instance = [&](TruthMask a, TruthMask b, TruthMask g) {
    return !(q(a, g) && !q(a, alg.complement(b))) || q(meet(a, b), g);
  };

  Verdict filter("rm_filter", mode);
  Verdict bicond("rm_biconditional", mode);
  filter.instances = for_each_tuple<3>(alg, mode, [&](const auto& t) {
    const bool f = filter_instance(t[0], t[1], t[2]);
    if (!f) filter.record("alpha,beta,gamma", {t[0], t[1], t[2]});
    if (f != rule_instance(t[0], t[1], t[2])) bicond.record("alpha,beta,gamma", {t[0], t[1], t[2]});
  });
  bicond.instances = filter.instances;
  out.push_back(filter);
  out.push_back(bicond);

  const ScanMode pairs = pair_mode(alg, mode);
  Verdict overlap("max_base_overlap", pairs);
  overlap.instances = for_each_tuple<2>(alg, pairs, [&](const auto& t) {
    if (!q(t[0], alg.complement(t[1])) != mb.overlap(t[0], meet(t[0], t[1])))
      overlap.record("alpha,beta", {t[0], t[1]});
  });
  out.push_back(overlap);
  return out;
}

std::vector<Verdict> check_connected_laws(const EntrenchmentOracle& o, ScanMode mode) {
  const Algebra alg = o.algebra();
  const ScanMode pairs = pair_mode(alg, mode);
  const Verdict connected = structure_check(o, StructureProperty::connectivity, pairs);
  if (!connected.pass) {
    const auto& w = connected.counterexamples.front().masks;
    throw ConnectivityRequired("ordering is not connected: " + alg.hex(w[0]) + " and " + alg.hex(w[1]) +
                               " are incomparable");
  }
  require_exhaustive(alg, 3, mode, "connected");
  const InferenceEngine engine(o);
  const MaxBaseTable mb(engine);
  std::vector<Verdict> out;

  Verdict single("singleton_or_empty", ScanMode::exhaustive());
  for (std::uint64_t i = 0; i < alg.size(); ++i) {
    ++single.instances;
    if (mb.max(alg.element(i)).size() > 1) single.record("alpha", {alg.element(i)});
  }
  out.push_back(single);

  Verdict incl("max_base_inclusion", pairs);
  incl.instances = for_each_tuple<2>(alg, pairs, [&](const auto& t) {
    const TruthMask ab = meet(t[0], t[1]);
    if (mb.overlap(t[0], ab) && !subset(mb.max(ab), mb.max(t[0]))) incl.record("alpha,beta", {t[0], t[1]});
  });
  out.push_back(incl);

  out.push_back(renamed(rm_rule(alg, [&](TruthMask a, TruthMask b) { return engine.infer(a, b); }, mode), "rm"));

  Verdict agree("connected_infer", pairs);
  agree.instances = for_each_tuple<2>(alg, pairs, [&](const auto& t) {
    if (connected_infer(o, t[0], t[1]) != engine.infer(t[0], t[1])) agree.record("alpha,gamma", {t[0], t[1]});
  });
  out.push_back(agree);

  const InferenceService s = InferenceService::from_engine(engine);
  const EntrenchmentOracle gm = gm_translate(s);
  const EntrenchmentOracle p = p_translate(s);
  Verdict recovers("gm_recovers_order", pairs);
  Verdict gm_p("gm_agrees_with_p", pairs);
  gm_p.informational = true;
  gm_p.note = "measured only; the two translations need not coincide";
  recovers.instances = for_each_tuple<2>(alg, pairs, [&](const auto& t) {
    const bool g = gm.leq(t[0], t[1]);
    if (g != o.leq(t[0], t[1])) recovers.record("a,b", {t[0], t[1]});
    if (g != p.leq(t[0], t[1])) gm_p.record("a,b", {t[0], t[1]});
  });
  gm_p.instances = recovers.instances;
  out.push_back(recovers);
  out.push_back(gm_p);
  return out;
}

std::vector<Verdict> check_wd_laws(const EntrenchmentOracle& o, ScanMode mode) {
  const Algebra alg = o.algebra();
  const Verdict wd = structure_check(o, StructureProperty::weak_disjunction, mode);
  if (!wd.pass) {
    const auto& w = wd.counterexamples.front().masks;
    throw WeakDisjunctionRequired("ordering is not weakly disjunctive: witness (" + alg.hex(w[0]) + ", " +
                                  alg.hex(w[1]) + ", " + alg.hex(w[2]) + ")");
  }
  const InferenceEngine engine(o);
  const MaxBaseTable mb(engine);
  const ScanMode pairs = pair_mode(alg, mode);
  std::vector<Verdict> out;

  Verdict dichotomy("wd_dichotomy", pairs);
  dichotomy.instances = for_each_tuple<2>(alg, pairs, [&](const auto& t) {
    const TruthMask yes = alg.arrow(t[0], t[1]);
    const TruthMask no = alg.arrow(t[0], alg.complement(t[1]));
    for (std::uint32_t c : mb.max(t[0]))
      if (!entails(TruthMask{c}, yes) && !entails(TruthMask{c}, no))
        dichotomy.record("alpha,beta,filter", {t[0], t[1], TruthMask{c}});
  });
  out.push_back(dichotomy);

  Verdict infer("wd_inference", pairs);
  infer.instances = for_each_tuple<2>(alg, pairs, [&](const auto& t) {
    const TruthMask not_a = alg.complement(t[0]);
    if (o.leq(alg.arrow(t[0], alg.complement(t[1])), not_a) != engine.infer(t[0], t[1]))
      infer.record("alpha,beta", {t[0], t[1]});
  });
  out.push_back(infer);
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(IdentitySuite suite) {
  switch (suite) {
    case IdentitySuite::lemma1: return "lemma1";
    case IdentitySuite::roundtrips: return "roundtrips";
    case IdentitySuite::theorem6: return "theorem6";
    case IdentitySuite::empty_chain: return "empty_chain";
    case IdentitySuite::oracle_equivalence: return "oracle_eq";
  }
  return "?";
}

namespace {

std::vector<Verdict> lemma1(const EntrenchmentOracle& o, ScanMode mode) {
  const Algebra alg = o.algebra();
  const ScanMode pairs = pair_mode(alg, mode);
  const InferenceEngine e(o);
  const MaxBaseTable mb(e);
  std::vector<Verdict> out;

  Verdict p1("bases_monotone", pairs), p2("bases_of_disjunction", pairs), p3("max_bases_of_disjunction", pairs),
      p4("bases_of_conjunction", pairs), p5("bases_stable_under_inference", pairs),
      p6("max_base_overlap", pairs), printed("max_base_overlap_literal", pairs);
  printed.informational = true;
  printed.note = "literal reading: alpha |~ beta iff the maximal bases of alpha and alpha & beta overlap";

  const std::uint64_t visited = for_each_tuple<2>(alg, pairs, [&](const auto& t) {
    const TruthMask a = t[0], b = t[1];
    const MaskSet ba = mb.bases(a), bb = mb.bases(b);
    if (entails(a, b) && !subset(ba, bb)) p1.record("alpha,beta", {a, b});
    if (mb.bases(join(a, b)) != set_union(ba, bb)) p2.record("alpha,beta", {a, b});
    const MaskSet &ma = mb.max(a), &mbb = mb.max(b);
    MaskSet expect = set_union(set_union(set_intersection(ma, mbb), set_difference(ma, bb)), set_difference(mbb, ba));
    if (mb.max(join(a, b)) != expect) p3.record("alpha,beta", {a, b});
    const MaskSet bab = mb.bases(meet(a, b));
    if (!subset(bab, set_intersection(ba, bb))) p4.record("alpha,beta", {a, b});
    if (e.infer(a, b) && ba != bab) p5.record("alpha,beta", {a, b});
    const bool overlap = mb.overlap(a, meet(a, b));
    if (!e.infer(a, alg.complement(b)) != overlap) p6.record("alpha,beta", {a, b});
    if (e.infer(a, b) != overlap) printed.record("alpha,beta", {a, b});
  });
  for (Verdict* v : {&p1, &p2, &p3, &p4, &p5, &p6, &printed}) {
    v->instances = visited;
    out.push_back(*v);
  }

  // Filters inside Coh(alpha), by the definition rather than the shortcut.
  Verdict def("bases_definition", ScanMode::exhaustive());
  for (std::uint64_t i = 0; i < alg.size(); ++i) {
    const TruthMask a = alg.element(i);
    for (const FilterMin& f : e.filters()) {
      ++def.instances;
      bool inside = true;
      for (std::uint64_t j = 0; j < alg.size() && inside; ++j) {
        const TruthMask x = alg.element(j);
        if (entails(f.c, x) && !e.coherent(x, a)) inside = false;
      }
      if (inside != !is_bottom(meet(f.c, a))) def.record("alpha,filter", {a, f.c});
    }
  }
  out.push_back(def);
  return out;
}

Verdict compare_leq(std::string law, const EntrenchmentOracle& x, const EntrenchmentOracle& y, ScanMode pairs) {
  Verdict v(std::move(law), pairs);
  v.instances = for_each_tuple<2>(x.algebra(), pairs, [&](const auto& t) {
    if (x.leq(t[0], t[1]) != y.leq(t[0], t[1])) v.record("a,b", {t[0], t[1]});
  });
  return v;
}

Verdict compare_query(std::string law, const InferenceService& x, const InferenceService& y, ScanMode pairs) {
  Verdict v(std::move(law), pairs);
  v.instances = for_each_tuple<2>(x.algebra(), pairs, [&](const auto& t) {
    if (x.query(t[0], t[1]) != y.query(t[0], t[1])) v.record("alpha,beta", {t[0], t[1]});
  });
  return v;
}

std::vector<Verdict> roundtrips(const EntrenchmentOracle& o, ScanMode mode) {
  const ScanMode pairs = pair_mode(o.algebra(), mode);
  const InferenceService s = InferenceService::from_engine(InferenceEngine(o));
  return {compare_leq("p_of_n", p_translate(n_translate(o)), o, pairs),
          compare_query("n_of_p", n_translate(p_translate(s)), s, pairs)};
}

std::vector<Verdict> theorem6(const EntrenchmentOracle& o, ScanMode mode) {
  return check_completeness(InferenceService::from_engine(InferenceEngine(o)), mode);
}

}  // namespace

std::vector<Verdict> check_completeness(const InferenceService& s, ScanMode mode) {
  const Algebra alg = s.algebra();
  const ScanMode pairs = pair_mode(alg, mode);
  const EntrenchmentOracle derived = p_translate(s);
  std::vector<Verdict> out;
  out.push_back(renamed(validate_axioms(derived, mode), "derived_axioms"));
  const Verdict wd = structure_check(derived, StructureProperty::weak_disjunction, mode);
  out.push_back(renamed(wd, "derived_weak_disjunction"));
  out.push_back(compare_query("derived_inference", InferenceService::from_engine(InferenceEngine(derived)), s, pairs));
  if (wd.pass)
    for (Verdict& v : check_wd_laws(derived, mode)) out.push_back(renamed(v, "derived_" + v.law));

  const Verdict rational = rm_rule(alg, [&](TruthMask a, TruthMask b) { return s.query(a, b); }, mode);
  Verdict split = structure_check(derived, StructureProperty::splitting, mode);
  split.law = "derived_splitting_if_rational";
  if (!rational.pass) {
    split.informational = true;
    split.note = "source inference is not rational; splitting is not required";
  }
  out.push_back(split);
  return out;
}

namespace {

std::vector<Verdict> oracle_equivalence(const EntrenchmentOracle& o) {
  const Algebra alg = o.algebra();
  if (alg.variables() > 3) throw VocabularyTooLarge("oracle_eq needs n <= 3");
  const ScanMode pairs = ScanMode::exhaustive();
  if (const GeneratorBase* base = o.base())
    return {compare_leq("oracle_equivalence", o, closure_table(*base), pairs)};

  // Other backends: the relation must be the least closure of its own pairs.
  const RelationMatrix m = materialize(o);
  std::vector<Generator> gens;
  std::vector<Formula> names;
  for (std::uint64_t i = 0; i < alg.size(); ++i) names.push_back(canonical_formula(alg.element(i), o.vocabulary()));
  for (std::uint64_t a = 0; a < alg.size(); ++a)
    for (std::uint64_t b = 0; b < alg.size(); ++b)
      if (m.test(alg.element(a), alg.element(b)) && !entails(alg.element(a), alg.element(b)))
        gens.push_back({names[a], names[b]});
  const GeneratorBase base(o.vocabulary(), std::move(gens));
  return {compare_leq("oracle_equivalence", o, EntrenchmentOracle::closure(base), pairs),
          compare_leq("oracle_equivalence_saturation", o, closure_table(base), pairs)};
}

}  // namespace

std::vector<Verdict> check_identities(IdentitySuite suite, const EntrenchmentOracle& o, ScanMode mode) {
  switch (suite) {
    case IdentitySuite::lemma1: return lemma1(o, mode);
    case IdentitySuite::roundtrips: return roundtrips(o, mode);
    case IdentitySuite::theorem6: return theorem6(o, mode);
    case IdentitySuite::empty_chain: {
      const InferenceEngine e(o);
      const Algebra alg = o.algebra();
      Verdict v("empty_chain", ScanMode::exhaustive());
      for (std::uint64_t i = 0; i < alg.size(); ++i) v.absorb(e.empty_chain_check(alg.element(i)));
      return {v};
    }
    case IdentitySuite::oracle_equivalence: return oracle_equivalence(o);
  }
  return {};
}

GeneratorBase random_base(std::uint64_t seed, const Vocabulary& vocab, int k) {
  const Algebra alg = vocab.algebra();
  std::mt19937_64 rng(seed);
  auto draw = [&] { return TruthMask{static_cast<std::uint32_t>(rng() & (alg.size() - 1))}; };
  std::vector<Generator> pairs;
  for (int i = 0; i < k; ++i) {
    const TruthMask lower = draw();
    const TruthMask upper = draw();
    pairs.push_back({canonical_formula(lower, vocab), canonical_formula(upper, vocab)});
  }
  return GeneratorBase(vocab, std::move(pairs));
}

EntrenchmentOracle random_connected_oracle(std::uint64_t seed, const Vocabulary& vocab) {
  const Algebra alg = vocab.algebra();
  std::mt19937_64 rng(seed);
  std::vector<int> ranks(alg.valuations());
  for (int& r : ranks) r = static_cast<int>(rng() % alg.valuations());
  return ranked_oracle(vocab, ranks);
}

}  // namespace entrench
