#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entrench/bridge.hpp"
#include "entrench/entrenchment.hpp"
#include "entrench/inference.hpp"
#include "entrench/verdict.hpp"

namespace entrench {

/// The eight preferential rules, one Verdict each, checked pointwise over
/// algebra elements: supraclassicality, left_logical_equivalence,
/// right_weakening, and, cut, cautious_monotonicity, or, weak_transitivity.
std::vector<Verdict> check_system_p(const InferenceService& s, ScanMode mode = ScanMode::exhaustive());

/// Rational Monotonicity of `s` ("rm"), the filter-level condition on the
/// maximal bases of `engine` ("rm_filter"), their per-triple agreement
/// ("rm_biconditional"), and the bridging statement about maximal bases
/// ("max_base_overlap"). `s` is expected to be the inference of `engine`.
std::vector<Verdict> check_rational(const InferenceService& s, const InferenceEngine& engine,
                                    ScanMode mode = ScanMode::exhaustive());

/// For connected `o`: maximal bases are singletons or empty, maximal bases
/// shrink under strengthening when they overlap, Rational Monotonicity holds,
/// connected_infer agrees with the engine, and gm_translate of the engine
/// inference gives back `o` ("gm_recovers_order"). Agreement of gm_translate
/// with p_translate is reported as informational. Throws ConnectivityRequired.
std::vector<Verdict> check_connected_laws(const EntrenchmentOracle& o, ScanMode mode = ScanMode::exhaustive());

/// For weakly disjunctive `o`: every maximal base of alpha decides alpha->beta
/// ("wd_dichotomy"), and alpha->!beta <= !alpha iff alpha |~ beta
/// ("wd_inference"). Throws WeakDisjunctionRequired.
std::vector<Verdict> check_wd_laws(const EntrenchmentOracle& o, ScanMode mode = ScanMode::exhaustive());

/// For a preferential `s`: P(s) is a weakly disjunctive entrenchment, its
/// engine inference is `s` again, its maximal bases decide every implication,
/// and it splits when `s` is rational. A corrupted `s` fails here.
std::vector<Verdict> check_completeness(const InferenceService& s, ScanMode mode = ScanMode::exhaustive());

enum class IdentitySuite { lemma1, roundtrips, theorem6, empty_chain, oracle_equivalence };

std::string to_string(IdentitySuite suite);

/// Batteries of identities that must hold for every partial entrenchment.
///   lemma1: base and maximal-base algebra (six parts; the literal reading of
///     part six is reported as informational).
///   roundtrips: P(N(o)) = o and N(P(s)) = s for the engine inference s.
///   theorem6: P(s) is a weakly disjunctive entrenchment whose inference is s.
///   empty_chain: the four descriptions of an empty extension set agree.
///   oracle_equivalence: closure_meet and rule saturation agree (n <= 3).
std::vector<Verdict> check_identities(IdentitySuite suite, const EntrenchmentOracle& o,
                                      ScanMode mode = ScanMode::exhaustive());

/// `k` constraints between uniformly drawn masks, rendered as short formulas.
/// Deterministic per seed.
GeneratorBase random_base(std::uint64_t seed, const Vocabulary& vocab, int k = 3);

/// Connected table from uniformly drawn valuation ranks (n <= 3).
EntrenchmentOracle random_connected_oracle(std::uint64_t seed, const Vocabulary& vocab);

/// True iff every non-informational verdict passed.
bool all_pass(const std::vector<Verdict>& verdicts);

}  // namespace entrench
