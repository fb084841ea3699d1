#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "entrench/errors.hpp"
#include "entrench/truth_mask.hpp"

namespace entrench {

inline constexpr std::uint64_t kDefaultSamples = 100000;
inline constexpr std::size_t kMaxCounterexamples = 10;
/// Exhaustive scans over pairs of algebra elements are allowed up to this n.
inline constexpr int kPairScanLimit = 4;
/// Exhaustive scans over triples (16.8M at n = 3) are allowed up to this n.
inline constexpr int kTripleScanLimit = 3;

struct ScanMode {
  enum class Kind { exhaustive, sampled };

  Kind kind = Kind::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;

  static ScanMode exhaustive() { return {}; }
  static ScanMode sampled(std::uint64_t seed, std::uint64_t samples = kDefaultSamples) {
    return {Kind::sampled, seed, samples};
  }
  bool is_sampled() const { return kind == Kind::sampled; }

  friend bool operator==(const ScanMode&, const ScanMode&) = default;
};

/// One offending tuple. `label` names the violated clause, e.g. "transitivity".
struct Witness {
  std::string label;
  std::vector<TruthMask> masks;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of checking one law. `pass` holds iff no counterexample was found.
/// Informational verdicts (e.g. a statement known to be misprinted) are
/// reported but never count as a failure of the run.
struct Verdict {
  std::string law;
  bool pass = true;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::vector<Witness> counterexamples;
  ScanMode mode;
  bool informational = false;
  std::string note;

  Verdict() = default;
  Verdict(std::string law_id, ScanMode m) : law(std::move(law_id)), mode(m) {}

  void record(std::string label, std::vector<TruthMask> masks) {
    pass = false;
    ++violations;
    if (counterexamples.size() < kMaxCounterexamples)
      counterexamples.push_back({std::move(label), std::move(masks)});
  }

  /// Folds another run of the same law (e.g. on another random base) into this one.
  void absorb(const Verdict& other) {
    instances += other.instances;
    violations += other.violations;
    pass = pass && other.pass;
    for (const auto& w : other.counterexamples)
      if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(w);
  }
};

/// Throws VocabularyTooLarge when an exhaustive scan over `arity`-tuples of the
/// algebra is beyond the configured caps.
inline void require_exhaustive(const Algebra& alg, std::size_t arity, const ScanMode& mode,
                               const std::string& what) {
  if (mode.is_sampled()) return;
  const int limit = arity >= 3 ? kTripleScanLimit : kPairScanLimit;
  if (alg.variables() > limit)
    throw VocabularyTooLarge(what + ": exhaustive scan over " + std::to_string(arity) +
                             "-tuples needs n <= " + std::to_string(limit) + "; use sampled mode");
}

/// Visits K-tuples of algebra elements: all of them in ascending lexicographic
/// order, or `mode.samples` uniformly drawn tuples from a seeded mt19937_64.
/// Returns the number of tuples visited.
template <std::size_t K, class Fn>
std::uint64_t for_each_tuple(const Algebra& alg, const ScanMode& mode, Fn&& fn) {
  require_exhaustive(alg, K, mode, "scan");
  const std::uint64_t size = alg.size();
  std::array<TruthMask, K> t{};
  if (mode.is_sampled()) {
    std::mt19937_64 rng(mode.seed);
    // size is a power of two, so masking is unbiased and platform independent.
    for (std::uint64_t s = 0; s < mode.samples; ++s) {
      for (auto& x : t) x = TruthMask{static_cast<std::uint32_t>(rng() & (size - 1))};
      fn(t);
    }
    return mode.samples;
  }
  std::uint64_t visited = 0;
  std::array<std::uint64_t, K> idx{};
  for (;;) {
    for (std::size_t i = 0; i < K; ++i) t[i] = alg.element(idx[i]);
    fn(t);
    ++visited;
    std::size_t i = K;
    while (i > 0) {
      --i;
      if (++idx[i] < size) break;
      idx[i] = 0;
      if (i == 0) return visited;
    }
  }
}

}  // namespace entrench
