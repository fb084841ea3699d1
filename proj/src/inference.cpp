#include "entrench/inference.hpp"

#include <algorithm>
#include <atomic>

#include "entrench/errors.hpp"

namespace entrench {

namespace {
constexpr std::uint64_t kUnknown = ~std::uint64_t{0};
}

struct InferenceEngine::Impl {
  explicit Impl(EntrenchmentOracle o) : oracle(std::move(o)) {
    const Algebra alg = oracle.algebra();
    const bool closure = oracle.backend() == EntrenchmentOracle::Backend::closure;
    if (alg.variables() > (closure ? kEnumerationLimit : 3))
      throw VocabularyTooLarge("inference needs n <= " + std::to_string(closure ? kEnumerationLimit : 3) +
                               " for this oracle");
    const auto size = static_cast<std::size_t>(alg.size());
    stable.assign(size, 0);
    for (std::size_t i = 1; i < size; ++i) {
      const TruthMask c = alg.element(i);
      if (is_stable(c, oracle)) {
        stable[i] = 1;
        filters.push_back(FilterMin{c});
      }
    }
    sceptical = std::make_unique<std::atomic<std::uint64_t>[]>(size);
    for (std::size_t i = 0; i < size; ++i) sceptical[i].store(kUnknown, std::memory_order_relaxed);
  }

  EntrenchmentOracle oracle;
  std::vector<std::uint8_t> stable;
  std::vector<FilterMin> filters;
  std::unique_ptr<std::atomic<std::uint64_t>[]> sceptical;
};

InferenceEngine::InferenceEngine(EntrenchmentOracle oracle)
    : impl_(std::make_shared<const Impl>(std::move(oracle))) {}

const EntrenchmentOracle& InferenceEngine::oracle() const { return impl_->oracle; }

bool InferenceEngine::coherent(TruthMask beta, TruthMask alpha) const {
  return !impl_->oracle.leq(beta, algebra().complement(alpha));
}

const std::vector<FilterMin>& InferenceEngine::filters() const { return impl_->filters; }

bool InferenceEngine::is_filter(TruthMask c) const { return impl_->stable[c.bits] != 0; }

std::vector<FilterMin> InferenceEngine::bases(TruthMask alpha) const {
  // A filter with minimum c lies in Coh(alpha) iff !alpha is not in it.
  std::vector<FilterMin> out;
  for (const FilterMin& f : impl_->filters)
    if (!is_bottom(meet(f.c, alpha))) out.push_back(f);
  return out;
}

std::vector<FilterMin> InferenceEngine::maximal_bases(TruthMask alpha) const {
  const Algebra alg = algebra();
  const auto size = static_cast<std::size_t>(alg.size());
  // below[m]: some base minimum is a submask of m. A base c is maximal iff no
  // base sits strictly below it, i.e. below[c without v] is clear for each v in c.
  std::vector<std::uint8_t> below(size, 0);
  for (std::size_t m = 1; m < size; ++m)
    below[m] = impl_->stable[m] && (m & alpha.bits) != 0;
  for (std::uint32_t v = 0; v < alg.valuations(); ++v) {
    const std::size_t bit = std::size_t{1} << v;
    for (std::size_t m = 0; m < size; ++m)
      if (m & bit) below[m] |= below[m ^ bit];
  }
  std::vector<FilterMin> out;
  for (std::size_t m = 1; m < size; ++m) {
    if (!impl_->stable[m] || (m & alpha.bits) == 0) continue;
    bool maximal = true;
    for (std::uint32_t v = 0; v < alg.valuations() && maximal; ++v) {
      const std::size_t bit = std::size_t{1} << v;
      if ((m & bit) && below[m ^ bit]) maximal = false;
    }
    if (maximal) out.push_back(FilterMin{alg.element(m)});
  }
  return out;
}

std::vector<TruthMask> InferenceEngine::extensions(TruthMask alpha) const {
  std::vector<TruthMask> out;
  for (const FilterMin& f : maximal_bases(alpha)) out.push_back(meet(f.c, alpha));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TruthMask InferenceEngine::sceptical_extension(TruthMask alpha) const {
  std::atomic<std::uint64_t>& slot = impl_->sceptical[alpha.bits];
  const std::uint64_t cached = slot.load(std::memory_order_acquire);
  if (cached != kUnknown) return TruthMask{static_cast<std::uint32_t>(cached)};
  TruthMask m;
  for (TruthMask e : extensions(alpha)) m = join(m, e);
  slot.store(m.bits, std::memory_order_release);
  return m;
}

InferenceResult InferenceEngine::infer(const Formula& alpha, const Formula& beta) const {
  const Vocabulary& vocab = oracle().vocabulary();
  const TruthMask a = truth_mask(alpha, vocab);
  InferenceResult r{alpha, beta, false, maximal_bases(a), extensions(a), sceptical_extension(a)};
  r.verdict = entails(r.sceptical_min, truth_mask(beta, vocab));
  return r;
}

Verdict InferenceEngine::empty_chain_check(TruthMask alpha) const {
  const Algebra alg = algebra();
  Verdict v("empty_chain", ScanMode::exhaustive());
  v.instances = 1;
  const bool no_extensions = extensions(alpha).empty();
  const bool whole_language = is_bottom(sceptical_extension(alpha));
  const bool infers_falsity = infer(alpha, alg.bottom());
  const bool top_below = oracle().leq(alg.top(), alg.complement(alpha));
  if (no_extensions != whole_language || whole_language != infers_falsity || infers_falsity != top_below)
    v.record("alpha", {alpha});
  return v;
}

}  // namespace entrench
