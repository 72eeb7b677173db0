#pragma once

#include <set>
#include <string>
#include <vector>

#include "preheap/heap.hpp"
#include "preheap/languages.hpp"

namespace preheap {

/** An element of the indexing semilattice: a finite set of domain ids whose
    join is set union. */
using SieveIndex = std::set<std::string>;

inline SieveIndex join(const SieveIndex& x, const SieveIndex& y) {
  SieveIndex out = x;
  out.insert(y.begin(), y.end());
  return out;
}

/** A semilattice-indexed family of heaps with concretization maps. Elements
    carry their own index; `concretize` embeds an element into the heap at any
    index above its own, and must be a heap homomorphism satisfying the
    identity and triangle laws (check_sieve makes those executable). The
    per-index operations le_at / mu_at expect both operands at one index. */
template <typename F>
concept HeapFamily = requires(const F& f, const typename F::Element& a,
                              const typename F::Element& b, const SieveIndex& z) {
  typename F::Element;
  { f.index_of(a) } -> std::convertible_to<SieveIndex>;
  { f.concretize(a, z) } -> std::convertible_to<typename F::Element>;
  { f.le_at(a, b) } -> std::convertible_to<bool>;
  { f.mu_at(a, b) } -> std::convertible_to<typename F::Element>;
  { f.gamma(a) } -> std::convertible_to<typename F::Element>;
  { f.show(a) } -> std::convertible_to<std::string>;
};

/** The composite heap assembled from a family: elements of all indices
    thrown together, compared and multiplied after concretizing both operands
    to the join of their indices. By the triangle law the join index is a
    sufficient witness for the order, so no search over higher indices is
    needed. Satisfies the Heap concept, so the closed-form quotient solvers
    and the axiom checker apply unchanged. */
template <HeapFamily F>
class SievedHeap {
 public:
  using Element = typename F::Element;

  explicit SievedHeap(F family) : family_(std::move(family)) {}
  const F& family() const { return family_; }

  bool le(const Element& a, const Element& b) const {
    const SieveIndex z = join(family_.index_of(a), family_.index_of(b));
    return family_.le_at(family_.concretize(a, z), family_.concretize(b, z));
  }

  Element mu(const Element& a, const Element& b) const {
    const SieveIndex z = join(family_.index_of(a), family_.index_of(b));
    return family_.mu_at(family_.concretize(a, z), family_.concretize(b, z));
  }

  Element gamma(const Element& a) const { return family_.gamma(a); }
  std::string show(const Element& a) const { return family_.show(a); }

 private:
  F family_;
};

/** Validates a sieve on finite element samples: concretization identity and
    triangle laws, the homomorphism laws (order preservation, commutation with
    mu and gamma), then the full heap axioms of the composite. */
template <HeapFamily F>
AxiomReport check_sieve(const F& family, const std::vector<typename F::Element>& elems,
                        std::size_t max_witnesses = 10) {
  AxiomReport report;
  detail::WitnessSink sink(report, max_witnesses);

  std::vector<SieveIndex> indices;
  for (const auto& e : elems) {
    const auto x = family.index_of(e);
    bool known = false;
    for (const auto& i : indices) known = known || i == x;
    if (!known) indices.push_back(x);
  }

  const auto equiv_at = [&](const auto& a, const auto& b) {
    return family.le_at(a, b) && family.le_at(b, a);
  };

  for (const auto& e : elems) {
    const auto x = family.index_of(e);
    ++report.checked;
    if (!equiv_at(family.concretize(e, x), e)) sink.offer("concretize-identity", family.show(e));

    for (const auto& y : indices) {
      const auto xy = join(x, y);
      for (const auto& z : indices) {
        const auto xyz = join(xy, z);
        ++report.checked;
        const auto two_step = family.concretize(family.concretize(e, xy), xyz);
        const auto one_step = family.concretize(e, xyz);
        if (!equiv_at(two_step, one_step)) sink.offer("concretize-triangle", family.show(e));
      }
    }
  }

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const auto& a = elems[i];
      const auto& b = elems[j];
      const auto x = family.index_of(a);
      if (!(family.index_of(b) == x)) continue;
      const std::string pair = family.show(a) + ", " + family.show(b);
      for (const auto& y : indices) {
        const auto z = join(x, y);
        const auto ia = family.concretize(a, z);
        const auto ib = family.concretize(b, z);
        ++report.checked;
        if (family.le_at(a, b) && !family.le_at(ia, ib)) sink.offer("hom-order", pair);
        ++report.checked;
        if (!equiv_at(family.concretize(family.mu_at(a, b), z), family.mu_at(ia, ib)))
          sink.offer("hom-mu", pair);
        ++report.checked;
        if (!equiv_at(family.concretize(family.gamma(a), z), family.gamma(ia)))
          sink.offer("hom-gamma", pair);
      }
    }
  }

  const auto composite = check_axioms(SievedHeap<F>(family), elems, max_witnesses);
  report.checked += composite.checked;
  for (const auto& v : composite.violations) report.violations.push_back(v);
  return report;
}

/** The language sieve: per index, languages over that index's alphabet;
    concretization is lifting (synchronous world, tuple alphabets) or
    expansion (asynchronous world, union alphabets). Its composite `mu` is
    synchronous respectively parallel composition. */
class LanguageSieve {
 public:
  enum class Mode { Sync, Async };
  using Element = Dfa;

  LanguageSieve(AlphabetRegistry registry, Mode mode)
      : registry_(std::move(registry)), mode_(mode) {}

  const AlphabetRegistry& registry() const { return registry_; }
  Mode mode() const { return mode_; }

  SieveIndex index_of(const Dfa& d) const { return d.alphabet().component_ids(); }
  Dfa concretize(const Dfa& d, const SieveIndex& to) const;
  bool le_at(const Dfa& a, const Dfa& b) const { return is_subset(a, b); }
  Dfa mu_at(const Dfa& a, const Dfa& b) const { return intersect(a, b); }
  Dfa gamma(const Dfa& a) const { return complement(a); }
  std::string show(const Dfa& a) const { return LanguageHeap{}.show(a); }

  /** Builds the empty/full/word-list language at a given index. */
  StructuredAlphabet alphabet_at(const SieveIndex& x) const;

 private:
  AlphabetRegistry registry_;
  Mode mode_;
};

/** Seeded random finite languages (word lists bounded by `max_len`) at one
    index, for sampled axiom checks where the carrier is infinite. */
std::vector<Dfa> sample_languages(const LanguageSieve& sieve, const SieveIndex& index,
                                  std::size_t count, std::size_t max_len, std::uint64_t seed);

}  // namespace preheap
