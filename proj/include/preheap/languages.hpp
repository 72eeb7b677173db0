#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "preheap/errors.hpp"

namespace preheap {

/** One base alphabet: a named, ordered set of atomic symbols. */
struct AlphabetComponent {
  std::string id;
  std::vector<std::string> symbols;

  AlphabetComponent(std::string id_, std::vector<std::string> symbols_);
  bool operator==(const AlphabetComponent&) const = default;
};

/** The ordered list of base alphabets a run works with. Registration order
    fixes the canonical component order of every tuple alphabet, which is what
    makes independently built automata comparable. */
class AlphabetRegistry {
 public:
  void add(AlphabetComponent component);
  bool has(const std::string& id) const;
  const AlphabetComponent& at(const std::string& id) const;
  std::size_t order_of(const std::string& id) const;

  /** The ids sorted by registration order. Throws on unregistered ids. */
  std::vector<AlphabetComponent> canonical(const std::set<std::string>& ids) const;

  const std::vector<AlphabetComponent>& all() const { return components_; }

 private:
  std::vector<AlphabetComponent> components_;
};

enum class AlphabetKind { Tuple, Union };

/** A structured alphabet over ordered base components: either the full
    product (symbols are tuples, one base symbol per component) or the
    disjoint union (symbols are the base symbols themselves). */
class StructuredAlphabet {
 public:
  static StructuredAlphabet tuple(std::vector<AlphabetComponent> components);
  static StructuredAlphabet disjoint_union(std::vector<AlphabetComponent> components);

  AlphabetKind kind() const { return kind_; }
  const std::vector<AlphabetComponent>& components() const { return components_; }
  std::set<std::string> component_ids() const;

  std::size_t size() const { return symbols_.size(); }
  /** Tuple kind: entry i is one base symbol per component. Union kind: entry
      i is a single base symbol. */
  const std::vector<std::string>& symbol(std::size_t i) const { return symbols_[i]; }
  std::optional<std::size_t> index_of(const std::vector<std::string>& symbol) const;
  std::string show_symbol(std::size_t i) const;

  bool operator==(const StructuredAlphabet&) const = default;

 private:
  StructuredAlphabet(AlphabetKind kind, std::vector<AlphabetComponent> components);

  AlphabetKind kind_;
  std::vector<AlphabetComponent> components_;
  std::vector<std::vector<std::string>> symbols_;
};

/** A total deterministic automaton over a structured alphabet. Totality makes
    complementation an accepting-set flip; every operation below preserves it
    by construction. */
class Dfa {
 public:
  Dfa(StructuredAlphabet alphabet, std::size_t state_count, std::size_t initial,
      std::vector<bool> accepting, std::vector<std::size_t> delta);

  const StructuredAlphabet& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return state_count_; }
  std::size_t initial() const { return initial_; }
  bool is_accepting(std::size_t state) const { return accepting_[state]; }
  std::size_t next(std::size_t state, std::size_t symbol) const {
    return delta_[state * alphabet_.size() + symbol];
  }

  bool accepts(const std::vector<std::size_t>& word) const;

 private:
  StructuredAlphabet alphabet_;
  std::size_t state_count_;
  std::size_t initial_;
  std::vector<bool> accepting_;
  std::vector<std::size_t> delta_;
};

using Word = std::vector<std::size_t>;

Dfa complement(const Dfa& d);
Dfa intersect(const Dfa& a, const Dfa& b);
Dfa unite(const Dfa& a, const Dfa& b);
bool is_empty(const Dfa& d);
bool is_subset(const Dfa& a, const Dfa& b);
bool same_language(const Dfa& a, const Dfa& b);

/** Membership of a word given as raw symbols; unknown symbols are an error. */
bool contains(const Dfa& d, const std::vector<std::vector<std::string>>& word);

/** Every accepted word of length <= k, in length-then-lexicographic symbol
    order. */
std::vector<Word> bounded_words(const Dfa& d, std::size_t k);

std::string render_word(const StructuredAlphabet& alphabet, const Word& word);

/** Accepted words up to length k, rendered; the canonical dump format used by
    the oracles and the CLI. */
std::vector<std::string> bounded_word_dump(const Dfa& d, std::size_t k);

/** Language builders. `words` uses symbol indices of `alphabet`. */
Dfa empty_language(StructuredAlphabet alphabet);
Dfa full_language(StructuredAlphabet alphabet);
Dfa from_words(StructuredAlphabet alphabet, const std::vector<Word>& words);
Dfa from_raw_words(StructuredAlphabet alphabet,
                   const std::vector<std::vector<std::vector<std::string>>>& words);

/** Lifting: append base components to a tuple alphabet, replacing each
    transition on s with transitions on every extension of s. */
Dfa lift(const Dfa& d, const std::vector<AlphabetComponent>& added);

/** Expansion: extend a union alphabet with fresh base components; words of
    the result are words of d with foreign symbols inserted anywhere, so the
    empty-word language expands to the full language of the added symbols. */
Dfa expand(const Dfa& d, const std::vector<AlphabetComponent>& added);

/** Permute the components of a tuple alphabet; perm[i] is the index of the
    old component that moves to position i. The language is relabeled
    componentwise, nothing else changes. */
Dfa reorder(const Dfa& d, const std::vector<std::size_t>& perm);

/** Concretizations onto a registered target index (set of component ids that
    must contain the operand's ids): lift-then-reorder to the registry's
    canonical component order, or expansion. */
Dfa lift_to(const AlphabetRegistry& reg, const Dfa& d, const std::set<std::string>& target);
Dfa expand_to(const AlphabetRegistry& reg, const Dfa& d, const std::set<std::string>& target);

/** Compositions of languages at arbitrary registered indices: both operands
    are concretized to the union index and intersected. */
Dfa sync_compose(const AlphabetRegistry& reg, const Dfa& a, const Dfa& b);
Dfa async_compose(const AlphabetRegistry& reg, const Dfa& a, const Dfa& b);

/** Closed-form largest Z with compose(a, Z) below b, over the union index. */
Dfa sync_quotient(const AlphabetRegistry& reg, const Dfa& a, const Dfa& b);
Dfa async_quotient(const AlphabetRegistry& reg, const Dfa& a, const Dfa& b);

/** The language heap at one index: inclusion order, intersection, complement. */
struct LanguageHeap {
  using Element = Dfa;

  bool le(const Dfa& a, const Dfa& b) const { return is_subset(a, b); }
  Dfa mu(const Dfa& a, const Dfa& b) const { return intersect(a, b); }
  Dfa gamma(const Dfa& a) const { return complement(a); }
  std::string show(const Dfa& a) const;
};

}  // namespace preheap
