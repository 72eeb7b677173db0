#include "preheap/sieve.hpp"

#include <random>

namespace preheap {

Dfa LanguageSieve::concretize(const Dfa& d, const SieveIndex& to) const {
  return mode_ == Mode::Sync ? lift_to(registry_, d, to) : expand_to(registry_, d, to);
}

StructuredAlphabet LanguageSieve::alphabet_at(const SieveIndex& x) const {
  auto components = registry_.canonical(x);
  return mode_ == Mode::Sync ? StructuredAlphabet::tuple(std::move(components))
                             : StructuredAlphabet::disjoint_union(std::move(components));
}

std::vector<Dfa> sample_languages(const LanguageSieve& sieve, const SieveIndex& index,
                                  std::size_t count, std::size_t max_len, std::uint64_t seed) {
  const auto alphabet = sieve.alphabet_at(index);
  std::mt19937_64 rng(seed);
  std::vector<Dfa> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Word> words;
    const std::size_t word_count = rng() % (max_len + 2);
    for (std::size_t w = 0; w < word_count; ++w) {
      Word word;
      const std::size_t len = rng() % (max_len + 1);
      for (std::size_t s = 0; s < len; ++s) word.push_back(rng() % alphabet.size());
      words.push_back(std::move(word));
    }
    out.push_back(from_words(alphabet, words));
  }
  return out;
}

}  // namespace preheap
