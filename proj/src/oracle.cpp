#include "preheap/oracle.hpp"

namespace preheap {

bool pointwise_maximality(const LanguageSieve& sieve, const Dfa& A, const Dfa& B, const Dfa& Z,
                          std::size_t k) {
  const SieveIndex target = join(sieve.index_of(A), sieve.index_of(B));
  if (!(Z.alphabet() == sieve.alphabet_at(target)))
    throw ValidationError("candidate solution must live at the canonical join index");

  const Dfa a = sieve.concretize(A, target);
  const Dfa b = sieve.concretize(B, target);

  // Solution check on bounded words: every composite word up to k stays in b.
  for (const auto& w : bounded_words(intersect(a, Z), k))
    if (!b.accepts(w)) return false;

  // Maximality: a word w <= k outside Z can be added exactly when it lies
  // outside a or inside b (compose(A, Z + {w}) adds at most the word w
  // itself, since Z already sits at the join index). Such a word witnesses
  // that Z is not maximal.
  const std::size_t m = Z.alphabet().size();
  Word word;
  const auto walk = [&](auto&& self, std::size_t remaining) -> bool {
    if (!Z.accepts(word) && !(a.accepts(word) && !b.accepts(word))) return false;
    if (remaining == 0) return true;
    for (std::size_t x = 0; x < m; ++x) {
      word.push_back(x);
      const bool ok = self(self, remaining - 1);
      word.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return walk(walk, k);
}

}  // namespace preheap
