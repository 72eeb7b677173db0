#include "preheap/languages.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace preheap {

AlphabetComponent::AlphabetComponent(std::string id_, std::vector<std::string> symbols_)
    : id(std::move(id_)), symbols(std::move(symbols_)) {
  if (id.empty()) throw ValidationError("alphabet component with empty id");
  if (symbols.empty()) throw ValidationError("alphabet component '" + id + "' has no symbols");
  std::set<std::string> seen;
  for (const auto& s : symbols)
    if (!seen.insert(s).second)
      throw ValidationError("alphabet component '" + id + "' repeats symbol '" + s + "'");
}

void AlphabetRegistry::add(AlphabetComponent component) {
  if (has(component.id))
    throw ValidationError("alphabet '" + component.id + "' registered twice");
  components_.push_back(std::move(component));
}

bool AlphabetRegistry::has(const std::string& id) const {
  for (const auto& c : components_)
    if (c.id == id) return true;
  return false;
}

const AlphabetComponent& AlphabetRegistry::at(const std::string& id) const {
  for (const auto& c : components_)
    if (c.id == id) return c;
  throw ValidationError("unregistered alphabet '" + id + "'");
}

std::size_t AlphabetRegistry::order_of(const std::string& id) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].id == id) return i;
  throw ValidationError("unregistered alphabet '" + id + "'");
}

std::vector<AlphabetComponent> AlphabetRegistry::canonical(const std::set<std::string>& ids) const {
  std::vector<std::size_t> order;
  for (const auto& id : ids) order.push_back(order_of(id));
  std::sort(order.begin(), order.end());
  std::vector<AlphabetComponent> out;
  for (auto i : order) out.push_back(components_[i]);
  return out;
}

StructuredAlphabet::StructuredAlphabet(AlphabetKind kind, std::vector<AlphabetComponent> components)
    : kind_(kind), components_(std::move(components)) {
  if (components_.empty()) throw ValidationError("structured alphabet needs at least one component");
  std::set<std::string> ids;
  for (const auto& c : components_)
    if (!ids.insert(c.id).second)
      throw ValidationError("structured alphabet repeats component '" + c.id + "'");

  if (kind_ == AlphabetKind::Tuple) {
    // Full product, first component most significant.
    std::vector<std::size_t> digits(components_.size(), 0);
    while (true) {
      std::vector<std::string> sym;
      sym.reserve(components_.size());
      for (std::size_t i = 0; i < components_.size(); ++i)
        sym.push_back(components_[i].symbols[digits[i]]);
      symbols_.push_back(std::move(sym));
      std::size_t i = components_.size();
      while (i > 0) {
        --i;
        if (++digits[i] < components_[i].symbols.size()) break;
        digits[i] = 0;
        if (i == 0) return;
      }
    }
  } else {
    std::set<std::string> seen;
    for (const auto& c : components_) {
      for (const auto& s : c.symbols) {
        if (!seen.insert(s).second)
          throw ValidationError("union alphabet components overlap on symbol '" + s + "'");
        symbols_.push_back({s});
      }
    }
  }
}

StructuredAlphabet StructuredAlphabet::tuple(std::vector<AlphabetComponent> components) {
  return StructuredAlphabet(AlphabetKind::Tuple, std::move(components));
}

StructuredAlphabet StructuredAlphabet::disjoint_union(std::vector<AlphabetComponent> components) {
  return StructuredAlphabet(AlphabetKind::Union, std::move(components));
}

std::set<std::string> StructuredAlphabet::component_ids() const {
  std::set<std::string> out;
  for (const auto& c : components_) out.insert(c.id);
  return out;
}

std::optional<std::size_t> StructuredAlphabet::index_of(
    const std::vector<std::string>& symbol) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == symbol) return i;
  return std::nullopt;
}

std::string StructuredAlphabet::show_symbol(std::size_t i) const {
  const auto& sym = symbols_[i];
  if (sym.size() == 1) return sym.front();
  std::string out = "(";
  for (std::size_t j = 0; j < sym.size(); ++j) {
    if (j > 0) out += ",";
    out += sym[j];
  }
  return out + ")";
}

Dfa::Dfa(StructuredAlphabet alphabet, std::size_t state_count, std::size_t initial,
         std::vector<bool> accepting, std::vector<std::size_t> delta)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(initial),
      accepting_(std::move(accepting)),
      delta_(std::move(delta)) {
  if (state_count_ == 0) throw ValidationError("dfa needs at least one state");
  if (initial_ >= state_count_) throw ValidationError("dfa initial state out of range");
  if (accepting_.size() != state_count_) throw ValidationError("dfa accepting vector size mismatch");
  if (delta_.size() != state_count_ * alphabet_.size())
    throw ValidationError("dfa transition table is not total");
  for (auto t : delta_)
    if (t >= state_count_) throw ValidationError("dfa transition target out of range");
}

bool Dfa::accepts(const std::vector<std::size_t>& word) const {
  std::size_t state = initial_;
  for (auto s : word) {
    if (s >= alphabet_.size()) throw ValidationError("symbol index out of range");
    state = next(state, s);
  }
  return accepting_[state];
}

namespace {

void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet()))
    throw ValidationError("dfa operands have different alphabets");
}

Dfa product(const Dfa& a, const Dfa& b, bool conjunction) {
  require_same_alphabet(a, b);
  const std::size_t na = a.state_count(), nb = b.state_count(), m = a.alphabet().size();
  std::vector<bool> accepting(na * nb);
  std::vector<std::size_t> delta(na * nb * m);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      const std::size_t s = i * nb + j;
      accepting[s] = conjunction ? (a.is_accepting(i) && b.is_accepting(j))
                                 : (a.is_accepting(i) || b.is_accepting(j));
      for (std::size_t x = 0; x < m; ++x) delta[s * m + x] = a.next(i, x) * nb + b.next(j, x);
    }
  }
  return Dfa(a.alphabet(), na * nb, a.initial() * nb + b.initial(), std::move(accepting),
             std::move(delta));
}

}  // namespace

Dfa complement(const Dfa& d) {
  std::vector<bool> accepting(d.state_count());
  for (std::size_t i = 0; i < d.state_count(); ++i) accepting[i] = !d.is_accepting(i);
  std::vector<std::size_t> delta(d.state_count() * d.alphabet().size());
  for (std::size_t s = 0; s < d.state_count(); ++s)
    for (std::size_t x = 0; x < d.alphabet().size(); ++x)
      delta[s * d.alphabet().size() + x] = d.next(s, x);
  return Dfa(d.alphabet(), d.state_count(), d.initial(), std::move(accepting), std::move(delta));
}

Dfa intersect(const Dfa& a, const Dfa& b) { return product(a, b, true); }
Dfa unite(const Dfa& a, const Dfa& b) { return product(a, b, false); }

bool is_empty(const Dfa& d) {
  std::vector<bool> seen(d.state_count(), false);
  std::deque<std::size_t> queue{d.initial()};
  seen[d.initial()] = true;
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    if (d.is_accepting(s)) return false;
    for (std::size_t x = 0; x < d.alphabet().size(); ++x) {
      const std::size_t t = d.next(s, x);
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return true;
}

bool is_subset(const Dfa& a, const Dfa& b) { return is_empty(intersect(a, complement(b))); }

bool same_language(const Dfa& a, const Dfa& b) { return is_subset(a, b) && is_subset(b, a); }

bool contains(const Dfa& d, const std::vector<std::vector<std::string>>& word) {
  Word indices;
  indices.reserve(word.size());
  for (const auto& sym : word) {
    const auto i = d.alphabet().index_of(sym);
    if (!i) throw ValidationError("word uses a symbol outside the dfa alphabet");
    indices.push_back(*i);
  }
  return d.accepts(indices);
}

std::vector<Word> bounded_words(const Dfa& d, std::size_t k) {
  std::vector<Word> out;
  Word current;
  // Iterative deepening keeps length-then-lex order without sorting.
  const std::size_t m = d.alphabet().size();
  const auto walk = [&](auto&& self, std::size_t state, std::size_t remaining) -> void {
    if (remaining == 0) {
      if (d.is_accepting(state)) out.push_back(current);
      return;
    }
    for (std::size_t x = 0; x < m; ++x) {
      current.push_back(x);
      self(self, d.next(state, x), remaining - 1);
      current.pop_back();
    }
  };
  for (std::size_t len = 0; len <= k; ++len) walk(walk, d.initial(), len);
  return out;
}

std::string render_word(const StructuredAlphabet& alphabet, const Word& word) {
  if (word.empty()) return "ε";
  std::string out;
  for (auto s : word) out += alphabet.show_symbol(s);
  return out;
}

std::vector<std::string> bounded_word_dump(const Dfa& d, std::size_t k) {
  std::vector<std::string> out;
  for (const auto& w : bounded_words(d, k)) out.push_back(render_word(d.alphabet(), w));
  return out;
}

Dfa empty_language(StructuredAlphabet alphabet) {
  const std::size_t m = alphabet.size();
  return Dfa(std::move(alphabet), 1, 0, {false}, std::vector<std::size_t>(m, 0));
}

Dfa full_language(StructuredAlphabet alphabet) {
  const std::size_t m = alphabet.size();
  return Dfa(std::move(alphabet), 1, 0, {true}, std::vector<std::size_t>(m, 0));
}

Dfa from_words(StructuredAlphabet alphabet, const std::vector<Word>& words) {
  std::vector<Word> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  const std::size_t m = alphabet.size();
  // Prefix trie; state 0 is the root.
  std::vector<std::map<std::size_t, std::size_t>> children(1);
  std::vector<bool> accepting(1, false);
  for (const auto& w : sorted) {
    std::size_t state = 0;
    for (auto s : w) {
      if (s >= m) throw ValidationError("word symbol outside alphabet");
      auto it = children[state].find(s);
      if (it == children[state].end()) {
        children.emplace_back();
        accepting.push_back(false);
        it = children[state].emplace(s, children.size() - 1).first;
      }
      state = it->second;
    }
    accepting[state] = true;
  }

  const std::size_t dead = children.size();
  const std::size_t n = dead + 1;
  accepting.push_back(false);
  std::vector<std::size_t> delta(n * m, dead);
  for (std::size_t s = 0; s < children.size(); ++s)
    for (const auto& [sym, child] : children[s]) delta[s * m + sym] = child;
  return Dfa(std::move(alphabet), n, 0, std::move(accepting), std::move(delta));
}

Dfa from_raw_words(StructuredAlphabet alphabet,
                   const std::vector<std::vector<std::vector<std::string>>>& words) {
  std::vector<Word> indexed;
  for (const auto& w : words) {
    Word iw;
    for (const auto& sym : w) {
      const auto i = alphabet.index_of(sym);
      if (!i) throw ValidationError("word uses a symbol outside the alphabet");
      iw.push_back(*i);
    }
    indexed.push_back(std::move(iw));
  }
  return from_words(std::move(alphabet), indexed);
}

namespace {

// Rebuild d over a tuple alphabet with the given components (a superset of
// d's components, in any order); each transition looks up the projection of
// the target symbol onto the old components.
Dfa retarget_tuple(const Dfa& d, std::vector<AlphabetComponent> target_components) {
  if (d.alphabet().kind() != AlphabetKind::Tuple)
    throw ValidationError("lift/reorder requires a tuple alphabet");
  const auto& old_components = d.alphabet().components();

  std::vector<std::size_t> position;  // old component j sits at target position[j]
  for (const auto& oc : old_components) {
    bool found = false;
    for (std::size_t p = 0; p < target_components.size(); ++p) {
      if (target_components[p].id == oc.id) {
        if (target_components[p].symbols != oc.symbols)
          throw ValidationError("component '" + oc.id + "' has mismatched symbols");
        position.push_back(p);
        found = true;
        break;
      }
    }
    if (!found) throw ValidationError("target alphabet drops component '" + oc.id + "'");
  }

  std::vector<std::size_t> old_strides(old_components.size(), 1);
  for (std::size_t j = old_components.size(); j-- > 1;)
    old_strides[j - 1] = old_strides[j] * old_components[j].symbols.size();

  StructuredAlphabet target = StructuredAlphabet::tuple(std::move(target_components));
  const std::size_t tm = target.size();

  // Walk the target table with an odometer so each symbol's digits are at hand.
  std::vector<std::size_t> old_of(tm);
  std::vector<std::size_t> digits(target.components().size(), 0);
  for (std::size_t t = 0; t < tm; ++t) {
    std::size_t old_index = 0;
    for (std::size_t j = 0; j < old_components.size(); ++j)
      old_index += digits[position[j]] * old_strides[j];
    old_of[t] = old_index;
    for (std::size_t i = target.components().size(); i-- > 0;) {
      if (++digits[i] < target.components()[i].symbols.size()) break;
      digits[i] = 0;
    }
  }

  const std::size_t n = d.state_count();
  std::vector<bool> accepting(n);
  for (std::size_t s = 0; s < n; ++s) accepting[s] = d.is_accepting(s);
  std::vector<std::size_t> delta(n * tm);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < tm; ++t) delta[s * tm + t] = d.next(s, old_of[t]);
  return Dfa(std::move(target), n, d.initial(), std::move(accepting), std::move(delta));
}

// Rebuild d over a union alphabet with the given components (a superset of
// d's); symbols not in d's alphabet loop on every state.
Dfa retarget_union(const Dfa& d, std::vector<AlphabetComponent> target_components) {
  if (d.alphabet().kind() != AlphabetKind::Union)
    throw ValidationError("expand requires a union alphabet");
  for (const auto& oc : d.alphabet().components()) {
    bool found = false;
    for (const auto& tc : target_components) {
      if (tc.id == oc.id) {
        if (tc.symbols != oc.symbols)
          throw ValidationError("component '" + oc.id + "' has mismatched symbols");
        found = true;
        break;
      }
    }
    if (!found) throw ValidationError("target alphabet drops component '" + oc.id + "'");
  }

  StructuredAlphabet target = StructuredAlphabet::disjoint_union(std::move(target_components));
  const std::size_t tm = target.size();
  const std::size_t n = d.state_count();
  std::vector<bool> accepting(n);
  for (std::size_t s = 0; s < n; ++s) accepting[s] = d.is_accepting(s);
  std::vector<std::size_t> delta(n * tm);
  for (std::size_t t = 0; t < tm; ++t) {
    const auto old = d.alphabet().index_of(target.symbol(t));
    for (std::size_t s = 0; s < n; ++s) delta[s * tm + t] = old ? d.next(s, *old) : s;
  }
  return Dfa(std::move(target), n, d.initial(), std::move(accepting), std::move(delta));
}

std::set<std::string> union_ids(const Dfa& a, const Dfa& b) {
  auto ids = a.alphabet().component_ids();
  for (const auto& id : b.alphabet().component_ids()) ids.insert(id);
  return ids;
}

void require_registered(const AlphabetRegistry& reg, const Dfa& d) {
  for (const auto& c : d.alphabet().components()) {
    if (!(reg.at(c.id) == c))
      throw ValidationError("component '" + c.id + "' disagrees with the registry");
  }
}

}  // namespace

Dfa lift(const Dfa& d, const std::vector<AlphabetComponent>& added) {
  auto components = d.alphabet().components();
  components.insert(components.end(), added.begin(), added.end());
  return retarget_tuple(d, std::move(components));
}

Dfa expand(const Dfa& d, const std::vector<AlphabetComponent>& added) {
  auto components = d.alphabet().components();
  components.insert(components.end(), added.begin(), added.end());
  return retarget_union(d, std::move(components));
}

Dfa reorder(const Dfa& d, const std::vector<std::size_t>& perm) {
  const auto& components = d.alphabet().components();
  if (perm.size() != components.size()) throw ValidationError("reorder permutation size mismatch");
  std::vector<bool> used(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || used[p]) throw ValidationError("reorder permutation is invalid");
    used[p] = true;
  }
  std::vector<AlphabetComponent> target;
  for (auto p : perm) target.push_back(components[p]);
  return retarget_tuple(d, std::move(target));
}

Dfa lift_to(const AlphabetRegistry& reg, const Dfa& d, const std::set<std::string>& target) {
  require_registered(reg, d);
  return retarget_tuple(d, reg.canonical(target));
}

Dfa expand_to(const AlphabetRegistry& reg, const Dfa& d, const std::set<std::string>& target) {
  require_registered(reg, d);
  return retarget_union(d, reg.canonical(target));
}

Dfa sync_compose(const AlphabetRegistry& reg, const Dfa& a, const Dfa& b) {
  const auto ids = union_ids(a, b);
  return intersect(lift_to(reg, a, ids), lift_to(reg, b, ids));
}

Dfa async_compose(const AlphabetRegistry& reg, const Dfa& a, const Dfa& b) {
  const auto ids = union_ids(a, b);
  return intersect(expand_to(reg, a, ids), expand_to(reg, b, ids));
}

Dfa sync_quotient(const AlphabetRegistry& reg, const Dfa& a, const Dfa& b) {
  const auto ids = union_ids(a, b);
  return complement(intersect(lift_to(reg, complement(b), ids), lift_to(reg, a, ids)));
}

Dfa async_quotient(const AlphabetRegistry& reg, const Dfa& a, const Dfa& b) {
  const auto ids = union_ids(a, b);
  return complement(intersect(expand_to(reg, complement(b), ids), expand_to(reg, a, ids)));
}

std::string LanguageHeap::show(const Dfa& a) const {
  std::string out = "lang[";
  bool first = true;
  for (const auto& id : a.alphabet().component_ids()) {
    if (!first) out += ",";
    out += id;
    first = false;
  }
  out += "]{";
  const auto words = bounded_word_dump(a, 2);
  for (std::size_t i = 0; i < words.size() && i < 6; ++i) {
    if (i > 0) out += ",";
    out += words[i];
  }
  if (words.size() > 6) out += ",...";
  return out + "}";
}

}  // namespace preheap
