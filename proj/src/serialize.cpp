#include "preheap/serialize.hpp"

namespace preheap {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw ValidationError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ValidationError(std::string(what) + " must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::string> raw_symbol(const Json& j) {
  if (j.is_string()) return {j.get<std::string>()};
  return string_list(j, "symbol");
}

}  // namespace

Json to_json(const FiniteSet& s) {
  return Json{{"universe", s.universe()}, {"members", s.members()}};
}

FiniteSet finite_set_from_json(const Json& j) {
  try {
    return FiniteSet(string_list(field(j, "universe"), "universe"),
                     string_list(field(j, "members"), "members"));
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("bad finite set: ") + e.what());
  }
}

Json to_json(const Contract& c) {
  return Json{{"universe", c.universe()},
              {"assumptions", c.assumptions().members()},
              {"guarantees", c.guarantees().members()}};
}

Contract contract_from_json(const Json& j) {
  const auto universe = string_list(field(j, "universe"), "universe");
  return Contract(FiniteSet(universe, string_list(field(j, "assumptions"), "assumptions")),
                  FiniteSet(universe, string_list(field(j, "guarantees"), "guarantees")));
}

Json to_json(const InterfaceAutomaton& a) {
  Json steps = Json::array();
  for (const auto& s : a.steps())
    steps.push_back(Json::array({a.states()[s.from], s.action, a.states()[s.to]}));
  Json initial = Json::array();
  if (a.initial()) initial.push_back(a.states()[*a.initial()]);
  return Json{{"states", a.states()},     {"initial", initial},
              {"inputs", a.inputs()},     {"outputs", a.outputs()},
              {"hidden", a.hidden()},     {"steps", steps}};
}

InterfaceAutomaton automaton_from_json(const Json& j) {
  const auto states = string_list(field(j, "states"), "states");
  const auto state_index = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < states.size(); ++i)
      if (states[i] == name) return i;
    throw ValidationError("step references unknown state '" + name + "'");
  };

  const auto initial_names = string_list(field(j, "initial"), "initial");
  if (initial_names.size() > 1)
    throw ValidationError("interface automaton admits at most one initial state");
  std::optional<std::size_t> initial;
  if (!initial_names.empty()) initial = state_index(initial_names.front());

  const auto inputs = string_list(field(j, "inputs"), "inputs");
  const auto outputs = string_list(field(j, "outputs"), "outputs");
  const auto hidden = string_list(field(j, "hidden"), "hidden");

  std::set<IaStep> steps;
  const auto& steps_json = field(j, "steps");
  if (!steps_json.is_array()) throw ValidationError("steps must be an array");
  for (const auto& s : steps_json) {
    if (!s.is_array() || s.size() != 3 || !s[0].is_string() || !s[1].is_string() ||
        !s[2].is_string())
      throw ValidationError("each step must be [from, action, to]");
    steps.insert({state_index(s[0].get<std::string>()), s[1].get<std::string>(),
                  state_index(s[2].get<std::string>())});
  }

  return InterfaceAutomaton(states, initial, {inputs.begin(), inputs.end()},
                            {outputs.begin(), outputs.end()}, {hidden.begin(), hidden.end()},
                            std::move(steps));
}

Json to_json(const StructuredAlphabet& a) {
  Json components = Json::array();
  for (const auto& c : a.components())
    components.push_back(Json{{"id", c.id}, {"symbols", c.symbols}});
  return Json{{"kind", a.kind() == AlphabetKind::Tuple ? "tuple" : "union"},
              {"components", components}};
}

StructuredAlphabet alphabet_from_json(const Json& j) {
  const auto kind = field(j, "kind").get<std::string>();
  const auto& comps = field(j, "components");
  if (!comps.is_array() || comps.empty())
    throw ValidationError("alphabet needs a non-empty component array");
  std::vector<AlphabetComponent> components;
  for (const auto& c : comps)
    components.emplace_back(field(c, "id").get<std::string>(),
                            string_list(field(c, "symbols"), "symbols"));
  if (kind == "tuple") return StructuredAlphabet::tuple(std::move(components));
  if (kind == "union") return StructuredAlphabet::disjoint_union(std::move(components));
  throw ValidationError("alphabet kind must be 'tuple' or 'union'");
}

Json to_json(const Dfa& d) {
  Json delta = Json::array();
  for (std::size_t s = 0; s < d.state_count(); ++s)
    for (std::size_t x = 0; x < d.alphabet().size(); ++x)
      delta.push_back(Json::array({s, d.alphabet().symbol(x), d.next(s, x)}));
  Json accepting = Json::array();
  for (std::size_t s = 0; s < d.state_count(); ++s)
    if (d.is_accepting(s)) accepting.push_back(s);
  return Json{{"alphabet", to_json(d.alphabet())},
              {"states", d.state_count()},
              {"initial", d.initial()},
              {"accepting", accepting},
              {"delta", delta}};
}

Dfa language_from_json(const Json& j) {
  auto alphabet = alphabet_from_json(field(j, "alphabet"));

  if (j.contains("words")) {
    const auto& words_json = j.at("words");
    if (!words_json.is_array()) throw ValidationError("words must be an array");
    std::vector<std::vector<std::vector<std::string>>> words;
    for (const auto& w : words_json) {
      if (!w.is_array()) throw ValidationError("each word must be an array of symbols");
      std::vector<std::vector<std::string>> word;
      for (const auto& sym : w) word.push_back(raw_symbol(sym));
      words.push_back(std::move(word));
    }
    return from_raw_words(std::move(alphabet), words);
  }

  const std::size_t states = field(j, "states").get<std::size_t>();
  const std::size_t initial = field(j, "initial").get<std::size_t>();
  std::vector<bool> accepting(states, false);
  for (const auto& s : field(j, "accepting")) {
    const auto i = s.get<std::size_t>();
    if (i >= states) throw ValidationError("accepting state out of range");
    accepting[i] = true;
  }

  const std::size_t m = alphabet.size();
  std::vector<std::size_t> delta(states * m, states);  // poison: caught below
  const auto& delta_json = field(j, "delta");
  if (!delta_json.is_array()) throw ValidationError("delta must be an array");
  for (const auto& row : delta_json) {
    if (!row.is_array() || row.size() != 3)
      throw ValidationError("each delta row must be [state, symbol, state]");
    const auto from = row[0].get<std::size_t>();
    const auto to = row[2].get<std::size_t>();
    const auto sym = alphabet.index_of(raw_symbol(row[1]));
    if (!sym) throw ValidationError("delta row uses a symbol outside the alphabet");
    if (from >= states || to >= states) throw ValidationError("delta row state out of range");
    delta[from * m + *sym] = to;
  }
  for (auto t : delta)
    if (t >= states) throw ValidationError("transition table is not total");

  return Dfa(std::move(alphabet), states, initial, std::move(accepting), std::move(delta));
}

Json to_json(const AxiomReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back(Json{{"axiom", v.axiom}, {"witness", v.witness}});
  return Json{{"ok", r.ok()}, {"checked", r.checked}, {"violations", violations}};
}

LanguageSieve sieve_from_json(const Json& j) {
  const auto mode = field(j, "mode").get<std::string>();
  if (mode != "sync" && mode != "async")
    throw ValidationError("sieve mode must be 'sync' or 'async'");
  AlphabetRegistry registry;
  const auto& alphabets = field(j, "alphabets");
  if (!alphabets.is_array()) throw ValidationError("alphabets must be an array");
  for (const auto& c : alphabets)
    registry.add(AlphabetComponent(field(c, "id").get<std::string>(),
                                   string_list(field(c, "symbols"), "symbols")));
  return LanguageSieve(std::move(registry),
                       mode == "sync" ? LanguageSieve::Mode::Sync : LanguageSieve::Mode::Async);
}

}  // namespace preheap
