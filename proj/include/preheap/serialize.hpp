#pragma once

#include <json.hpp>

#include "preheap/contracts.hpp"
#include "preheap/finite_set.hpp"
#include "preheap/heap.hpp"
#include "preheap/interface_automata.hpp"
#include "preheap/languages.hpp"
#include "preheap/sieve.hpp"

/** JSON forms of every value the CLI reads or writes. Parsers throw
    ValidationError on malformed documents; emitters produce documents that
    parse back to equal values. */
namespace preheap {

using Json = nlohmann::json;

Json to_json(const FiniteSet& s);
FiniteSet finite_set_from_json(const Json& j);

Json to_json(const Contract& c);
Contract contract_from_json(const Json& j);

Json to_json(const InterfaceAutomaton& a);
InterfaceAutomaton automaton_from_json(const Json& j);

Json to_json(const StructuredAlphabet& a);
StructuredAlphabet alphabet_from_json(const Json& j);

/** Emits the explicit transition-table form. */
Json to_json(const Dfa& d);

/** Accepts either the transition-table form or a finite word list
    ({"alphabet": ..., "words": [[sym, ...], ...]}), compiled to a total DFA.
    A symbol is a plain string or an array of base symbols. */
Dfa language_from_json(const Json& j);

Json to_json(const AxiomReport& r);

/** {"mode": "sync"|"async", "alphabets": [{"id":..., "symbols":[...]}, ...]} */
LanguageSieve sieve_from_json(const Json& j);

}  // namespace preheap
