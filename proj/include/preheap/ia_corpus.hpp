#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "preheap/heap.hpp"
#include "preheap/interface_automata.hpp"

namespace preheap {

/** Generator configuration for the sampled interface-automata checks. The
    full candidate space is far beyond desk scale, so properties are tested on
    seeded random automata; identical parameters reproduce the corpus. */
struct CorpusParams {
  std::size_t max_states = 4;
  std::size_t max_actions_per_kind = 3;
  std::uint64_t seed = 1;
};

/** Deterministic source of small random interface automata. Generated
    automata always have an initial state and no hidden actions (hidden
    actions only arise through composition). Quotient pairs (P, Q) draw from
    fixed action pools chosen so that mirror(P) and Q stay composable and so
    does the follow-up composition of Q with the quotient: Q's inputs may
    overlap P's outputs, everything else is private. */
class IaCorpus {
 public:
  explicit IaCorpus(CorpusParams params) : params_(params), rng_(params.seed) {}

  const CorpusParams& params() const { return params_; }

  /** A random automaton over the given action sets. */
  InterfaceAutomaton automaton(std::set<std::string> inputs, std::set<std::string> outputs,
                               double input_density = 0.55, double output_density = 0.45);

  /** A random automaton over the corpus's default pools. */
  InterfaceAutomaton any_automaton();

  /** A (specification, known-part) pair with a quotient-friendly signature. */
  std::pair<InterfaceAutomaton, InterfaceAutomaton> quotient_pair();

  /** A candidate with the same interface as `like`, biased toward accepting
      inputs and emitting few outputs. */
  InterfaceAutomaton candidate_like(const InterfaceAutomaton& like);

  /** Step-dropping mutants of `a` (outputs first); likely refinements. */
  std::vector<InterfaceAutomaton> restrictions(const InterfaceAutomaton& a, std::size_t count);

 private:
  std::size_t pick(std::size_t bound);  // uniform in [0, bound)
  bool chance(double probability);
  std::set<std::string> sample_actions(const std::vector<std::string>& pool);

  CorpusParams params_;
  std::mt19937_64 rng_;
};

/** Sampled property run over a seeded corpus. Violations land in `report`
    with the property name and a witness; the counters say how much of the
    space was actually exercised (quotients can be undefined, and compositions
    with a quotient can themselves be undefined — those cases are counted, not
    silently dropped). */
struct CorpusCheck {
  AxiomReport report;
  std::size_t automata = 0;
  std::size_t refining_pairs = 0;          ///< ordered pairs found with refines == true
  std::size_t quotient_pairs = 0;          ///< (P, Q) pairs drawn
  std::size_t quotients_defined = 0;       ///< ia_quotient evaluated
  std::size_t compositions_evaluated = 0;  ///< compose(Q, quotient) evaluated
  std::size_t candidates_accepted = 0;     ///< sampled R' with compose(Q, R') refining P
};

/** Checks, on a corpus drawn from `params`: refines is reflexive and
    transitive; mirror is involutive and antitone; compose(Q, ia_quotient(P,Q))
    refines P whenever both sides evaluate; and every accepted candidate R'
    refines the quotient (collection stops at `candidate_target`). */
CorpusCheck run_corpus_checks(const CorpusParams& params, std::size_t pair_count,
                              std::size_t candidate_target);

}  // namespace preheap
