#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "preheap/errors.hpp"

namespace preheap {

struct IaStep {
  std::size_t from;
  std::string action;
  std::size_t to;

  auto operator<=>(const IaStep&) const = default;
};

/** An interface automaton: named states, at most one initial state, mutually
    disjoint input/output/hidden action sets, and a step relation. Inputs are
    controlled by the environment, outputs and hidden steps by the component
    itself; that asymmetry drives compatibility and refinement below. */
class InterfaceAutomaton {
 public:
  InterfaceAutomaton(std::vector<std::string> states, std::optional<std::size_t> initial,
                     std::set<std::string> inputs, std::set<std::string> outputs,
                     std::set<std::string> hidden, std::set<IaStep> steps);

  const std::vector<std::string>& states() const { return states_; }
  std::optional<std::size_t> initial() const { return initial_; }
  const std::set<std::string>& inputs() const { return inputs_; }
  const std::set<std::string>& outputs() const { return outputs_; }
  const std::set<std::string>& hidden() const { return hidden_; }
  const std::set<IaStep>& steps() const { return steps_; }

  std::set<std::string> actions() const;
  bool has_action(const std::string& a) const;

  std::set<std::string> enabled_inputs(std::size_t v) const;
  std::set<std::string> enabled_outputs(std::size_t v) const;
  std::set<std::string> enabled_hidden(std::size_t v) const;
  std::set<std::size_t> successors(std::size_t v, const std::string& a) const;

  /** Structural equality (states, actions, steps); refinement both ways is
      the semantic equivalence. */
  bool operator==(const InterfaceAutomaton&) const = default;

  std::string describe() const;

 private:
  void require_state(std::size_t v) const;

  std::vector<std::string> states_;
  std::optional<std::size_t> initial_;
  std::set<std::string> inputs_;
  std::set<std::string> outputs_;
  std::set<std::string> hidden_;
  std::set<IaStep> steps_;

  friend std::set<std::size_t> eps_closure(const InterfaceAutomaton&, std::size_t);
};

using StatePair = std::pair<std::size_t, std::size_t>;
using SimulationRelation = std::set<StatePair>;

/** Actions one side outputs and the other inputs. */
std::set<std::string> shared_actions(const InterfaceAutomaton& p, const InterfaceAutomaton& q);

/** Hidden actions private to each side, and no clash of outputs. */
bool composable(const InterfaceAutomaton& p, const InterfaceAutomaton& q);

/** Full product: interleaving on private actions, synchronization on shared
    ones, which become hidden. Throws ComposabilityError. */
InterfaceAutomaton product(const InterfaceAutomaton& p, const InterfaceAutomaton& q);

/** Product states where one side can emit a shared action the other does not
    accept. */
std::set<StatePair> illegal_states(const InterfaceAutomaton& p, const InterfaceAutomaton& q);

/** Least superset of the illegal states closed under backward steps the
    environment cannot prevent (outputs and hidden actions of the product). A
    state admits a legal environment exactly when it is not in this set. */
std::set<StatePair> incompatible_states(const InterfaceAutomaton& p, const InterfaceAutomaton& q);

/** Product pruned to compatible states. Throws ComposabilityError, or
    IncompatibilityError when the initial product state is incompatible. */
InterfaceAutomaton compose(const InterfaceAutomaton& p, const InterfaceAutomaton& q);

/** The involution: swap inputs and outputs. */
InterfaceAutomaton mirror(const InterfaceAutomaton& p);

std::set<std::size_t> eps_closure(const InterfaceAutomaton& p, std::size_t v);

struct ExtEnabled {
  std::set<std::string> inputs;
  std::set<std::string> outputs;
};

/** Input and output actions enabled somewhere in the hidden closure of v. */
ExtEnabled ext_enabled(const InterfaceAutomaton& p, std::size_t v);

/** Destinations of externally visible a-steps taken from anywhere in the
    hidden closure of v. */
std::set<std::size_t> ext_dest(const InterfaceAutomaton& p, std::size_t v, const std::string& a);

/** The greatest alternating simulation from q to p: pairs (u, v) where v's
    externally enabled inputs are accepted by u, u's outputs are allowed by v,
    and every output step of u (input step of v) is matched by some related
    step of the other side. Computed as a shrinking fixpoint from the full
    relation; the empty relation is a valid result. */
SimulationRelation alternating_simulation(const InterfaceAutomaton& q,
                                          const InterfaceAutomaton& p);

/** q refines p: q accepts at least p's inputs, emits at most p's outputs, and
    some alternating simulation relates their initial states. */
bool refines(const InterfaceAutomaton& q, const InterfaceAutomaton& p);

/** Largest r with compose(q, r) refining p, as mirror(compose(mirror(p), q)).
    Throws TheoryError when the inner composition is undefined. */
InterfaceAutomaton ia_quotient(const InterfaceAutomaton& p, const InterfaceAutomaton& q);

/** Target multiplication: mirror(compose(mirror(p), mirror(q))). */
InterfaceAutomaton ia_merge(const InterfaceAutomaton& p, const InterfaceAutomaton& q);

/** Left adjoint of merging by q: compose(p, mirror(q)). */
InterfaceAutomaton ia_separation(const InterfaceAutomaton& p, const InterfaceAutomaton& q);

/** The interface-automata heap. Source multiplication is partial: composing
    non-composable or incompatible automata throws, and the closed-form
    solvers surface those errors instead of swallowing them. */
struct IaHeap {
  using Element = InterfaceAutomaton;

  bool le(const Element& q, const Element& p) const { return refines(q, p); }
  Element mu(const Element& p, const Element& q) const { return compose(p, q); }
  Element gamma(const Element& p) const { return mirror(p); }
  std::string show(const Element& p) const { return p.describe(); }
};

}  // namespace preheap
