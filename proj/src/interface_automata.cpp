#include "preheap/interface_automata.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>

namespace preheap {

namespace {

bool disjoint(const std::set<std::string>& a, const std::set<std::string>& b) {
  for (const auto& x : a)
    if (b.count(x)) return false;
  return true;
}

std::set<std::string> set_union(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

std::set<std::string> set_minus(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out;
  for (const auto& x : a)
    if (!b.count(x)) out.insert(x);
  return out;
}

std::set<std::string> set_inter(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out;
  for (const auto& x : a)
    if (b.count(x)) out.insert(x);
  return out;
}

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string show_actions(const std::set<std::string>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : s) {
    if (!first) out += ",";
    out += a;
    first = false;
  }
  return out + "}";
}

}  // namespace

InterfaceAutomaton::InterfaceAutomaton(std::vector<std::string> states,
                                       std::optional<std::size_t> initial,
                                       std::set<std::string> inputs,
                                       std::set<std::string> outputs,
                                       std::set<std::string> hidden, std::set<IaStep> steps)
    : states_(std::move(states)),
      initial_(initial),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      hidden_(std::move(hidden)),
      steps_(std::move(steps)) {
  std::set<std::string> names(states_.begin(), states_.end());
  if (names.size() != states_.size())
    throw ValidationError("interface automaton has duplicate state names");
  if (initial_ && *initial_ >= states_.size())
    throw ValidationError("interface automaton initial state out of range");
  if (!disjoint(inputs_, outputs_) || !disjoint(inputs_, hidden_) || !disjoint(outputs_, hidden_))
    throw ValidationError("interface automaton action sets must be mutually disjoint");
  for (const auto& s : steps_) {
    if (s.from >= states_.size() || s.to >= states_.size())
      throw ValidationError("interface automaton step endpoint out of range");
    if (!has_action(s.action))
      throw ValidationError("interface automaton step uses unknown action '" + s.action + "'");
  }
}

std::set<std::string> InterfaceAutomaton::actions() const {
  return set_union(set_union(inputs_, outputs_), hidden_);
}

bool InterfaceAutomaton::has_action(const std::string& a) const {
  return inputs_.count(a) || outputs_.count(a) || hidden_.count(a);
}

void InterfaceAutomaton::require_state(std::size_t v) const {
  if (v >= states_.size()) throw ValidationError("interface automaton state out of range");
}

std::set<std::string> InterfaceAutomaton::enabled_inputs(std::size_t v) const {
  require_state(v);
  std::set<std::string> out;
  for (const auto& s : steps_)
    if (s.from == v && inputs_.count(s.action)) out.insert(s.action);
  return out;
}

std::set<std::string> InterfaceAutomaton::enabled_outputs(std::size_t v) const {
  require_state(v);
  std::set<std::string> out;
  for (const auto& s : steps_)
    if (s.from == v && outputs_.count(s.action)) out.insert(s.action);
  return out;
}

std::set<std::string> InterfaceAutomaton::enabled_hidden(std::size_t v) const {
  require_state(v);
  std::set<std::string> out;
  for (const auto& s : steps_)
    if (s.from == v && hidden_.count(s.action)) out.insert(s.action);
  return out;
}

std::set<std::size_t> InterfaceAutomaton::successors(std::size_t v, const std::string& a) const {
  require_state(v);
  std::set<std::size_t> out;
  for (const auto& s : steps_)
    if (s.from == v && s.action == a) out.insert(s.to);
  return out;
}

std::string InterfaceAutomaton::describe() const {
  std::string out = "IA[|V|=" + std::to_string(states_.size());
  out += ", init=" + (initial_ ? states_[*initial_] : std::string("-"));
  out += ", I=" + show_actions(inputs_);
  out += ", O=" + show_actions(outputs_);
  out += ", H=" + show_actions(hidden_);
  out += ", |T|=" + std::to_string(steps_.size()) + "]";
  return out;
}

std::set<std::string> shared_actions(const InterfaceAutomaton& p, const InterfaceAutomaton& q) {
  return set_union(set_inter(p.inputs(), q.outputs()), set_inter(p.outputs(), q.inputs()));
}

bool composable(const InterfaceAutomaton& p, const InterfaceAutomaton& q) {
  return disjoint(p.hidden(), q.actions()) && disjoint(q.hidden(), p.actions()) &&
         disjoint(p.outputs(), q.outputs());
}

InterfaceAutomaton product(const InterfaceAutomaton& p, const InterfaceAutomaton& q) {
  if (!composable(p, q))
    throw ComposabilityError("interface automata are not composable: " + p.describe() + " vs " +
                             q.describe());

  const std::size_t np = p.states().size(), nq = q.states().size();
  std::vector<std::string> states;
  states.reserve(np * nq);
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < nq; ++j)
      states.push_back("(" + p.states()[i] + "," + q.states()[j] + ")");

  std::optional<std::size_t> initial;
  if (p.initial() && q.initial()) initial = *p.initial() * nq + *q.initial();

  const auto shared = shared_actions(p, q);
  const auto inputs = set_minus(set_union(p.inputs(), q.inputs()), shared);
  const auto outputs = set_minus(set_union(p.outputs(), q.outputs()), shared);
  const auto hidden = set_union(set_union(p.hidden(), q.hidden()), shared);

  const auto p_only = set_minus(p.actions(), q.actions());
  const auto q_only = set_minus(q.actions(), p.actions());
  const auto both = set_inter(p.actions(), q.actions());

  std::set<IaStep> steps;
  for (const auto& s : p.steps()) {
    if (p_only.count(s.action)) {
      for (std::size_t j = 0; j < nq; ++j)
        steps.insert({s.from * nq + j, s.action, s.to * nq + j});
    } else if (both.count(s.action)) {
      for (const auto& t : q.steps())
        if (t.action == s.action) steps.insert({s.from * nq + t.from, s.action, s.to * nq + t.to});
    }
  }
  for (const auto& t : q.steps()) {
    if (q_only.count(t.action)) {
      for (std::size_t i = 0; i < np; ++i)
        steps.insert({i * nq + t.from, t.action, i * nq + t.to});
    }
  }

  return InterfaceAutomaton(std::move(states), initial, inputs, outputs, hidden, std::move(steps));
}

std::set<StatePair> illegal_states(const InterfaceAutomaton& p, const InterfaceAutomaton& q) {
  if (!composable(p, q)) throw ComposabilityError("illegal_states requires composable operands");
  const auto shared = shared_actions(p, q);
  std::set<StatePair> out;
  for (std::size_t i = 0; i < p.states().size(); ++i) {
    const auto po = p.enabled_outputs(i);
    const auto pi = p.enabled_inputs(i);
    for (std::size_t j = 0; j < q.states().size(); ++j) {
      const auto qo = q.enabled_outputs(j);
      const auto qi = q.enabled_inputs(j);
      for (const auto& a : shared) {
        if ((po.count(a) && !qi.count(a)) || (qo.count(a) && !pi.count(a))) {
          out.insert({i, j});
          break;
        }
      }
    }
  }
  return out;
}

std::set<StatePair> incompatible_states(const InterfaceAutomaton& p, const InterfaceAutomaton& q) {
  const auto prod = product(p, q);
  const std::size_t nq = q.states().size();
  std::set<std::size_t> bad;
  for (const auto& [i, j] : illegal_states(p, q)) bad.insert(i * nq + j);

  // Backward closure under steps the environment cannot prevent.
  const auto controlled = set_union(prod.outputs(), prod.hidden());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& s : prod.steps()) {
      if (bad.count(s.to) && !bad.count(s.from) && controlled.count(s.action)) {
        bad.insert(s.from);
        changed = true;
      }
    }
  }

  std::set<StatePair> out;
  for (auto s : bad) out.insert({s / nq, s % nq});
  return out;
}

InterfaceAutomaton compose(const InterfaceAutomaton& p, const InterfaceAutomaton& q) {
  const auto prod = product(p, q);
  const std::size_t nq = q.states().size();
  std::set<std::size_t> bad;
  for (const auto& [i, j] : incompatible_states(p, q)) bad.insert(i * nq + j);

  if (prod.initial() && bad.count(*prod.initial()))
    throw IncompatibilityError("interface automata are incompatible: no legal environment for " +
                               prod.states()[*prod.initial()]);

  std::vector<std::size_t> remap(prod.states().size(), SIZE_MAX);
  std::vector<std::string> states;
  for (std::size_t s = 0; s < prod.states().size(); ++s) {
    if (!bad.count(s)) {
      remap[s] = states.size();
      states.push_back(prod.states()[s]);
    }
  }

  std::optional<std::size_t> initial;
  if (prod.initial()) initial = remap[*prod.initial()];

  std::set<IaStep> steps;
  for (const auto& s : prod.steps())
    if (!bad.count(s.from) && !bad.count(s.to)) steps.insert({remap[s.from], s.action, remap[s.to]});

  return InterfaceAutomaton(std::move(states), initial, prod.inputs(), prod.outputs(),
                            prod.hidden(), std::move(steps));
}

InterfaceAutomaton mirror(const InterfaceAutomaton& p) {
  return InterfaceAutomaton(p.states(), p.initial(), p.outputs(), p.inputs(), p.hidden(),
                            p.steps());
}

std::set<std::size_t> eps_closure(const InterfaceAutomaton& p, std::size_t v) {
  p.require_state(v);
  std::set<std::size_t> closure{v};
  std::deque<std::size_t> queue{v};
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (const auto& s : p.steps()) {
      if (s.from == u && p.hidden().count(s.action) && !closure.count(s.to)) {
        closure.insert(s.to);
        queue.push_back(s.to);
      }
    }
  }
  return closure;
}

ExtEnabled ext_enabled(const InterfaceAutomaton& p, std::size_t v) {
  ExtEnabled out;
  for (auto u : eps_closure(p, v)) {
    const auto i = p.enabled_inputs(u);
    const auto o = p.enabled_outputs(u);
    out.inputs.insert(i.begin(), i.end());
    out.outputs.insert(o.begin(), o.end());
  }
  return out;
}

std::set<std::size_t> ext_dest(const InterfaceAutomaton& p, std::size_t v, const std::string& a) {
  if (!p.has_action(a)) throw ValidationError("ext_dest: unknown action '" + a + "'");
  std::set<std::size_t> out;
  for (auto u : eps_closure(p, v)) {
    const auto succ = p.successors(u, a);
    out.insert(succ.begin(), succ.end());
  }
  return out;
}

SimulationRelation alternating_simulation(const InterfaceAutomaton& q,
                                          const InterfaceAutomaton& p) {
  const std::size_t nq = q.states().size(), np = p.states().size();
  std::vector<ExtEnabled> q_ext(nq), p_ext(np);
  for (std::size_t u = 0; u < nq; ++u) q_ext[u] = ext_enabled(q, u);
  for (std::size_t v = 0; v < np; ++v) p_ext[v] = ext_enabled(p, v);

  std::map<std::pair<std::size_t, std::string>, std::set<std::size_t>> q_dest, p_dest;
  const auto dest_q = [&](std::size_t u, const std::string& a) -> const std::set<std::size_t>& {
    auto it = q_dest.find({u, a});
    if (it == q_dest.end()) it = q_dest.emplace(std::pair{u, a}, ext_dest(q, u, a)).first;
    return it->second;
  };
  const auto dest_p = [&](std::size_t v, const std::string& a) -> const std::set<std::size_t>& {
    auto it = p_dest.find({v, a});
    if (it == p_dest.end()) it = p_dest.emplace(std::pair{v, a}, ext_dest(p, v, a)).first;
    return it->second;
  };

  SimulationRelation rel;
  for (std::size_t u = 0; u < nq; ++u)
    for (std::size_t v = 0; v < np; ++v)
      if (subset(p_ext[v].inputs, q_ext[u].inputs) && subset(q_ext[u].outputs, p_ext[v].outputs))
        rel.insert({u, v});

  const auto matched = [&](std::size_t u, std::size_t v, const SimulationRelation& r) {
    for (const auto& a : q_ext[u].outputs) {
      for (auto u2 : dest_q(u, a)) {
        bool found = false;
        for (auto v2 : dest_p(v, a))
          if (r.count({u2, v2})) {
            found = true;
            break;
          }
        if (!found) return false;
      }
    }
    for (const auto& a : p_ext[v].inputs) {
      for (auto v2 : dest_p(v, a)) {
        bool found = false;
        for (auto u2 : dest_q(u, a))
          if (r.count({u2, v2})) {
            found = true;
            break;
          }
        if (!found) return false;
      }
    }
    return true;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = rel.begin(); it != rel.end();) {
      if (!matched(it->first, it->second, rel)) {
        it = rel.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return rel;
}

bool refines(const InterfaceAutomaton& q, const InterfaceAutomaton& p) {
  if (!subset(p.inputs(), q.inputs())) return false;
  if (!subset(q.outputs(), p.outputs())) return false;
  if (!q.initial() || !p.initial()) return false;
  const auto rel = alternating_simulation(q, p);
  return rel.count({*q.initial(), *p.initial()}) > 0;
}

InterfaceAutomaton ia_quotient(const InterfaceAutomaton& p, const InterfaceAutomaton& q) {
  try {
    return mirror(compose(mirror(p), q));
  } catch (const TheoryError& e) {
    throw TheoryError(std::string("quotient undefined for this pair: ") + e.what());
  }
}

InterfaceAutomaton ia_merge(const InterfaceAutomaton& p, const InterfaceAutomaton& q) {
  return mirror(compose(mirror(p), mirror(q)));
}

InterfaceAutomaton ia_separation(const InterfaceAutomaton& p, const InterfaceAutomaton& q) {
  return compose(p, mirror(q));
}

}  // namespace preheap
