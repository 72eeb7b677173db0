#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "preheap/errors.hpp"

/** Core algebra: a preorder with a monotone binary source multiplication `mu`
    and an antitone involution `gamma`, subject to the regularity axioms

      A1 : gamma(gamma(a)) ~ a
      A2a: mu(a, gamma(mu(gamma(b), a))) <= b        (left regularity)
      A2b: mu(gamma(mu(a, gamma(b))), a) <= b        (right regularity)

    Regularity is exactly what makes source multiplication "invertible": the
    derived target multiplication `tau` yields closed-form largest solutions of
    mu(a, x) <= b and mu(x, a) <= b, and smallest solutions of b <= tau(a, x).
    Everything in this header is generic over a carrier; the concrete theories
    (Boolean lattices, contracts, interface automata, languages) plug in via
    the Heap concept below. */
namespace preheap {

/** A theory instance: one element type with a preorder test, a source
    multiplication, an involution, and a printer for diagnostics. All carriers
    are immutable values; every operation is pure. */
template <typename H>
concept Heap = requires(const H& h, const typename H::Element& a, const typename H::Element& b) {
  typename H::Element;
  { h.le(a, b) } -> std::convertible_to<bool>;
  { h.mu(a, b) } -> std::convertible_to<typename H::Element>;
  { h.gamma(a) } -> std::convertible_to<typename H::Element>;
  { h.show(a) } -> std::convertible_to<std::string>;
};

/** A heap whose carrier can be enumerated exhaustively. Required by the axiom
    checkers and by the brute-force oracles. */
template <typename H>
concept EnumerableHeap = Heap<H> && requires(const H& h) {
  { h.elements() } -> std::convertible_to<std::vector<typename H::Element>>;
};

/** Mutual refinement. Preorders need not be antisymmetric, so all "equalities"
    between carrier elements are stated up to `equiv`. */
template <Heap H>
bool equiv(const H& h, const typename H::Element& a, const typename H::Element& b) {
  return h.le(a, b) && h.le(b, a);
}

/** Target multiplication, the De Morgan dual of `mu`:
    tau(a, b) = gamma(mu(gamma(a), gamma(b))). */
template <Heap H>
typename H::Element tau(const H& h, const typename H::Element& a, const typename H::Element& b) {
  return h.gamma(h.mu(h.gamma(a), h.gamma(b)));
}

/** Largest x with mu(a, x) <= b, computed as tau(b, gamma(a)).
    `(mu_a, tau^{gamma a})` is an adjoint pair, so
    mu(a, x) <= b iff x <= quotient_right(h, a, b). */
template <Heap H>
typename H::Element quotient_right(const H& h, const typename H::Element& a,
                                   const typename H::Element& b) {
  return tau(h, b, h.gamma(a));
}

/** Largest x with mu(x, a) <= b, computed as tau(gamma(a), b). */
template <Heap H>
typename H::Element quotient_left(const H& h, const typename H::Element& a,
                                  const typename H::Element& b) {
  return tau(h, h.gamma(a), b);
}

/** Smallest x with b <= tau(a, x), computed as mu(b, gamma(a)): right
    multiplication by gamma(a) is the left adjoint of left target
    multiplication by a. On commutative carriers this coincides with
    mu(gamma(a), b). For contracts this operation is known as separation. */
template <Heap H>
typename H::Element smallest_tau_solution(const H& h, const typename H::Element& a,
                                          const typename H::Element& b) {
  return h.mu(b, h.gamma(a));
}

/** Whether y <= a/x iff x <= y\a holds for this triple, where a/x is the
    largest z with mu(x, z) <= a and y\a is the largest z with mu(z, y) <= a.
    On a genuine heap this biconditional holds for every triple; the property
    suites call this on exhaustive or sampled triples. */
template <Heap H>
bool isolate_unknown_check(const H& h, const typename H::Element& a,
                           const typename H::Element& x, const typename H::Element& y) {
  const bool lhs = h.le(y, quotient_right(h, x, a));
  const bool rhs = h.le(x, quotient_left(h, y, a));
  return lhs == rhs;
}

struct AxiomViolation {
  std::string axiom;    ///< "reflexive", "transitive", "A1", "antitone", "monotone-left", "monotone-right", "A2a", "A2b"
  std::string witness;  ///< the elements that break the instance, printed via show()
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  std::size_t checked = 0;  ///< number of axiom instances evaluated

  bool ok() const { return violations.empty(); }
};

namespace detail {

class WitnessSink {
 public:
  WitnessSink(AxiomReport& report, std::size_t cap) : report_(report), cap_(cap) {}

  void offer(const std::string& axiom, const std::string& witness) {
    std::size_t count = 0;
    for (const auto& v : report_.violations)
      if (v.axiom == axiom) ++count;
    if (count < cap_) report_.violations.push_back({axiom, witness});
  }

 private:
  AxiomReport& report_;
  std::size_t cap_;
};

}  // namespace detail

/** Exhaustively checks the heap axioms over the given element list: preorder
    laws for `le`, involutivity and antitonicity of `gamma`, monotonicity of
    `mu` in each argument, and both regularity conditions. An empty report
    means every checked instance of every axiom holds. At most
    `max_witnesses` violations are recorded per axiom. */
template <Heap H>
AxiomReport check_axioms(const H& h, const std::vector<typename H::Element>& elems,
                         std::size_t max_witnesses = 10) {
  AxiomReport report;
  detail::WitnessSink sink(report, max_witnesses);
  const std::size_t n = elems.size();

  for (std::size_t i = 0; i < n; ++i) {
    ++report.checked;
    if (!h.le(elems[i], elems[i])) sink.offer("reflexive", h.show(elems[i]));
    ++report.checked;
    if (!equiv(h, h.gamma(h.gamma(elems[i])), elems[i])) sink.offer("A1", h.show(elems[i]));
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = elems[i];
      const auto& b = elems[j];
      const std::string pair = h.show(a) + ", " + h.show(b);

      ++report.checked;
      if (h.le(a, b) && !h.le(h.gamma(b), h.gamma(a))) sink.offer("antitone", pair);

      // A2a unfolds to mu(a, gamma(mu(gamma(b), a))) <= b, A2b to its mirror.
      ++report.checked;
      if (!h.le(h.mu(a, h.gamma(h.mu(h.gamma(b), a))), b)) sink.offer("A2a", pair);
      ++report.checked;
      if (!h.le(h.mu(h.gamma(h.mu(a, h.gamma(b))), a), b)) sink.offer("A2b", pair);

      if (h.le(a, b)) {
        for (std::size_t k = 0; k < n; ++k) {
          const auto& c = elems[k];
          const std::string triple = pair + ", " + h.show(c);
          ++report.checked;
          if (h.le(b, c) && !h.le(a, c)) sink.offer("transitive", triple);
          ++report.checked;
          if (!h.le(h.mu(c, a), h.mu(c, b))) sink.offer("monotone-right", triple);
          ++report.checked;
          if (!h.le(h.mu(a, c), h.mu(b, c))) sink.offer("monotone-left", triple);
        }
      }
    }
  }
  return report;
}

/** Same, over the carrier's own enumeration. */
template <EnumerableHeap H>
AxiomReport check_axioms(const H& h, std::size_t max_witnesses = 10) {
  return check_axioms(h, h.elements(), max_witnesses);
}

template <typename E>
struct IdentityProbe {
  E identity;          ///< a left identity for mu, confirmed two-sided up to equiv
  AxiomReport report;  ///< violations of two-sidedness or of gamma(e) being a tau identity
};

/** Scans the enumeration for a left identity e of `mu`. When one exists, it
    must be a double-sided identity for `mu`, and gamma(e) a double-sided
    identity for `tau`; any counterexample lands in the report. Absence of an
    identity is a valid result (nullopt). */
template <EnumerableHeap H>
std::optional<IdentityProbe<typename H::Element>> identity_probe(const H& h,
                                                                 std::size_t max_witnesses = 10) {
  const auto elems = h.elements();
  for (const auto& e : elems) {
    bool left_identity = true;
    for (const auto& x : elems) {
      if (!equiv(h, h.mu(e, x), x)) {
        left_identity = false;
        break;
      }
    }
    if (!left_identity) continue;

    IdentityProbe<typename H::Element> probe{e, {}};
    detail::WitnessSink sink(probe.report, max_witnesses);
    const auto ge = h.gamma(e);
    for (const auto& x : elems) {
      ++probe.report.checked;
      if (!equiv(h, h.mu(x, e), x)) sink.offer("mu-right-identity", h.show(x));
      ++probe.report.checked;
      if (!equiv(h, tau(h, ge, x), x)) sink.offer("tau-left-identity", h.show(x));
      ++probe.report.checked;
      if (!equiv(h, tau(h, x, ge), x)) sink.offer("tau-right-identity", h.show(x));
    }
    return probe;
  }
  return std::nullopt;
}

}  // namespace preheap
