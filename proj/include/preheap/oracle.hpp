#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "preheap/heap.hpp"
#include "preheap/sieve.hpp"

/** Brute-force verification of quotient claims. Nothing here uses the
    closed-form solvers: solutions are found by scanning the carrier, maxima
    by pairwise comparison. This is the ground truth the closed forms are
    checked against. */
namespace preheap {

enum class Side {
  Right,  ///< the unknown is the right factor: mu(a, x) <= b
  Left    ///< the unknown is the left factor: mu(x, a) <= b
};

inline const char* to_string(Side s) { return s == Side::Right ? "right" : "left"; }

template <typename E>
struct SolutionSet {
  E a, b;
  Side side;
  std::vector<E> solutions;  ///< every carrier element satisfying the inequality
  std::vector<E> maxima;     ///< the solutions dominating all solutions
};

/** Scans the whole carrier for the x satisfying the side's inequality. */
template <EnumerableHeap H>
SolutionSet<typename H::Element> enumerate_solutions(const H& h, const typename H::Element& a,
                                                     const typename H::Element& b, Side side) {
  SolutionSet<typename H::Element> out{a, b, side, {}, {}};
  for (const auto& x : h.elements()) {
    const auto composed = side == Side::Right ? h.mu(a, x) : h.mu(x, a);
    if (h.le(composed, b)) out.solutions.push_back(x);
  }
  for (const auto& x : out.solutions) {
    bool dominates = true;
    for (const auto& y : out.solutions) {
      if (!h.le(y, x)) {
        dominates = false;
        break;
      }
    }
    if (dominates) out.maxima.push_back(x);
  }
  return out;
}

/** True iff the closed-form quotient for (a, b, side) is itself a solution and
    dominates every enumerated solution, i.e. it is a maximum of the solution
    set up to mutual refinement. */
template <EnumerableHeap H>
bool verify_quotient(const H& h, const typename H::Element& a, const typename H::Element& b,
                     Side side) {
  const auto q = side == Side::Right ? quotient_right(h, a, b) : quotient_left(h, a, b);
  const auto composed = side == Side::Right ? h.mu(a, q) : h.mu(q, a);
  if (!h.le(composed, b)) return false;
  const auto set = enumerate_solutions(h, a, b, side);
  for (const auto& x : set.solutions)
    if (!h.le(x, q)) return false;
  return true;
}

/** Whether Z is a pointwise-maximal solution of compose(A, z) <= B in the
    language sieve: Z must solve the inequality on words up to length k, and
    every word of length <= k missing from Z must break the inequality when
    added. Candidate-language enumeration is doubly exponential; the
    add-one-word test is equivalent here because language heaps are powerset
    lattices whose solution sets are closed under union. Z must live at the
    join of A's and B's indices. */
bool pointwise_maximality(const LanguageSieve& sieve, const Dfa& A, const Dfa& B, const Dfa& Z,
                          std::size_t k);

/** Adjunction audit: le(mu(a, x), b) iff le(x, quotient(a, b)) over every
    triple from `elems`, for both sides. Returns a witness string for the
    first failing triple, empty when all pass. */
template <Heap H>
std::string adjunction_counterexample(const H& h, const std::vector<typename H::Element>& elems) {
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      const auto qr = quotient_right(h, a, b);
      const auto ql = quotient_left(h, a, b);
      for (const auto& x : elems) {
        if (h.le(h.mu(a, x), b) != h.le(x, qr))
          return "right: a=" + h.show(a) + " x=" + h.show(x) + " b=" + h.show(b);
        if (h.le(h.mu(x, a), b) != h.le(x, ql))
          return "left: a=" + h.show(a) + " x=" + h.show(x) + " b=" + h.show(b);
      }
    }
  }
  return {};
}

}  // namespace preheap
