#pragma once

#include <string>
#include <utility>
#include <vector>

#include "preheap/finite_set.hpp"

namespace preheap {

/** An assume-guarantee contract over a finite behavior universe B: a pair
    (assumptions, guarantees) of behavior sets with A union G = B. The
    constructor rejects pairs violating that invariant instead of repairing
    them; use `saturate` when ingesting raw pairs. */
class Contract {
 public:
  Contract(FiniteSet assumptions, FiniteSet guarantees)
      : assumptions_(std::move(assumptions)), guarantees_(std::move(guarantees)) {
    if (assumptions_.universe() != guarantees_.universe())
      throw ValidationError("Contract: assumptions and guarantees use different universes");
    if (assumptions_.unite(guarantees_).mask() !=
        FiniteSet::full(assumptions_.universe()).mask())
      throw ValidationError("Contract: assumptions and guarantees must cover the universe");
  }

  /** Repairs a raw pair by weakening the guarantees: G := G or not-A. */
  static Contract saturate(const FiniteSet& assumptions, const FiniteSet& guarantees) {
    return Contract(assumptions, guarantees.unite(assumptions.complement()));
  }

  const FiniteSet& assumptions() const { return assumptions_; }
  const FiniteSet& guarantees() const { return guarantees_; }
  const std::vector<std::string>& universe() const { return assumptions_.universe(); }

  /** Refinement: stronger guarantees under weaker assumptions. */
  bool refines(const Contract& other) const {
    return guarantees_.subset_of(other.guarantees_) &&
           other.assumptions_.subset_of(assumptions_);
  }

  /** The involution: swap assumptions and guarantees. */
  Contract reciprocal() const { return Contract(guarantees_, assumptions_); }

  /** Source multiplication: the tightest contract obeyed by two components
      obeying this one and `other`. */
  Contract compose(const Contract& other) const {
    const FiniteSet g = guarantees_.intersect(other.guarantees_);
    const FiniteSet a = assumptions_.intersect(other.assumptions_).unite(g.complement());
    return Contract(a, g);
  }

  /** Target multiplication: fuses viewpoint contracts into one. */
  Contract merge(const Contract& other) const {
    const FiniteSet a = assumptions_.intersect(other.assumptions_);
    const FiniteSet g = guarantees_.intersect(other.guarantees_).unite(a.complement());
    return Contract(a, g);
  }

  /** Largest X with compose(other, X) refining this contract. */
  Contract quotient(const Contract& other) const {
    const FiniteSet a = assumptions_.intersect(other.guarantees_);
    const FiniteSet g = guarantees_.intersect(other.assumptions_).unite(a.complement());
    return Contract(a, g);
  }

  /** Smallest X with this contract refining merge(other, X). */
  Contract separation(const Contract& other) const {
    const FiniteSet g = guarantees_.intersect(other.assumptions_);
    const FiniteSet a = assumptions_.intersect(other.guarantees_).unite(g.complement());
    return Contract(a, g);
  }

  bool operator==(const Contract& other) const {
    return assumptions_ == other.assumptions_ && guarantees_ == other.guarantees_;
  }

  std::string show() const { return "(" + assumptions_.show() + "," + guarantees_.show() + ")"; }

 private:
  FiniteSet assumptions_;
  FiniteSet guarantees_;
};

/** The contract heap over a fixed behavior universe. Enumeration walks all
    3^|B| valid contracts: each behavior sits in A only, in G only, or in
    both (it must sit somewhere, since A union G = B). */
class ContractHeap {
 public:
  using Element = Contract;

  explicit ContractHeap(std::vector<std::string> behaviors) : behaviors_(std::move(behaviors)) {
    if (behaviors_.empty()) throw ValidationError("ContractHeap: empty behavior universe");
    if (behaviors_.size() > 12) throw ValidationError("ContractHeap: universe too large to enumerate");
    (void)FiniteSet::empty(behaviors_);
  }

  bool le(const Element& a, const Element& b) const { return a.refines(b); }
  Element mu(const Element& a, const Element& b) const { return a.compose(b); }
  Element gamma(const Element& a) const { return a.reciprocal(); }
  std::string show(const Element& a) const { return a.show(); }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    const std::size_t n = behaviors_.size();
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= 3;
    out.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
      std::uint64_t a_mask = 0, g_mask = 0;
      std::size_t rest = code;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t trit = rest % 3;  // 0: A only, 1: G only, 2: both
        rest /= 3;
        if (trit != 1) a_mask |= std::uint64_t{1} << i;
        if (trit != 0) g_mask |= std::uint64_t{1} << i;
      }
      out.emplace_back(FiniteSet(behaviors_, a_mask), FiniteSet(behaviors_, g_mask));
    }
    return out;
  }

  const std::vector<std::string>& behaviors() const { return behaviors_; }
  Element top_contract() const {
    return Contract(FiniteSet::full(behaviors_), FiniteSet::full(behaviors_));
  }

 private:
  std::vector<std::string> behaviors_;
};

}  // namespace preheap
