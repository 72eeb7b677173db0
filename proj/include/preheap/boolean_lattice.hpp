#pragma once

#include <string>
#include <vector>

#include "preheap/finite_set.hpp"

namespace preheap {

/** The powerset lattice of a finite universe, ordered by inclusion, with
    intersection as source multiplication and complement as involution. The
    derived target multiplication is union, and the right quotient of (a, b)
    comes out as the implication b or not-a. */
class BooleanLattice {
 public:
  using Element = FiniteSet;

  explicit BooleanLattice(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw ValidationError("BooleanLattice: empty universe");
    // FiniteSet validates distinctness.
    (void)FiniteSet::empty(atoms_);
  }

  bool le(const Element& a, const Element& b) const { return a.subset_of(b); }
  Element mu(const Element& a, const Element& b) const { return a.intersect(b); }
  Element gamma(const Element& a) const { return a.complement(); }
  std::string show(const Element& a) const { return a.show(); }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    const std::uint64_t count = std::uint64_t{1} << atoms_.size();
    out.reserve(count);
    for (std::uint64_t m = 0; m < count; ++m) out.emplace_back(atoms_, m);
    return out;
  }

  const std::vector<std::string>& atoms() const { return atoms_; }
  Element top() const { return FiniteSet::full(atoms_); }
  Element bottom() const { return FiniteSet::empty(atoms_); }

 private:
  std::vector<std::string> atoms_;
};

}  // namespace preheap
