#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "preheap/errors.hpp"

namespace preheap {

/** A subset of a fixed, ordered universe of named atoms, stored as a bit
    mask. Two sets interoperate only when their universes are identical
    (same atoms, same order); mixing them is a ValidationError. */
class FiniteSet {
 public:
  FiniteSet(std::vector<std::string> universe, std::uint64_t mask)
      : universe_(std::move(universe)), mask_(mask) {
    validate_universe(universe_);
    if (universe_.size() < 64 && (mask_ >> universe_.size()) != 0)
      throw ValidationError("FiniteSet: mask wider than universe");
  }

  FiniteSet(std::vector<std::string> universe, const std::vector<std::string>& members)
      : universe_(std::move(universe)), mask_(0) {
    validate_universe(universe_);
    for (const auto& m : members) {
      const auto it = std::find(universe_.begin(), universe_.end(), m);
      if (it == universe_.end())
        throw ValidationError("FiniteSet: member '" + m + "' not in universe");
      mask_ |= std::uint64_t{1} << static_cast<std::size_t>(it - universe_.begin());
    }
  }

  static FiniteSet empty(std::vector<std::string> universe) {
    return FiniteSet(std::move(universe), std::uint64_t{0});
  }

  static FiniteSet full(std::vector<std::string> universe) {
    const auto n = universe.size();
    return FiniteSet(std::move(universe), full_mask(n));
  }

  const std::vector<std::string>& universe() const { return universe_; }
  std::uint64_t mask() const { return mask_; }
  std::size_t universe_size() const { return universe_.size(); }

  bool contains(const std::string& atom) const {
    const auto it = std::find(universe_.begin(), universe_.end(), atom);
    return it != universe_.end() &&
           (mask_ >> static_cast<std::size_t>(it - universe_.begin())) & 1u;
  }

  std::vector<std::string> members() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < universe_.size(); ++i)
      if ((mask_ >> i) & 1u) out.push_back(universe_[i]);
    return out;
  }

  FiniteSet intersect(const FiniteSet& other) const {
    require_same_universe(other);
    return FiniteSet(universe_, mask_ & other.mask_);
  }

  FiniteSet unite(const FiniteSet& other) const {
    require_same_universe(other);
    return FiniteSet(universe_, mask_ | other.mask_);
  }

  FiniteSet complement() const {
    return FiniteSet(universe_, ~mask_ & full_mask(universe_.size()));
  }

  bool subset_of(const FiniteSet& other) const {
    require_same_universe(other);
    return (mask_ & ~other.mask_) == 0;
  }

  bool operator==(const FiniteSet& other) const {
    return universe_ == other.universe_ && mask_ == other.mask_;
  }

  std::string show() const {
    std::string out = "{";
    bool first = true;
    for (const auto& m : members()) {
      if (!first) out += ",";
      out += m;
      first = false;
    }
    return out + "}";
  }

 private:
  static std::uint64_t full_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  static void validate_universe(const std::vector<std::string>& universe) {
    if (universe.size() > 62) throw ValidationError("FiniteSet: universe too large");
    std::set<std::string> seen;
    for (const auto& a : universe)
      if (!seen.insert(a).second)
        throw ValidationError("FiniteSet: duplicate atom '" + a + "'");
  }

  void require_same_universe(const FiniteSet& other) const {
    if (universe_ != other.universe_)
      throw ValidationError("FiniteSet: universes differ (" + show() + " vs " + other.show() + ")");
  }

  std::vector<std::string> universe_;
  std::uint64_t mask_;
};

}  // namespace preheap
