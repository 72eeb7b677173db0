#pragma once

#include <stdexcept>
#include <string>

namespace preheap {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Malformed or mismatched values: broken invariants, incompatible universes,
    unknown symbols, bad serialized input. */
struct ValidationError : Error {
  using Error::Error;
};

/** The operation is well-formed but has no defined result for these operands,
    e.g. composing incompatible interface automata. */
struct TheoryError : Error {
  using Error::Error;
};

/** Two interface automata cannot be put side by side at all (clashing action sets). */
struct ComposabilityError : TheoryError {
  using TheoryError::TheoryError;
};

/** The operands are composable but no legal environment avoids illegal states. */
struct IncompatibilityError : TheoryError {
  using TheoryError::TheoryError;
};

}  // namespace preheap
