#pragma once

#include "scatterlab/semantics.hpp"

#include <set>

namespace scatterlab {

/// Set of limit points in the reals, as a canonical term.
Term derive(const Term& t);

/// Topological closure, as a canonical term.
Term closure(const Term& t);

struct CBProfile {
  std::vector<Term> iterates;  // X^(0), X^(1), ...
  /// Least k with X^(k) empty, when reached within the horizon.
  std::optional<int> vanishing_index;
  /// A nonempty fixed point was reached (a perfect part is present).
  bool does_not_vanish = false;
};

CBProfile cb_profile(const Term& t, int k_max);

struct KernelSplit {
  Term kernel;     // maximal dense-in-itself subset
  Term scattered;  // the rest
};

/// Throws Error(unsupported_split) on leaves outside the classification.
KernelSplit kernel_split(const Term& t);

/// { k >= 1 : (P^(k) \ P^(k+1)) meets the kernel }, P the scattered part.
/// Throws Error(horizon_exceeded) when P^(k) does not settle by k_max.
std::set<int> signature(const Term& t, int k_max);

// Variants of the above on lowered terms, without raising the result.
Term derive_lowered(const Term& core);
Term closure_lowered(const Term& core);
KernelSplit split_lowered(const Term& core);

}  // namespace scatterlab
