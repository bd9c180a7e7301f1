#pragma once

#include "scatterlab/lowered.hpp"

#include <vector>

namespace scatterlab {

struct Piece {
  Rat lo, hi;
  bool open = false;
  bool operator==(const Piece&) const = default;
};

/// Depth-bounded finite picture of a term. Every listed point and interval
/// lies in the denotation; every point of the denotation lies within
/// `tolerance` of something listed.
struct Approximation {
  int depth = 1;
  std::vector<Rat> points;      // sorted, distinct
  std::vector<Piece> intervals; // sorted by lo
  std::vector<Hull> windows;    // regions whose contents were not listed
  Rat tolerance;
};

/// Throws Error(validation) when a term violates a structural invariant.
void validate(const Term& t);

bool member(const Term& t, const Rat& x);

Approximation enumerate(const Term& t, int depth);

/// Set equality: canonical forms agree, or else membership agrees on every
/// probe (points, interval ends and midpoints, window ends) of both
/// depth-`depth` enumerations.
bool probe_equal(const Term& a, const Term& b, int depth = 6);

/// Result of intersecting two terms: either infinitely many points or the
/// finite list of common points.
struct Meet {
  bool infinite = false;
  std::vector<Rat> points;
  bool empty() const { return !infinite && points.empty(); }
};

/// Throws Error(undecidable_pair) outside the supported pair classes.
Meet common_points(const Term& a, const Term& b);
bool meets(const Term& a, const Term& b);

/// Least point of the Cantor set on [lo, hi] that is >= x, if any.
std::optional<Rat> cantor_ceil(const Rat& lo, const Rat& hi, const Rat& x);
/// Greatest point of the Cantor set on [lo, hi] that is <= x, if any.
std::optional<Rat> cantor_floor(const Rat& lo, const Rat& hi, const Rat& x);

}  // namespace scatterlab
