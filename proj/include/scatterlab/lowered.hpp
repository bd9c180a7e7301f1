#pragma once

// The core algebra. Every term lowers to a normalized combination of
//   Empty, Point, Interval, Cantor, Union, Geo, CantorOrbit
// with all affine maps pushed into the leaves. Semantic operations are
// implemented once, on this form.

#include "scatterlab/term.hpp"

#include <optional>

namespace scatterlab {

struct Hull {
  Rat lo, hi;
  bool operator==(const Hull&) const = default;
};

/// Closed convex hull of the closure of the denotation; nullopt for the empty set.
std::optional<Hull> hull(const Term& t);

/// Lowered, normalized core form. Throws Error(validation) on invalid terms.
Term lower(const Term& t);
bool is_core(const Term& t);

/// Image of a core term under x -> scale * x + shift.
Term transform(const Term& core, const Rat& scale, const Rat& shift);

/// Union flattening, sorting, interval merging and point absorption.
Term normalize(const Term& core);

/// Re-expresses core geo nodes as Ladder / FWrap where the pattern matches.
Term raise(const Term& core);

/// canonical(t) = raise(lower(t)). Idempotent.
Term canonical(const Term& t);

/// Copy j of a geo seed: x -> center + ratio^j (x - center).
Term geo_copy(const terms::Geo& g, long j);

/// Endpoints of the components of a closed interval-union core term.
/// Throws Error(not_interval_union).
Term endpoint_set(const Term& core);

}  // namespace scatterlab
