#pragma once

#include "scatterlab/semantics.hpp"

#include <set>
#include <string>

namespace scatterlab {

struct Component {
  enum class Shape { point, interval };
  Shape shape = Shape::interval;
  Rat lo, hi;
  bool open = false;
  std::optional<std::string> tag;
  bool operator==(const Component&) const = default;
};

/// A region left unlisted at the requested depth. Components inside it
/// accumulate at `limit`, which is one of its ends.
struct Window {
  Rat lo, hi, limit;
  bool operator==(const Window&) const = default;
};

struct ComponentList {
  std::vector<Component> components;  // ordered, pairwise separated
  std::vector<Window> windows;        // ordered
  int depth = 1;
  /// Every component with lo below this is listed; nullopt when the list is complete.
  std::optional<Rat> complete_below;
};

/// Endpoints of the components of a closed interval union.
/// Throws Error(not_interval_union).
Term boundary(const Term& t);

/// Throws Error(not_supported) for terms with Cantor leaves.
ComponentList components_upto(const Term& t, int depth);

/// Derivatives B, B', B'', ... of the boundary of a closed interval union,
/// computed lazily. B meets a component only at its endpoints, so all
/// intersections with components are decided there.
class BoundaryTower {
 public:
  explicit BoundaryTower(const Term& t);
  const Term& at(int m);
  /// Number of endpoints of [lo, hi] lying in B^(m).
  int hits(int m, const Rat& lo, const Rat& hi);
  /// For a component meeting B' in both endpoints, min { m >= 1 : B^(m+1) misses it };
  /// nullopt for other components. Throws Error(horizon_exceeded) past k_max.
  std::optional<int> recovery_index(const Rat& lo, const Rat& hi, int k_max);

 private:
  std::vector<Term> iter_;
};

/// Throws Error(horizon_exceeded) or Error(not_interval_union).
std::set<int> recover_S_linear(const Term& t, int k_max);

/// Throws Error(profile_mismatch) when the component order is not of the
/// form 1 + zeta + (2 + g(1)) + zeta + ...
std::vector<int> bits_profile(const Term& t, int count);

}  // namespace scatterlab
