#pragma once

#include "scatterlab/rat.hpp"

#include <memory>
#include <string_view>
#include <vector>

namespace scatterlab {

struct TermNode;

enum class Kind {
  empty,
  point,
  interval,
  ladder,
  cantor,
  fwrap,
  affine,
  union_,
  thicken,
  mirror,
  endpoints,
  geo,
  cantor_orbit,
};

std::string_view kind_name(Kind kind);

/// Immutable, cheaply copyable handle to a point-set term over the reals.
/// Equality is structural.
class Term {
 public:
  Term();  // the empty set
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}

  Kind kind() const;
  const TermNode& node() const { return *node_; }
  bool is_empty() const { return kind() == Kind::empty; }

  template <class T>
  const T& as() const;
  template <class T>
  const T* get_if() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  std::shared_ptr<const TermNode> node_;
};

namespace terms {

struct Empty {
  bool operator==(const Empty&) const = default;
};
struct Point {
  Rat at;
  bool operator==(const Point&) const = default;
};
/// Closed [lo, hi] unless `open`, then ]lo, hi[.
struct Interval {
  Rat lo, hi;
  bool open = false;
  bool operator==(const Interval&) const = default;
};
/// { target - offset0 * ratio^k : k >= 0 }, plus target when included.
struct Ladder {
  Rat target, offset0, ratio;
  bool include_target = true;
  bool operator==(const Ladder&) const = default;
};
/// Ternary Cantor set placed affinely on [lo, hi].
struct Cantor {
  Rat lo, hi;
  bool operator==(const Cantor&) const = default;
};
/// Union over k >= 1 of the copy of `inner` on [1 - 2^(1-k), 1 - 2^-k], plus 1 if include_top.
struct FWrap {
  Term inner;
  bool include_top = true;
  bool operator==(const FWrap&) const = default;
};
/// { scale * x + shift : x in inner }.
struct Affine {
  Rat scale, shift;
  Term inner;
  bool operator==(const Affine&) const = default;
};
struct Union {
  std::vector<Term> parts;
  bool operator==(const Union&) const = default;
};
/// Union of [a, a + eps(a)] over a in inner; eps(a) = min(cap, half gap to the successor), eps(max) = cap.
struct Thicken {
  Term inner;
  Rat cap;
  bool operator==(const Thicken&) const = default;
};
/// inner together with its reflection x -> 2 * center - x.
struct Mirror {
  Rat center;
  Term inner;
  bool operator==(const Mirror&) const = default;
};
/// Endpoints of the components of an interval-union term.
struct EndpointSet {
  Term of;
  bool operator==(const EndpointSet&) const = default;
};
/// Union over j >= 0 of seed scaled toward `center` by ratio^j, plus center if included.
struct Geo {
  Rat center, ratio;
  Term seed;
  bool include_center = false;
  bool operator==(const Geo&) const = default;
};
/// Union of the images of `seed` under every word of the two Cantor maps of [lo, hi].
/// The seed must sit inside the open middle third.
struct CantorOrbit {
  Rat lo, hi;
  Term seed;
  bool operator==(const CantorOrbit&) const = default;
};

}  // namespace terms

// Constructors. They check the local invariants of each variant and throw
// Error(validation) on violation; global invariants are checked by validate().
Term empty();
Term point(Rat at);
Term interval(Rat lo, Rat hi, bool open = false);
Term ladder(Rat target, Rat offset0, Rat ratio, bool include_target);
Term cantor(Rat lo, Rat hi);
Term fwrap(Term inner, bool include_top);
Term affine(Rat scale, Rat shift, Term inner);
Term union_of(std::vector<Term> parts);
Term thicken(Term inner, Rat cap);
Term mirror(Rat center, Term inner);
Term endpoints(Term of);
Term geo(Rat center, Rat ratio, Term seed, bool include_center);
Term cantor_orbit(Rat lo, Rat hi, Term seed);

/// Total structural order, used to make union canonicalization deterministic.
int compare(const Term& a, const Term& b);

}  // namespace scatterlab

#include "scatterlab/detail/term_node.hpp"
