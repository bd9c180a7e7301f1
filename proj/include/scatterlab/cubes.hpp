#pragma once

#include "scatterlab/linear.hpp"

#include <set>
#include <vector>

namespace scatterlab {

/// Axis-aligned cube corner + edge; open or closed.
struct Box {
  std::vector<Rat> corner;
  Rat edge;
  bool open = false;
  bool operator==(const Box&) const = default;
};

struct BoxUnion {
  int dimension = 1;
  std::vector<Box> boxes;
};

struct FrameRegion {
  Box outer;               // closed
  std::vector<Box> holes;  // their open interiors are removed
};

/// Closures of a and b intersect.
bool touches(const Box& a, const Box& b);

/// Components under "closures intersect", each a sorted list of box indices,
/// ordered by least index. Throws Error(dimension_mismatch).
std::vector<std::vector<size_t>> box_components(const BoxUnion& u);

struct ChainInfo {
  size_t size = 0;          // boxes in the adjacency component
  size_t max_chain = 0;     // longest chain of pairwise consecutive touching boxes
  std::vector<size_t> witness;  // a chain of that length, as box indices
};

/// Throws Error(chain_intractable) for large components that are not full grids.
std::vector<ChainInfo> chain_sizes(const BoxUnion& u);

/// Throws Error(validation) naming the offending hole or pair.
int frame_holes(const FrameRegion& f);

/// Unit cells of a (2m+1)-grid over the frame square that avoid the holes.
/// Throws Error(validation) if the holes are not grid aligned.
long frame_subcube_count(const FrameRegion& f, int m);

/// A cube [lo, hi]^n standing for the linear component [lo, hi] of `scaffold`.
struct LabeledCube {
  Box box;
  Rat lo, hi;
};

struct CubeFamily {
  int dimension = 1;
  Term scaffold;  // the linear set whose components were lifted
  std::vector<LabeledCube> members;
};

/// Throws Error(structural_mismatch) if members do not match the scaffold,
/// Error(horizon_exceeded) past k_max.
std::set<int> recover_S_cubes(const CubeFamily& family, int k_max);

}  // namespace scatterlab
