#pragma once

#include "scatterlab/cubes.hpp"

#include <set>
#include <string>
#include <variant>

namespace scatterlab {

Term build_Kn(int n);
Term build_XS(const std::set<int>& S);
/// Lifts every listed component [a, b] of t to the cube [a, b]^n.
CubeFamily lift_cubes(const Term& t, int n, int depth);

struct Frames {
  Box base;  // [-1, 0]^2
  std::vector<int> ms;
  std::vector<FrameRegion> frames;
};
Frames build_frames(const std::set<int>& S, bool integer_scaled);
FrameRegion build_frame(int m, bool integer_scaled);

BoxUnion build_YS_prop3(const std::set<int>& S, int n, int windows = 6);

Term build_Zn(int n);
/// Windows 1..|bits|+1, the last one closing the final run.
Term build_Ug(const std::vector<int>& bits);

Term build_YS_td(const std::set<int>& S);

/// Discrete Z with Z' = a and Z disjoint from a.
/// Throws Error(not_totally_disconnected).
Term discrete_approximant(const Term& a);

/// The p points p^n + 1/(k p^n), k = 1..p.
Term G_group(int p, int n);
Term build_AS(const std::set<int>& S, int N);

Term build_Xu(const Rat& u, int N, bool open = false);

/// Midpoint of every component; points stay.
Term representative_points(const Term& t);

enum class FamilyId { kn, xs, xs_cubes, frames_zs, frame, ys_prop3, ug, ys_td, discrete, as_primes, xu };

std::string_view family_name(FamilyId id);
/// Throws Error(usage) for unknown ids.
FamilyId parse_family(std::string_view name);

struct FamilySpec {
  FamilyId id = FamilyId::kn;
  std::set<int> S;
  std::vector<int> bits;
  int n = 1;          // family index or dimension, as the family requires
  Rat u = 2;
  int depth = 6;
  std::string label;
};

/// Checks the family's parameter preconditions. Throws Error(range/validation).
void validate_spec(const FamilySpec& spec);

using Built = std::variant<Term, BoxUnion, CubeFamily, Frames>;
Built build(const FamilySpec& spec);

}  // namespace scatterlab
