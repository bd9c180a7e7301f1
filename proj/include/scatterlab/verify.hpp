#pragma once

#include "scatterlab/families.hpp"
#include "scatterlab/json_io.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace scatterlab {

inline constexpr int kProbeDepth = 2;

struct Probe {
  Rat x;
  bool detected = false;
};

/// Probe points: points, interval ends and midpoints, and window ends of the
/// depth-`probe_depth` enumeration.
std::vector<Rat> probe_points(const Term& t, int probe_depth = kProbeDepth);

/// x is detected when enumerate(t, depth) lists a point other than x, an
/// interval or an unlisted window within the enumeration tolerance of x.
std::vector<Probe> numeric_limit_points(const Term& t, int depth, int probe_depth = kProbeDepth);

/// Finite pigeonhole form: returns {n <= M : n <= g(n)} for g given as
/// g(1..M). Throws Error(non_injective) on repeats or non-positive values.
std::set<long> lemma1(const std::vector<long>& g);

struct ClosedInterval {
  Rat lo, hi;
};

struct CoverVerdict {
  bool accepted = false;
  std::string witness;  // "overlap", "gap", "degenerate", "outside" or empty
  std::optional<Rat> at;
};

/// Accepts only the trivial cover {[a, b]}; anything else is refuted.
CoverVerdict lemma2(const Rat& a, const Rat& b, const std::vector<ClosedInterval>& family);

/// Least n with w^n - 1 > v^n / delta.
int prop1_index(const Rat& v, const Rat& w, const Rat& delta);

/// Sizes of the gap-delta clusters whose window p^n satisfies p^-n < delta,
/// sorted ascending. Throws Error(range) unless 0 < delta < 1.
std::vector<int> cluster_profile(const Term& t, const Rat& delta);

struct InvariantOptions {
  int depth = 6;
  int k_max = 8;
  Rat delta = Rat(1, 1000);
  std::optional<int> bits_count;
};

/// Names: signature, recover_S_linear, recover_S_cubes, chain_sizes,
/// bits_profile, cluster_profile, holes, cb_profile, order_type.
const std::vector<std::string>& invariant_names();

/// Canonical JSON value of the named invariant. Throws Error(usage) for an
/// unknown name and Error(not_supported) when the value has the wrong shape.
Json compute_invariant(const Built& value, const std::string& name, const InvariantOptions& options);

struct DistinguishReport {
  FamilyId family = FamilyId::kn;
  std::vector<std::string> labels;
  std::string invariant;
  std::vector<Json> values;  // null when the invariant could not be computed
  std::vector<std::vector<std::string>> verdicts;
  bool all_distinct() const;
};

Json to_json(const DistinguishReport& r);

/// Cells are computed concurrently; assembly order is the member order.
DistinguishReport distinguish_matrix(FamilyId family, const std::vector<FamilySpec>& members,
                                     const std::string& invariant, const InvariantOptions& options);

}  // namespace scatterlab
