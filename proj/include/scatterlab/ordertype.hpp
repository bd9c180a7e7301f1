#pragma once

#include "scatterlab/term.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace scatterlab {

/// Ordinal below w^w in Cantor normal form: (exponent, coefficient) pairs
/// with strictly decreasing exponents and positive coefficients.
struct OrdCNF {
  std::vector<std::pair<int, long>> terms;

  static OrdCNF finite(long n);
  static OrdCNF omega_power(int e, long coefficient = 1);
  bool is_zero() const { return terms.empty(); }
  /// "w^3+w·2+5"; zero renders as "0".
  std::string str() const;
  bool operator==(const OrdCNF&) const = default;
};

OrdCNF add(const OrdCNF& a, const OrdCNF& b);
/// a·w: w^(e+1) for leading exponent e, zero for zero.
OrdCNF mul_omega(const OrdCNF& a);
std::strong_ordering cmp(const OrdCNF& a, const OrdCNF& b);

/// Display-only stand-in for w^w, which is never used in arithmetic.
inline constexpr std::string_view kOmegaToOmega = "w^w";

/// Order type of a compact well-ordered scattered term.
/// Throws Error(not_well_ordered).
OrdCNF scattered_order_type(const Term& t);

/// Linear order types of the U_g fragment.
struct LinType {
  enum class Tag { fin, zeta, sum, omega_seq };
  Tag tag = Tag::fin;
  long k = 0;
  std::vector<LinType> items;  // sum parts, or the prefix of an omega sequence

  static LinType fin(long k);
  static LinType zeta();
  static LinType sum(std::vector<LinType> parts);
  static LinType omega_seq(std::vector<LinType> prefix);

  /// Flattened sums, merged finite runs, no empty finite parts.
  LinType canonical() const;
  /// "1+z+3+z+…" style.
  std::string str() const;
  bool operator==(const LinType&) const = default;
};

/// Equality on the fragment; nullopt when the prefixes differ in length.
std::optional<bool> lin_equal(const LinType& a, const LinType& b);

/// w-sequence with prefix 1, z, 2+g(1), z, 2+g(2), ...
LinType ug_order_type(const std::vector<int>& bits);

}  // namespace scatterlab
