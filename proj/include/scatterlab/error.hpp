#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scatterlab {

enum class ErrorKind {
  validation,
  parse,
  range,
  undecidable_pair,
  unsupported_split,
  horizon_exceeded,
  not_interval_union,
  not_supported,
  profile_mismatch,
  not_well_ordered,
  not_totally_disconnected,
  chain_intractable,
  non_injective,
  dimension_mismatch,
  structural_mismatch,
  usage,
};

std::string_view to_string(ErrorKind kind);

/// The single exception type thrown by the library. `kind()` is stable and
/// is what the CLI reports in its JSON diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace scatterlab
