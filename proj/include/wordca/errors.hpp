#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wordca {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown letters, invalid parameters, bad rule tables.
struct InputError : Error {
  using Error::Error;
};

/// A request that runs past the data actually available (prefix too short).
struct BoundaryError : Error {
  using Error::Error;
};

/// Not enough data to decide either way; distinct from a refutation.
struct InsufficientDataError : Error {
  using Error::Error;
};

/// The analysis-depth guard tripped; lift it explicitly with force.
struct GuardError : Error {
  using Error::Error;
};

/// A finite directive sequence ran out before the requested prefix length.
struct DirectiveExhaustedError : InputError {
  DirectiveExhaustedError(const std::string& msg, std::size_t extra)
      : InputError(msg), extra_coefficients_needed(extra) {}
  /// Estimated minimum number of additional coefficients required.
  std::size_t extra_coefficients_needed;
};

/// A rule table failed format or totality validation.
struct RuleFormatError : InputError {
  explicit RuleFormatError(const std::string& msg,
                           std::vector<std::string> missing = {})
      : InputError(msg), missing_windows(std::move(missing)) {}
  std::vector<std::string> missing_windows;
};

}  // namespace wordca
