#pragma once

#include <stdexcept>
#include <string>

namespace shilab {

/**
 * Base class for all errors thrown by this library.
 */
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid Cartan type (unknown family, rank out of range) or a failed
/// construction-time self-check of the root system tables.
struct ConstructionError : Error {
  using Error::Error;
};

/// Two elements/roots from different root-system instances were combined.
struct MixedSystems : Error {
  using Error::Error;
};

/// A set of positive roots that was required to be an antichain contains a
/// comparable pair.  The offending pair (indices into the positive roots,
/// lower element first) is recorded.
struct NotAnAntichain : Error {
  int lower, upper;
  NotAnAntichain(const std::string& msg, int lo, int up)
      : Error(msg), lower(lo), upper(up) {}
};

/// A set of affine roots is not the inversion set of any element: the greedy
/// peeling got stuck on a nonempty set containing no simple affine root.
struct NotAnInversionSet : Error {
  using Error::Error;
};

/// A closed-form count was requested for a family it does not cover.
struct UnsupportedFormula : Error {
  using Error::Error;
};

/// A fiber of the sign-type map contains two distinct elements of the same
/// minimal length; the expected unique-minimum property fails.
struct MinimumNotUnique : Error {
  using Error::Error;
};

/// A ball-based search needs a larger radius to be conclusive.  `required`
/// is the smallest radius that would do.
struct InsufficientRadius : Error {
  long long required;
  InsufficientRadius(const std::string& msg, long long req)
      : Error(msg), required(req) {}
};

/// Malformed textual/JSON input (root names, triangles, serialized elements).
struct FormatError : Error {
  using Error::Error;
};

}  // namespace shilab
