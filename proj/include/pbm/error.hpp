#pragma once

#include <stdexcept>
#include <string>

namespace pbm {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad block lists, unparsable text, undefined epsilon pairs.
struct ValidationError : Error {
  using Error::Error;
};

// Operands live on different ground sizes.
struct DimensionError : Error {
  using Error::Error;
};

// An enumeration or table size bound was exceeded.
struct BoundError : Error {
  using Error::Error;
};

// An operation was called outside the scope in which its defining formula
// is valid (e.g. the variant R-preorder formula outside P_1).
struct ScopeError : Error {
  using Error::Error;
};

}  // namespace pbm
