#pragma once

#include <stdexcept>
#include <string>

namespace gforms {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file or inline description.
struct ParseError : Error {
  using Error::Error;
};

/// A configured enumeration or size bound would be exceeded.
struct BudgetError : Error {
  using Error::Error;
};

/// An internal self-check failed; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace gforms
