#ifndef SSCREEN_ERRORS_HPP
#define SSCREEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sscreen {

/// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Text that does not follow the interval / ordinal grammar, or a malformed value.
struct ParseError : Error {
  using Error::Error;
};

/// A value violates its type invariant at construction (e.g. an open degenerate interval).
struct ConstructionError : Error {
  using Error::Error;
};

/// Preconditions of an operation do not hold (invalid cover, finite ordinal to alpha_minus, ...).
struct DomainError : Error {
  using Error::Error;
};

/// A proven property failed to hold at run time. Falsifies the implementation, never the theorem.
struct InvariantViolation : Error {
  using Error::Error;
};

/// The limit-stage protocol could not be honoured (e.g. extension source exhausted).
struct ProtocolError : Error {
  using Error::Error;
};

/// A game configuration that cannot be run (unknown strategy, undeclared limit digest, ...).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace sscreen

#endif
