#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (size mismatch,
/// element outside the ground set, element not where it must be, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A value could not be constructed because its invariants fail
/// (e.g. U is not Gale-below L).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A structural precondition of an operation does not hold
/// (loops present where forbidden, bad pair removal, non-quotient interval).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Text input does not match a grammar. Carries the 0-based offset of
/// the first offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lpm
