#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexntf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in polynomial rings with different numbers of variables.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Operation undefined for the given value (zero ideal, unit ideal, k = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed monomial or ideal text. `position` is the 0-based offset of the
/// offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// x_n^d has no lex predecessor in degree d.
class NoPredecessorError : public Error {
 public:
  using Error::Error;
};

/// u <_lex v: the lexsegment would be empty.
class EmptySegmentError : public Error {
 public:
  using Error::Error;
};

/// The classifier needs x1 | u and x1 !| v (or u == v).
class NormalizationRequiredError : public Error {
 public:
  using Error::Error;
};

/// A proof-witness case was requested for a spec it does not apply to.
class InapplicableCaseError : public Error {
 public:
  using Error::Error;
};

/// A power k outside the validity range of a construction.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A configured size ceiling (generators, polarized variables) was exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexntf
