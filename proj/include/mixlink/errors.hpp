#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixlink {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in the polynomial grammar; carries the byte offset of the
/// offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Zero polynomial (or otherwise empty input) handed to an analysis that
/// needs at least one term.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class NotConvenientError : public Error {
 public:
  NotConvenientError(std::vector<std::size_t> missing_axes);
  /// 0-based axes with no pure-power term.
  const std::vector<std::size_t>& missing_axes() const noexcept { return missing_; }

 private:
  std::vector<std::size_t> missing_;
};

class InvalidCoveringError : public Error {
 public:
  using Error::Error;
};

/// A quantity that divides by g was requested at a point where |g| is below
/// tolerance (or at the origin).
class OnZeroSetError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace mixlink
