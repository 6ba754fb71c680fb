#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdi {

// Root of every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityError : public Error {
 public:
  ArityError(std::size_t expected, std::size_t got)
      : Error("arity mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(got)) {}
};

// Coefficient or degree left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A search bound (states, candidates, splits) was hit before a verdict.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// Operation called outside its contract: wrong ideal kind, unit ideal,
// duality point too small, ...
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mdi
