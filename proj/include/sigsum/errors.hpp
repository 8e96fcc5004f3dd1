#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sigsum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Construction from an empty value list.
class EmptyInputError : public Error {
 public:
  EmptyInputError() : Error("input set is empty") {}
};

/// A checked arithmetic step left the 64-bit magnitude bound.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A work estimate exceeded the configured budget; carries the estimate.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, std::uint64_t computed)
      : Error(what), computed_(computed) {}

  std::uint64_t computed() const { return computed_; }

 private:
  std::uint64_t computed_;
};

/// Arguments outside an operation's supported parameter range.
class UnsupportedParametersError : public Error {
 public:
  using Error::Error;
};

}  // namespace sigsum
