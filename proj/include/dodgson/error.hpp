// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dodgson {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed profile text. `line()` is 1-based; 0 when the problem is global
/// (for example too few ballots at end of input).
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Bad argument: unknown alternative, empty sizes, unsupported scorer for a
/// strategy and similar caller mistakes.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A swap vector asks for more upward swaps than the candidate has room for.
class BoundViolation : public Error {
 public:
  using Error::Error;
};

/// Materialization would exceed the configured entry cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace dodgson
