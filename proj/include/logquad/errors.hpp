// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logquad {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rule's hypotheses (profile ranges, smallness conditions on n) fail.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Method and problem live on different interval families.
class MismatchedFamily : public Error {
 public:
  using Error::Error;
};

/// A quadrature term is NaN/inf for a reason other than sanctioned underflow.
class NonFiniteTerm : public Error {
 public:
  using Error::Error;
};

class UnknownExample : public Error {
 public:
  using Error::Error;
};

/// Profile incompatible with a requested method family (e.g. α ≠ 1 for the
/// existing log-only rules).
class RejectedProfile : public Error {
 public:
  using Error::Error;
};

/// log/sqrt of a negative argument while evaluating a user expression.
class DomainError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::string expected)
      : Error("syntax error at offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace logquad
