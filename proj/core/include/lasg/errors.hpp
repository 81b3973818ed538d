#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lasg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed Cayley text. `line` is 1-based; 0 means "end of input".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message),
        line_(line),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

// Ideal predicates are only defined on non-empty subsets.
class EmptySubset : public Error {
 public:
  EmptySubset() : Error("subset must be non-empty") {}
};

class OrderTooLarge : public Error {
 public:
  OrderTooLarge(std::size_t order, std::size_t limit)
      : Error("order " + std::to_string(order) + " exceeds limit " +
              std::to_string(limit)),
        order_(order),
        limit_(limit) {}

  std::size_t order() const noexcept { return order_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t order_;
  std::size_t limit_;
};

class NoLeftIdentity : public Error {
 public:
  NoLeftIdentity() : Error("magma has no left identity") {}
};

class InsufficientPoints : public Error {
 public:
  explicit InsufficientPoints(std::size_t distinct)
      : Error("need at least 3 distinct sample points, got " +
              std::to_string(distinct)) {}
};

// A proven property of LA-semigroups failed; indicates a bug, never bad input.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace lasg
