#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ucent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation does not hold.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// A possible world refers to edges its parent graph does not have.
class InvalidWorld : public Error {
public:
  using Error::Error;
};

/// Exhaustive world enumeration was refused because of the configured cap.
class CapExceeded : public Error {
public:
  CapExceeded(std::size_t uncertain_edges, std::size_t cap)
      : Error("exact enumeration refused: " + std::to_string(uncertain_edges) +
              " uncertain edges exceed the cap of " + std::to_string(cap)),
        uncertain_edges_(uncertain_edges), cap_(cap) {}

  std::size_t uncertain_edges() const noexcept { return uncertain_edges_; }
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t uncertain_edges_;
  std::size_t cap_;
};

/// Malformed input file. `line()` is 1-based, 0 when no line applies.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace ucent
