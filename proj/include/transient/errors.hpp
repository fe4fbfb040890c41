#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace transient {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `position` is a 0-based character offset (or a
// 1-based line number for line-oriented files, see the thrower).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Well-formed input that violates a structural invariant (a link instead of
// a knot, a non-unimodular Seifert form, a non-planar PD code, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Arguments outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace transient
