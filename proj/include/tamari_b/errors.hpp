#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tamari_b {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

class NotAPermutation : public ParseError {
 public:
  using ParseError::ParseError;
};

// Argument outside the domain of an operation (bad index, degree mismatch,
// element outside the quotient, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t required, std::size_t cap)
      : Error("enumeration needs " + std::to_string(required)
              + " elements but the cap is " + std::to_string(cap)),
        required_(required),
        cap_(cap) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

class NotACongruence : public Error {
 public:
  using Error::Error;
};

}  // namespace tamari_b
