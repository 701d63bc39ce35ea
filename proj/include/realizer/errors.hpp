#pragma once

#include <stdexcept>
#include <string>

namespace realizer {

/// Base of every failure raised by the library. The message carries the
/// witness (offending face, cell, simplex) when one exists.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidComplex : public Error {
 public:
  using Error::Error;
};
class OddCycle : public Error {
 public:
  using Error::Error;
};
class NonOrientable : public Error {
 public:
  using Error::Error;
};
class Overflow : public Error {
 public:
  using Error::Error;
};
class CapExceeded : public Error {
 public:
  using Error::Error;
};
class InconsistentGluing : public Error {
 public:
  using Error::Error;
};
class InvalidCell : public Error {
 public:
  using Error::Error;
};
class NotACovering : public Error {
 public:
  using Error::Error;
};
class NotWellDefined : public Error {
 public:
  using Error::Error;
};
class DegreeNotConstant : public Error {
 public:
  using Error::Error;
};
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace realizer
