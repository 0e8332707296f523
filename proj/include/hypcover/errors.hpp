#pragma once

#include <stdexcept>
#include <string>

namespace hypcover {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, matrices, words, points, models).
class ParseError : public Error {
 public:
  using Error::Error;
};

class NotUnimodular : public Error {
 public:
  using Error::Error;
};

class NonIntegerEntry : public Error {
 public:
  using Error::Error;
};

/// A point outside the open upper half-plane.
class InvalidPoint : public Error {
 public:
  using Error::Error;
};

class DegeneratePair : public Error {
 public:
  using Error::Error;
};

/// Quadrature hit its refinement cap without meeting the tolerance.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

class InvalidModel : public Error {
 public:
  using Error::Error;
};

}  // namespace hypcover
