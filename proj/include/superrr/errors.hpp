#pragma once

#include <stdexcept>
#include <string>

namespace superrr {

// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

class ModelMismatch : public Error {
 public:
  using Error::Error;
};

class NotPurelyOdd : public Error {
 public:
  using Error::Error;
};

class NonIntegralTwist : public Error {
 public:
  using Error::Error;
};

class InvalidRank : public Error {
 public:
  using Error::Error;
};

// Malformed roots, models, or parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace superrr
