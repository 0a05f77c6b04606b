#pragma once

#include <stdexcept>
#include <string>

namespace aa {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NegativeRadicand : public Error {
 public:
  using Error::Error;
};

class MixedEndpointKinds : public Error {
 public:
  using Error::Error;
};

class InvalidInterval : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroBoundary : public Error {
 public:
  using Error::Error;
};

class NegativeOperand : public Error {
 public:
  using Error::Error;
};

class UnequalLengths : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class DepthLimit : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace aa
