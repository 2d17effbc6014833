#pragma once

#include <stdexcept>

namespace exagg {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LossOutOfRange : public Error {
 public:
  using Error::Error;
};

class RateOutOfRange : public Error {
 public:
  using Error::Error;
};

class EmptyActiveSet : public Error {
 public:
  using Error::Error;
};

class StaleRound : public Error {
 public:
  using Error::Error;
};

class ConfigMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateK : public Error {
 public:
  using Error::Error;
};

class NegativeInput : public Error {
 public:
  using Error::Error;
};

class AlphaOutOfRange : public Error {
 public:
  using Error::Error;
};

class DeltaOutOfRange : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class GradientBoundViolated : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class CsvParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace exagg
