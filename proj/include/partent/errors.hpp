#pragma once

#include <stdexcept>
#include <string>

namespace partent {

// Base of every failure raised by the library. Each subclass names one
// failure mode so callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyState : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class FactorExtractionFailure : public Error {
 public:
  using Error::Error;
};

class ClassificationUnstable : public Error {
 public:
  using Error::Error;
};

// Malformed state/report file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace partent
