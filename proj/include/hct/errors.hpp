// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace hct {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Sample (or resample) with zero variance where a Studentised ratio is needed.
class DegenerateSample : public Error {
 public:
  using Error::Error;
};

class InsufficientResamples : public Error {
 public:
  using Error::Error;
};

/// A moment required for standardisation does not exist.
class InfiniteMoment : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class EmptyGrid : public Error {
 public:
  using Error::Error;
};

class NotDetectable : public Error {
 public:
  using Error::Error;
};

class MissingQuantile : public Error {
 public:
  using Error::Error;
};

/// Raised by the harness when a run produced numerically flagged results and
/// the configuration asks for escalation.
class ValidityError : public Error {
 public:
  using Error::Error;
};

}  // namespace hct
