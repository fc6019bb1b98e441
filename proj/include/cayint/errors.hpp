#pragma once

#include <stdexcept>
#include <string>

namespace cayint {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed element, word, model descriptor or file.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Elements or generating sets that belong to different models.
class ModelMismatch : public Error {
 public:
  using Error::Error;
};

// The requested operation is not available for this model/strategy
// (e.g. the diameter of Z^2, tables for S_n with n > 9).
class Unsupported : public Error {
 public:
  using Error::Error;
};

// No word over the generating set maps the source to the target.
class Unreachable : public Error {
 public:
  using Error::Error;
};

// A caller-side precondition failed (index out of range, element not in the
// normaliser, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Internal consistency check failed; always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cayint
