#pragma once

#include <stdexcept>
#include <string>

namespace chowmot {

/// Base of every exception thrown by the engine.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed argument (negative dimension, wrong vector length, ...).
struct invalid_input : error {
  using error::error;
};

/// Operands live on incompatible varieties or objects.
struct domain_error : error {
  using error::error;
};

/// Inverse requested of a series with vanishing constant term.
struct singular_series : error {
  using error::error;
};

/// A stated precondition of an operation does not hold.
struct precondition_error : error {
  using error::error;
};

/// An orbit morphism has components of negative index.
struct support_condition_error : error {
  using error::error;
};

/// Textual or JSON input could not be decoded.
struct parse_error : error {
  using error::error;
};

}  // namespace chowmot
