#pragma once

#include <stdexcept>
#include <string>

namespace loopstate {

/// Raised by exact_div when the divisor does not divide the dividend.
struct NotDivisible : std::domain_error {
  using std::domain_error::domain_error;
};

struct ArityMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct DegreeBoundViolation : std::domain_error {
  using std::domain_error::domain_error;
};

struct ZeroPolynomial : std::domain_error {
  using std::domain_error::domain_error;
};

/// Evaluation or weight computation hit a pole.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Malformed serialized input; the message carries a location such as "terms[3].c".
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A construction produced something that contradicts a checked property.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace loopstate
