#pragma once

#include <stdexcept>
#include <string>

namespace vvlab {

// Error taxonomy.  The CLI maps these onto exit codes: InputError -> 2,
// instability statuses (not exceptions) -> 3, failed verdicts -> 1.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Mixed ambient rings, malformed arguments, rank mismatches.
class StructuralError : public Error {
public:
  using Error::Error;
};

// Document parsing and validation.
class InputError : public Error {
public:
  using Error::Error;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

class UnsupportedError : public Error {
public:
  using Error::Error;
};

// Resample cap exceeded; carries the failure certificates in the message.
class SamplingError : public Error {
public:
  using Error::Error;
};

// A runtime invariant (support, substitution, commutation) failed.
class VerificationError : public Error {
public:
  using Error::Error;
};

// Two independent routes to the same value disagree.
class OracleDisagreement : public Error {
public:
  using Error::Error;
};

// A heuristic window was exhausted before stabilization and the caller
// cannot return a partial value.  The CLI maps this onto exit code 3.
class UnstableError : public Error {
public:
  using Error::Error;
};

class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace vvlab
