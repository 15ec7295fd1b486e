#pragma once

#include <stdexcept>
#include <string>

namespace polystab {

// Exact linear algebra failures.
struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InconsistentSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mixing quadratic extensions with different radicands.
struct FieldMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric solver did not converge within its iteration budget.
struct ConvergenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text input (DIMACS, JSON, rational literals).
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SelfLoopError : FormatError {
  using FormatError::FormatError;
};

// Input exceeds a configured exact-computation size cap.
struct SizeCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested certificate does not exist for the given instance.
struct NoCertificate : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Supplied certificate fails exact re-verification.
struct InvalidCertificate : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// A check was invoked on data that does not satisfy its stated precondition.
struct PreconditionNotVerified : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace polystab
