#ifndef GROWTHLAB_ERROR_HPP
#define GROWTHLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace growthlab {

enum class ErrorCode {
  DegenerateInput,
  NotLatticePolytope,
  NotDelzantVertex,
  NotNormalized,
  DimensionMismatch,
  IncomparableFamilies,
  EmptyInput,
  EmptySupport,
  UnknownLevel,
  GrowthViolation,
  NonConvergence,
  NonpositiveEpsilon,
  DomainError,
  ParseError,
};

const char* to_string(ErrorCode code);

/// All precondition failures raised by the library. `witness` optionally
/// carries a JSON document describing the offending object (a violating
/// vertex, a facet, a recession direction).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

}  // namespace growthlab

#endif  // GROWTHLAB_ERROR_HPP
