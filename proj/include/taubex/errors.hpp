#pragma once

#include <stdexcept>
#include <string>

namespace taubex {

enum class ErrorCode {
  OutOfRange,         // sampled signal evaluated outside its grid span
  NotPointwise,       // atomic measures are not pointwise-evaluable
  EmptyDomain,        // truncated integration domain has fewer than 2 nodes
  DecayDeficit,       // window decay rate does not dominate signal growth
  OrthogonalWindows,  // |(gamma, psi)_{L2}| below threshold
  DegenerateFit,      // all column suprema numerically zero
  ZeroNorm,           // denominator norm below threshold
  NonPositive,        // weight evaluated to a non-positive value
  BadMollifier,       // mollifier integral deviates from 1
  Overflow,           // comparison function leaves the representable range
  DegenerateWindow,   // |Psi_beta(0)| below threshold
  MissingDerivatives, // window lacks derivative evaluators
  InvalidArgument,    // constructor/operation contract violation
  UsageError,         // CLI / ingestion error
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace taubex
