#pragma once

#include <stdexcept>
#include <string>

namespace adams {

enum class ErrorCode {
  kDomain = 1,
  kOverflow,
  kQuadrature,
  kInfeasible,
  kEnergyViolation,
  kDegenerate,
  kMonotonicity,
  kInvalidArgument,
};

// All library failures surface as this exception; the C API maps `code()`
// onto its integer error codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double achieved_error)
      : Error(ErrorCode::kQuadrature, what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

[[noreturn]] inline void domain_error(const std::string& what) {
  throw Error(ErrorCode::kDomain, what);
}

}  // namespace adams
