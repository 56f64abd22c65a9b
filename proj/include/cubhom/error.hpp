#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubhom {

enum class ErrorCode {
  DimensionMismatch,
  PointNotInImage,
  DuplicatePoint,
  MapNotTotal,
  NotContinuous,
  NotSubset,
  EmptyImage,
  CoefficientOverflow,
  NotAComplex,
  NotSubcomplex,
  ShapeMismatch,
  NoSuchFace,
  IndexOutOfRange,
  NotCompatible,
  NotInjective,
  PreconditionViolated,
  UnclassifiableCube,
  BudgetExceeded,
  ParseError,
  InternalInvariant,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown by singular-cube enumeration; carries how many corner tables were
// visited before giving up.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(int degree, std::size_t reached)
      : Error(ErrorCode::BudgetExceeded,
              "degree " + std::to_string(degree) + " enumeration reached " +
                  std::to_string(reached) + " cubes"),
        degree_(degree),
        reached_(reached) {}

  int degree() const noexcept { return degree_; }
  std::size_t reached() const noexcept { return reached_; }

 private:
  int degree_;
  std::size_t reached_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace cubhom
