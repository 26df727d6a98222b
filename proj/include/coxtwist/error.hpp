#pragma once

#include <stdexcept>
#include <string>

namespace coxtwist {

enum class ErrorCode {
  InvalidInput,
  NotReduced,
  NotFinite,
  NotDescent,
  InfiniteBond,
  DifferentElement,
  HypothesisViolated,
  NotRightAngled,
  NotIdentityTwist,
  Overflow,
};

// All recoverable failures of the library are reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coxtwist
