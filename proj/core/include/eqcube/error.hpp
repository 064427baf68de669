#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqcube {

// Stable error codes. The CLI prints name() verbatim, so do not rename.
enum class ErrorCode {
  DivisionByZero,
  HalfPowerResidue,
  NoLimit,
  NotSymmetrizable,
  NonUnitAtOne,
  InvalidAlexanderPair,
  BadBead,
  InvalidGraph,
  NonThetaSupport,
  WindowTooLarge,
  NotCoprime,
  ZeroP,
  NonPolynomialV,
  NotAntisymmetric,
  WindowOverflow,
  SymmetryViolation,
  InvalidDatum,
  ParseError,
};

std::string_view name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eqcube
