#include "eqcube/error.hpp"

namespace eqcube {

std::string_view name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::HalfPowerResidue: return "HalfPowerResidue";
    case ErrorCode::NoLimit: return "NoLimit";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::NonUnitAtOne: return "NonUnitAtOne";
    case ErrorCode::InvalidAlexanderPair: return "InvalidAlexanderPair";
    case ErrorCode::BadBead: return "BadBead";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::NonThetaSupport: return "NonThetaSupport";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ZeroP: return "ZeroP";
    case ErrorCode::NonPolynomialV: return "NonPolynomialV";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::WindowOverflow: return "WindowOverflow";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::InvalidDatum: return "InvalidDatum";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace eqcube
