#include "toricfano/error.hpp"

namespace toricfano {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidDimension: return "InvalidDimension";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::NonPrimitiveVertex: return "NonPrimitiveVertex";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::OriginNotInterior: return "OriginNotInterior";
    case Errc::RedundantVertex: return "RedundantVertex";
    case Errc::NotReflexive: return "NotReflexive";
    case Errc::NotSmooth: return "NotSmooth";
    case Errc::NonIntegralDual: return "NonIntegralDual";
    case Errc::DegenerateEdge: return "DegenerateEdge";
    case Errc::Overflow: return "Overflow";
    case Errc::NegativeCoefficient: return "NegativeCoefficient";
    case Errc::InvalidBetti: return "InvalidBetti";
    case Errc::InvalidDiamond: return "InvalidDiamond";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::NotPalindromic: return "NotPalindromic";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace toricfano
