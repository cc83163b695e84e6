#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricfano {

enum class Errc {
  InvalidDimension,
  DimensionMismatch,
  DuplicateVertex,
  NonPrimitiveVertex,
  DegenerateInput,
  OriginNotInterior,
  RedundantVertex,
  NotReflexive,
  NotSmooth,
  NonIntegralDual,
  DegenerateEdge,
  Overflow,
  NegativeCoefficient,
  InvalidBetti,
  InvalidDiamond,
  LengthMismatch,
  HypothesisViolated,
  NotPalindromic,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc kinds above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace toricfano
