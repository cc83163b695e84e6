#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "toricfano/arithmetic.hpp"

namespace toricfano {

/// Univariate integer polynomial; coefficient i multiplies t^i. Trailing zeros
/// are stripped, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  Integer coeff(int k) const;

  Integer evaluate(const Integer& t) const;
  IntPolynomial derivative() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial&) const = default;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// (t + shift)^k expanded.
IntPolynomial shifted_power(const Integer& shift, int k);

}  // namespace toricfano
