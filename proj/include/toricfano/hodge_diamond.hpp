#pragma once

#include <string>
#include <vector>

#include "toricfano/arithmetic.hpp"
#include "toricfano/polynomial.hpp"

namespace toricfano {

/// Table of coefficients c[p][q] of u^p v^q.
class BivariatePolynomial {
 public:
  explicit BivariatePolynomial(std::vector<std::vector<Integer>> coeffs) : coeffs_(std::move(coeffs)) {}

  const Integer& coeff(int p, int q) const;
  int size() const noexcept { return static_cast<int>(coeffs_.size()); }
  /// The univariate polynomial E(t, 1).
  IntPolynomial at_v_equals_one() const;
  std::string to_string() const;

 private:
  std::vector<std::vector<Integer>> coeffs_;
};

/// Hodge numbers h^{p,q} of a smooth projective variety of dimension n.
///
/// Construction enforces a square nonnegative table, Hodge symmetry
/// h^{p,q} = h^{q,p} and h^{0,0} = 1. Serre duality h^{p,q} = h^{n-p,n-q} is
/// only diagnosed (see serre_violations) since formal tables are accepted.
class HodgeDiamond {
 public:
  explicit HodgeDiamond(std::vector<std::vector<Integer>> h);

  /// Diagonal diamond h^{p,p} = betti[p]. Requires a palindromic,
  /// nonnegative list with betti[0] = 1.
  static HodgeDiamond from_betti(const std::vector<Integer>& betti);

  int n() const noexcept { return static_cast<int>(h_.size()) - 1; }
  const Integer& at(int p, int q) const;
  const std::vector<std::vector<Integer>>& table() const noexcept { return h_; }

  bool is_diagonal() const;
  /// h^{p,q} = 0 whenever p + q is odd.
  bool odd_vanishing() const;
  /// Positions (p,q) where h^{p,q} != h^{n-p,n-q}.
  std::vector<std::string> serre_violations() const;

  /// h^{2k} = sum_{p+q=2k} h^{p,q}, k = 0..n.
  std::vector<Integer> even_betti() const;

  bool operator==(const HodgeDiamond&) const = default;

 private:
  std::vector<std::vector<Integer>> h_;
};

BivariatePolynomial e_polynomial(const HodgeDiamond& d);

/// chi_p = sum_q (-1)^{p+q} h^{p,q}.
std::vector<Integer> chi_p(const HodgeDiamond& d);

/// sum_{p,q} h^{p,q} ((q - p)/2)^2; zero iff the diamond is diagonal.
Rational defect(const HodgeDiamond& d);

}  // namespace toricfano
