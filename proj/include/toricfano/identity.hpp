#pragma once

#include <optional>
#include <vector>

#include "toricfano/arithmetic.hpp"
#include "toricfano/hodge_diamond.hpp"
#include "toricfano/lattice_polytope.hpp"

namespace toricfano {

/// Both sides of the Betti/Chern inequality for one variety, with the gap
/// accounted for by off-diagonal Hodge numbers.
struct IdentityReport {
  int n = 0;
  Rational lhs;     ///< sum_k h^{2k} (k - n/2)^2
  Rational rhs;     ///< c1 c_{n-1} / 6 + n c_n / 12
  Rational defect;  ///< sum h^{p,q} ((q - p)/2)^2
  bool equality = false;
  bool inequality_ok = false;
  std::optional<bool> balance_ok;  ///< lhs + defect == rhs
  std::optional<bool> chi_p_ok;
  std::optional<bool> ehx_ok;
  std::optional<bool> combinatorial_ok;
};

struct EhxSides {
  Rational lhs;
  Rational rhs;
};

Rational lhs_weighted_betti(const std::vector<Integer>& betti, int n);

/// c1 c_{n-1} / 6 + n c_n / 12.
Rational rhs_chern(const Integer& c1_cn1, const Integer& c_n, int n);

/// sum_p chi_p (p - n/2)^2.
Rational weighted_chi(const std::vector<Integer>& chi, int n);

/// Throws HypothesisViolated when the diamond has odd cohomology.
IdentityReport verify_identity(const HodgeDiamond& d, const Integer& c1_cn1, const Integer& c_n);

/// Exact test of sum_p chi_p (p - n/2)^2 == rhs_chern. Throws NotPalindromic
/// unless chi_p = chi_{n-p}.
bool verify_chi_p_form(const std::vector<Integer>& chi, const Integer& c1_cn1, const Integer& c_n, int n);

/// Both sides of
///   1/4 sum_k h^{2k} (k - (n-1)/2)(1 - k + (n-1)/2) = 1/24 ((3-n)/2 chi(X) - c1 c_{n-1})
/// with chi(X) taken as the sum of the Betti numbers.
EhxSides ehx_form(const std::vector<Integer>& betti, const Integer& c1_cn1, int n);

/// f_2 == (sum over edges of interior points) / 12 + (n^2/8 - n/6) f_0 on Δ.
bool verify_combinatorial(const LatticePolytope& delta, const FaceLattice& faces);

}  // namespace toricfano
