#pragma once

#include <vector>

#include "toricfano/arithmetic.hpp"
#include "toricfano/lattice_polytope.hpp"
#include "toricfano/polynomial.hpp"

namespace toricfano {

struct ChernNumbers {
  Integer c_n;
  Integer c1_cn1;

  bool operator==(const ChernNumbers&) const = default;
};

/// Invariants of the smooth toric Fano variety read off the anticanonical
/// polytope. betti[k] is h^{2k}.
struct ToricInvariants {
  int n = 0;
  IntPolynomial e_hat;
  std::vector<Integer> betti;
  Integer c_n;
  Integer c1_cn1;
  std::vector<std::size_t> f_vector;
  Integer edge_interior_total;
};

/// Sum over faces of (t - 1)^dim, i.e. sum_k f_k (t - 1)^k.
IntPolynomial e_hat_polynomial(const FaceLattice& faces);

/// Coefficients of e_hat, padded to length degree + 1. Throws
/// NegativeCoefficient instead of clamping.
std::vector<Integer> betti_numbers(const IntPolynomial& e_hat);

/// c_n = f_0 and c1 c_{n-1} = sum over edges of (interior lattice points + 1).
ChernNumbers chern_numbers(const LatticePolytope& delta, const FaceLattice& faces);

/// Sum over edges of the interior lattice point counts.
Integer edge_interior_total(const LatticePolytope& delta, const FaceLattice& faces);

Integer second_derivative_at_one(const IntPolynomial& e_hat);

ToricInvariants toric_invariants(const LatticePolytope& delta, const FaceLattice& faces);

}  // namespace toricfano
