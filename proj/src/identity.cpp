#include "toricfano/identity.hpp"

#include "toricfano/toric_invariants.hpp"

namespace toricfano {

namespace {

void require_length(std::size_t size, int n, const char* what) {
  if (n < 0 || size != static_cast<std::size_t>(n) + 1) {
    throw Error(Errc::LengthMismatch, std::string(what) + " has length " + std::to_string(size) +
                                          ", expected " + std::to_string(n + 1));
  }
}

Rational centered_square_sum(const std::vector<Integer>& weights, int n) {
  Rational total = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const Rational centered = Rational(static_cast<long long>(k)) - Rational(n, 2);
    total += Rational(weights[k]) * centered * centered;
  }
  return total;
}

}  // namespace

Rational lhs_weighted_betti(const std::vector<Integer>& betti, int n) {
  require_length(betti.size(), n, "Betti list");
  return centered_square_sum(betti, n);
}

Rational rhs_chern(const Integer& c1_cn1, const Integer& c_n, int n) {
  return Rational(c1_cn1, 6) + Rational(Integer(n) * c_n, 12);
}

Rational weighted_chi(const std::vector<Integer>& chi, int n) {
  require_length(chi.size(), n, "chi list");
  return centered_square_sum(chi, n);
}

bool verify_chi_p_form(const std::vector<Integer>& chi, const Integer& c1_cn1, const Integer& c_n, int n) {
  require_length(chi.size(), n, "chi list");
  for (std::size_t p = 0; p < chi.size(); ++p) {
    if (chi[p] != chi[chi.size() - 1 - p]) {
      throw Error(Errc::NotPalindromic, "chi_" + std::to_string(p) + " != chi_" +
                                            std::to_string(chi.size() - 1 - p));
    }
  }
  return weighted_chi(chi, n) == rhs_chern(c1_cn1, c_n, n);
}

IdentityReport verify_identity(const HodgeDiamond& d, const Integer& c1_cn1, const Integer& c_n) {
  if (!d.odd_vanishing()) {
    throw Error(Errc::HypothesisViolated, "odd cohomology is nonzero");
  }
  IdentityReport r;
  r.n = d.n();
  const auto betti = d.even_betti();
  r.lhs = lhs_weighted_betti(betti, r.n);
  r.rhs = rhs_chern(c1_cn1, c_n, r.n);
  r.defect = defect(d);
  r.equality = r.lhs == r.rhs;
  r.inequality_ok = r.lhs <= r.rhs;
  r.balance_ok = r.lhs + r.defect == r.rhs;
  try {
    r.chi_p_ok = verify_chi_p_form(chi_p(d), c1_cn1, c_n, r.n);
  } catch (const Error& e) {
    if (e.code() != Errc::NotPalindromic) throw;
  }
  const EhxSides ehx = ehx_form(betti, c1_cn1, r.n);
  r.ehx_ok = ehx.lhs == ehx.rhs;
  return r;
}

EhxSides ehx_form(const std::vector<Integer>& betti, const Integer& c1_cn1, int n) {
  require_length(betti.size(), n, "Betti list");
  const Rational mid(n - 1, 2);
  Rational lhs = 0;
  Integer euler = 0;
  for (std::size_t k = 0; k < betti.size(); ++k) {
    const Rational kk(static_cast<long long>(k));
    lhs += Rational(betti[k]) * (kk - mid) * (Rational(1) - kk + mid);
    euler += betti[k];
  }
  lhs /= 4;
  const Rational rhs = (Rational(3 - n, 2) * Rational(euler) - Rational(c1_cn1)) / 24;
  return {lhs, rhs};
}

bool verify_combinatorial(const LatticePolytope& delta, const FaceLattice& faces) {
  const int n = delta.dim();
  const Rational f0(static_cast<long long>(faces.count(0)));
  const Rational f2(static_cast<long long>(faces.count(2)));
  const Rational interior(edge_interior_total(delta, faces));
  const Rational coeff = Rational(n * n, 8) - Rational(n, 6);
  return f2 == interior / 12 + coeff * f0;
}

}  // namespace toricfano
