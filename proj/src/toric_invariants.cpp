#include "toricfano/toric_invariants.hpp"

namespace toricfano {

IntPolynomial e_hat_polynomial(const FaceLattice& faces) {
  IntPolynomial sum;
  for (int k = 0; k <= faces.dim(); ++k) {
    sum = sum + IntPolynomial{static_cast<long long>(faces.count(k))} * shifted_power(-1, k);
  }
  return sum;
}

std::vector<Integer> betti_numbers(const IntPolynomial& e_hat) {
  std::vector<Integer> betti = e_hat.coeffs();
  for (std::size_t k = 0; k < betti.size(); ++k) {
    if (betti[k] < 0) {
      throw Error(Errc::NegativeCoefficient,
                  "coefficient of t^" + std::to_string(k) + " is " + betti[k].str());
    }
  }
  return betti;
}

Integer edge_interior_total(const LatticePolytope& delta, const FaceLattice& faces) {
  Integer total = 0;
  if (faces.dim() < 1) return total;
  for (const auto& edge : faces.faces(1)) {
    const auto& v = edge.vertex_indices;
    total += edge_interior_points(delta.vertices()[v.front()], delta.vertices()[v.back()]);
  }
  return total;
}

ChernNumbers chern_numbers(const LatticePolytope& delta, const FaceLattice& faces) {
  return ChernNumbers{Integer(faces.count(0)),
                      edge_interior_total(delta, faces) + Integer(faces.count(1))};
}

Integer second_derivative_at_one(const IntPolynomial& e_hat) {
  return e_hat.derivative().derivative().evaluate(1);
}

ToricInvariants toric_invariants(const LatticePolytope& delta, const FaceLattice& faces) {
  ToricInvariants inv;
  inv.n = delta.dim();
  inv.e_hat = e_hat_polynomial(faces);
  inv.betti = betti_numbers(inv.e_hat);
  const ChernNumbers c = chern_numbers(delta, faces);
  inv.c_n = c.c_n;
  inv.c1_cn1 = c.c1_cn1;
  inv.f_vector = faces.f_vector();
  inv.edge_interior_total = edge_interior_total(delta, faces);
  return inv;
}

}  // namespace toricfano
