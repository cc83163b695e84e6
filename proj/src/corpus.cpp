#include "toricfano/corpus.hpp"

namespace toricfano {

namespace {

void require_smooth_reflexive(const FanoPolytope& p) {
  const LatticePolytope poly = hull(p);
  if (!is_reflexive(poly)) throw Error(Errc::NotReflexive, "summand is not reflexive");
  if (!is_smooth(poly)) throw Error(Errc::NotSmooth, "summand is not smooth");
}

std::vector<Integer> ints(std::initializer_list<int> values) {
  return {values.begin(), values.end()};
}

}  // namespace

FanoPolytope gen_pn(int n) {
  if (n < 1) throw Error(Errc::InvalidDimension, "P^n needs n >= 1");
  const auto dim = static_cast<std::size_t>(n);
  std::vector<LatticePoint> vertices;
  for (std::size_t i = 0; i < dim; ++i) vertices.push_back(LatticePoint::unit(dim, i));
  vertices.emplace_back(std::vector<Coord>(dim, -1));
  return FanoPolytope(n, std::move(vertices));
}

FanoPolytope gen_direct_sum(const FanoPolytope& p, const FanoPolytope& q) {
  require_smooth_reflexive(p);
  require_smooth_reflexive(q);
  const auto zero_p = LatticePoint::zero(static_cast<std::size_t>(p.dim()));
  const auto zero_q = LatticePoint::zero(static_cast<std::size_t>(q.dim()));
  std::vector<LatticePoint> vertices;
  for (const auto& v : p.vertices()) vertices.push_back(concat(v, zero_q));
  for (const auto& w : q.vertices()) vertices.push_back(concat(zero_p, w));
  return FanoPolytope(p.dim() + q.dim(), std::move(vertices));
}

std::vector<CorpusEntry> dim2_corpus() {
  std::vector<LatticePoint> rays{{1, 0}, {0, 1}, {-1, -1}};
  std::vector<CorpusEntry> corpus;
  corpus.push_back({"P2", FanoPolytope(2, rays), ExpectedInvariants{ints({1, 1, 1}), 3, 9}});
  corpus.push_back({"P1xP1", FanoPolytope(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
                    ExpectedInvariants{ints({1, 2, 1}), 4, 8}});
  // Blow-ups of P2 at torus-fixed points; each adds a ray between two neighbours.
  rays.push_back({1, 1});
  corpus.push_back({"Bl1P2", FanoPolytope(2, rays), ExpectedInvariants{ints({1, 2, 1}), 4, 8}});
  rays.push_back({0, -1});
  corpus.push_back({"Bl2P2", FanoPolytope(2, rays), ExpectedInvariants{ints({1, 3, 1}), 5, 7}});
  rays.push_back({-1, 0});
  corpus.push_back({"Bl3P2", FanoPolytope(2, rays), ExpectedInvariants{ints({1, 4, 1}), 6, 6}});

  for (const auto& entry : corpus) require_smooth_reflexive(entry.polytope);
  return corpus;
}

}  // namespace toricfano
