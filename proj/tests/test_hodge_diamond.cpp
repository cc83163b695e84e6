#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "toricfano/error.hpp"
#include "toricfano/hodge_diamond.hpp"

using namespace toricfano;

namespace {

using Table = std::vector<std::vector<Integer>>;

std::vector<Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

const HodgeDiamond kK3(Table{{1, 0, 1}, {0, 20, 0}, {1, 0, 1}});

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("from_betti") {
  const auto p2 = HodgeDiamond::from_betti(ints({1, 1, 1}));
  CHECK(p2.n() == 2);
  CHECK(p2.is_diagonal());
  CHECK(p2.at(1, 1) == 1);
  CHECK(HodgeDiamond::from_betti(ints({1, 2, 1})).at(1, 1) == 2);
  // Formal but well formed.
  CHECK(HodgeDiamond::from_betti(ints({1, 0, 1})).at(1, 1) == 0);
  CHECK(error_of([] { HodgeDiamond::from_betti(ints({1, 2, 3})); }) == Errc::InvalidBetti);
  CHECK(error_of([] { HodgeDiamond::from_betti(ints({2, 1, 2})); }) == Errc::InvalidBetti);
  CHECK(error_of([] { HodgeDiamond::from_betti(ints({1, -1, 1})); }) == Errc::InvalidBetti);
}

TEST_CASE("constructor validation") {
  CHECK(error_of([] { HodgeDiamond(Table{{1, 0, 2}, {0, 20, 0}, {1, 0, 1}}); }) == Errc::InvalidDiamond);
  CHECK(error_of([] { HodgeDiamond(Table{{2, 0}, {0, 2}}); }) == Errc::InvalidDiamond);
  CHECK(error_of([] { HodgeDiamond(Table{{1, 0}, {0}}); }) == Errc::InvalidDiamond);
  CHECK(error_of([] { HodgeDiamond(Table{{1, -1}, {-1, 1}}); }) == Errc::InvalidDiamond);

  // Serre duality failure is diagnosed, not rejected.
  const HodgeDiamond lopsided(Table{{1, 0, 0}, {0, 3, 0}, {0, 0, 2}});
  CHECK(lopsided.serre_violations().size() == 1);
  CHECK(kK3.serre_violations().empty());
}

TEST_CASE("e_polynomial") {
  CHECK(e_polynomial(HodgeDiamond::from_betti(ints({1, 1, 1}))).to_string() == "u^2v^2 + uv + 1");
  CHECK(e_polynomial(kK3).to_string() == "u^2v^2 + u^2 + 20uv + v^2 + 1");
  CHECK(e_polynomial(HodgeDiamond(Table{{1, 0}, {0, 0}})).to_string() == "1");
  // Odd entries pick up a sign.
  const HodgeDiamond curve(Table{{1, 2}, {2, 1}});
  CHECK(e_polynomial(curve).coeff(0, 1) == -2);
}

TEST_CASE("chi_p") {
  CHECK(chi_p(HodgeDiamond::from_betti(ints({1, 1, 1}))) == ints({1, 1, 1}));
  CHECK(chi_p(kK3) == ints({2, 20, 2}));
  CHECK(chi_p(HodgeDiamond(Table{{1, 0}, {0, 0}})) == ints({1, 0}));
}

TEST_CASE("defect") {
  CHECK(defect(HodgeDiamond::from_betti(ints({1, 3, 3, 1}))) == 0);
  CHECK(defect(kK3) == 2);
  Table t(5, std::vector<Integer>(5));
  for (int p = 0; p <= 4; ++p) t[p][p] = 1;
  t[3][1] = t[1][3] = 1;
  CHECK(defect(HodgeDiamond(t)) == 2);
}

TEST_CASE("E(t, 1) equals sum chi_p t^p") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = oracle::random_diamond(rng, 1 + trial % 6, 50, trial % 2 == 0, false);
    CHECK(e_polynomial(d).at_v_equals_one() == IntPolynomial(chi_p(d)));
  }
}

TEST_CASE("diagonal diamonds have chi_p = h^{p,p}") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = oracle::random_diamond(rng, 1 + trial % 6, 50, true, true);
    REQUIRE(d.is_diagonal());
    const auto chi = chi_p(d);
    for (int p = 0; p <= d.n(); ++p) CHECK(chi[p] == d.at(p, p));
  }
}

TEST_CASE("odd_vanishing and even_betti") {
  CHECK(kK3.odd_vanishing());
  CHECK(kK3.even_betti() == ints({1, 22, 1}));
  CHECK_FALSE(HodgeDiamond(Table{{1, 1}, {1, 1}}).odd_vanishing());
}
