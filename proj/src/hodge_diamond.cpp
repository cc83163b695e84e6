#include "toricfano/hodge_diamond.hpp"

#include <sstream>

namespace toricfano {

namespace {

std::string position(int p, int q) {
  return "h^{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

}  // namespace

const Integer& BivariatePolynomial::coeff(int p, int q) const {
  return coeffs_.at(static_cast<std::size_t>(p)).at(static_cast<std::size_t>(q));
}

IntPolynomial BivariatePolynomial::at_v_equals_one() const {
  std::vector<Integer> c(coeffs_.size());
  for (std::size_t p = 0; p < coeffs_.size(); ++p) {
    for (const auto& x : coeffs_[p]) c[p] += x;
  }
  return IntPolynomial(std::move(c));
}

std::string BivariatePolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int p = size() - 1; p >= 0; --p) {
    for (int q = size() - 1; q >= 0; --q) {
      Integer c = coeff(p, q);
      if (c == 0) continue;
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      if (c < 0) c = -c;
      if (c != 1 || (p == 0 && q == 0)) os << c;
      if (p >= 1) os << "u" << (p >= 2 ? "^" + std::to_string(p) : "");
      if (q >= 1) os << "v" << (q >= 2 ? "^" + std::to_string(q) : "");
    }
  }
  return first ? "0" : os.str();
}

HodgeDiamond::HodgeDiamond(std::vector<std::vector<Integer>> h) : h_(std::move(h)) {
  if (h_.empty()) throw Error(Errc::InvalidDiamond, "empty table");
  const std::size_t size = h_.size();
  for (std::size_t p = 0; p < size; ++p) {
    if (h_[p].size() != size) {
      throw Error(Errc::InvalidDiamond, "row " + std::to_string(p) + " has " +
                                            std::to_string(h_[p].size()) + " entries, expected " +
                                            std::to_string(size));
    }
  }
  for (int p = 0; p <= n(); ++p) {
    for (int q = 0; q <= n(); ++q) {
      if (at(p, q) < 0) throw Error(Errc::InvalidDiamond, position(p, q) + " is negative");
      if (at(p, q) != at(q, p)) {
        throw Error(Errc::InvalidDiamond,
                    "Hodge symmetry fails: " + position(p, q) + " != " + position(q, p));
      }
    }
  }
  if (at(0, 0) != 1) throw Error(Errc::InvalidDiamond, "h^{0,0} must be 1");
}

HodgeDiamond HodgeDiamond::from_betti(const std::vector<Integer>& betti) {
  if (betti.empty()) throw Error(Errc::InvalidBetti, "empty Betti list");
  if (betti.front() != 1) throw Error(Errc::InvalidBetti, "h^0 must be 1");
  const std::size_t size = betti.size();
  for (std::size_t k = 0; k < size; ++k) {
    if (betti[k] < 0) throw Error(Errc::InvalidBetti, "negative Betti number");
    if (betti[k] != betti[size - 1 - k]) throw Error(Errc::InvalidBetti, "Betti list is not palindromic");
  }
  std::vector<std::vector<Integer>> h(size, std::vector<Integer>(size));
  for (std::size_t p = 0; p < size; ++p) h[p][p] = betti[p];
  return HodgeDiamond(std::move(h));
}

const Integer& HodgeDiamond::at(int p, int q) const {
  return h_.at(static_cast<std::size_t>(p)).at(static_cast<std::size_t>(q));
}

bool HodgeDiamond::is_diagonal() const {
  for (int p = 0; p <= n(); ++p) {
    for (int q = 0; q <= n(); ++q) {
      if (p != q && at(p, q) != 0) return false;
    }
  }
  return true;
}

bool HodgeDiamond::odd_vanishing() const {
  for (int p = 0; p <= n(); ++p) {
    for (int q = 0; q <= n(); ++q) {
      if ((p + q) % 2 == 1 && at(p, q) != 0) return false;
    }
  }
  return true;
}

std::vector<std::string> HodgeDiamond::serre_violations() const {
  std::vector<std::string> out;
  for (int p = 0; p <= n(); ++p) {
    for (int q = 0; q <= n(); ++q) {
      // Report each unordered pair once.
      if (std::pair(p, q) > std::pair(n() - p, n() - q)) continue;
      if (at(p, q) != at(n() - p, n() - q)) {
        out.push_back(position(p, q) + " != " + position(n() - p, n() - q));
      }
    }
  }
  return out;
}

std::vector<Integer> HodgeDiamond::even_betti() const {
  std::vector<Integer> b(static_cast<std::size_t>(n()) + 1);
  for (int p = 0; p <= n(); ++p) {
    for (int q = 0; q <= n(); ++q) {
      if ((p + q) % 2 == 0) b[static_cast<std::size_t>((p + q) / 2)] += at(p, q);
    }
  }
  return b;
}

BivariatePolynomial e_polynomial(const HodgeDiamond& d) {
  auto c = d.table();
  for (int p = 0; p <= d.n(); ++p) {
    for (int q = 0; q <= d.n(); ++q) {
      if ((p + q) % 2 == 1) c[p][q] = -c[p][q];
    }
  }
  return BivariatePolynomial(std::move(c));
}

std::vector<Integer> chi_p(const HodgeDiamond& d) {
  std::vector<Integer> chi(static_cast<std::size_t>(d.n()) + 1);
  for (int p = 0; p <= d.n(); ++p) {
    for (int q = 0; q <= d.n(); ++q) {
      if ((p + q) % 2 == 0) chi[p] += d.at(p, q);
      else chi[p] -= d.at(p, q);
    }
  }
  return chi;
}

Rational defect(const HodgeDiamond& d) {
  Rational total = 0;
  for (int p = 0; p <= d.n(); ++p) {
    for (int q = 0; q <= d.n(); ++q) {
      const Rational half(q - p, 2);
      total += Rational(d.at(p, q)) * half * half;
    }
  }
  return total;
}

}  // namespace toricfano
