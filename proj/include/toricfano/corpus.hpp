#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricfano/arithmetic.hpp"
#include "toricfano/lattice_polytope.hpp"

namespace toricfano {

/// Pinned regression values; unset fields are not checked.
struct ExpectedInvariants {
  std::optional<std::vector<Integer>> betti;
  std::optional<Integer> c_n;
  std::optional<Integer> c1_cn1;
};

struct CorpusEntry {
  std::string name;
  FanoPolytope polytope;
  std::optional<ExpectedInvariants> expected;
};

/// Fan of P^n: e_1, ..., e_n, -(e_1 + ... + e_n).
FanoPolytope gen_pn(int n);

/// Free sum P ⊕ Q, whose variety is X_P x X_Q. Both inputs must be smooth
/// and reflexive.
FanoPolytope gen_direct_sum(const FanoPolytope& p, const FanoPolytope& q);

/// The five smooth toric del Pezzo surfaces.
std::vector<CorpusEntry> dim2_corpus();

}  // namespace toricfano
