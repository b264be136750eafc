#pragma once

#include <vector>

#include "halg/group.hpp"

namespace halg {

// Generalized Cartan matrix candidate; validity is decided by
// verify_cartan_matrix.
struct CartanMatrix {
  std::vector<std::vector<long>> a;
  int size() const { return int(a.size()); }
};

// Datum (Gamma, (g_i), (chi_i), (a_ij)) with q_ij = chi_j(g_i) subject to
// q_ij q_ji = q_ii^{a_ij} and q_ii != 1.
struct CartanDatum {
  AbelianGroup group;
  std::vector<GroupElem> g;
  std::vector<Character> chi;
  CartanMatrix cartan;
  int conductor = 1;

  int rank() const { return int(g.size()); }
  Scalar q(int i, int j) const;  // chi_j(g_i)
};

}  // namespace halg
