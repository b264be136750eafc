#pragma once

#include <vector>

#include "halg/scalar.hpp"

namespace halg {

// Finitely generated abelian group Z^r x Z_{n_1} x ... x Z_{n_s}, written
// multiplicatively. Elements are exponent vectors over the r + s generators
// with torsion coordinates reduced into [0, n_i).
struct AbelianGroup {
  int free_rank = 0;
  std::vector<long> torsion;  // each >= 2

  int num_gens() const { return free_rank + int(torsion.size()); }
  bool is_finite() const { return free_rank == 0; }
  long order() const;     // finite groups only
  long exponent() const;  // lcm of torsion orders (1 if none)
  bool operator==(const AbelianGroup&) const = default;
};

struct GroupElem {
  std::vector<long> e;
  bool operator==(const GroupElem&) const = default;
};

GroupElem group_identity(const AbelianGroup& g);
GroupElem group_canon(const AbelianGroup& g, GroupElem x);
GroupElem group_mul(const AbelianGroup& g, const GroupElem& a, const GroupElem& b);
GroupElem group_inv(const AbelianGroup& g, const GroupElem& a);
GroupElem group_pow(const AbelianGroup& g, const GroupElem& a, long k);
// All elements of a finite group in lexicographic exponent order.
std::vector<GroupElem> group_elements(const AbelianGroup& g);

// Character of an abelian group, stored by its values on the generators.
// Torsion generator values must be roots of unity of order dividing the
// generator order; free generator values may be arbitrary nonzero Scalars
// (transcendental q-powers included).
struct Character {
  std::vector<Scalar> values;
  bool operator==(const Character&) const = default;
};

// Validates shape and torsion orders.
void check_character(const AbelianGroup& g, const Character& c);

Character trivial_character(const AbelianGroup& g, int conductor);
Scalar char_eval(const AbelianGroup& g, const Character& c, const GroupElem& x);
Character char_product(const AbelianGroup& g, const Character& a, const Character& b);
Character char_power(const AbelianGroup& g, const Character& a, long k);
bool char_is_trivial(const AbelianGroup& g, const Character& c);

// All |G| characters of a finite group, valued in session roots of unity.
// Requires the conductor to be divisible by the exponent of G. Ordered
// lexicographically by exponent tuple.
std::vector<Character> enumerate_characters(const AbelianGroup& g, int conductor);

}  // namespace halg
