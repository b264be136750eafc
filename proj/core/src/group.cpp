#include "halg/group.hpp"

#include <numeric>

#include "halg/error.hpp"

namespace halg {

long AbelianGroup::order() const {
  require(is_finite(), "AbelianGroup: infinite group has no order");
  long n = 1;
  for (long t : torsion) n *= t;
  return n;
}

long AbelianGroup::exponent() const {
  long e = 1;
  for (long t : torsion) e = std::lcm(e, t);
  return e;
}

GroupElem group_identity(const AbelianGroup& g) {
  return GroupElem{std::vector<long>(size_t(g.num_gens()), 0)};
}

GroupElem group_canon(const AbelianGroup& g, GroupElem x) {
  require(int(x.e.size()) == g.num_gens(), "GroupElem: wrong exponent length");
  for (size_t i = 0; i < g.torsion.size(); i++) {
    long n = g.torsion[i];
    long& v = x.e[size_t(g.free_rank) + i];
    v %= n;
    if (v < 0) v += n;
  }
  return x;
}

GroupElem group_mul(const AbelianGroup& g, const GroupElem& a, const GroupElem& b) {
  require(a.e.size() == b.e.size() && int(a.e.size()) == g.num_gens(),
          "GroupElem: shape mismatch");
  GroupElem c = a;
  for (size_t i = 0; i < b.e.size(); i++) c.e[i] += b.e[i];
  return group_canon(g, std::move(c));
}

GroupElem group_inv(const AbelianGroup& g, const GroupElem& a) {
  GroupElem c = a;
  for (auto& v : c.e) v = -v;
  return group_canon(g, std::move(c));
}

GroupElem group_pow(const AbelianGroup& g, const GroupElem& a, long k) {
  GroupElem c = a;
  for (auto& v : c.e) v *= k;
  return group_canon(g, std::move(c));
}

std::vector<GroupElem> group_elements(const AbelianGroup& g) {
  require(g.is_finite(), "group_elements: group must be finite");
  std::vector<GroupElem> out;
  GroupElem cur = group_identity(g);
  out.reserve(size_t(g.order()));
  for (;;) {
    out.push_back(cur);
    // odometer over torsion coordinates
    int i = g.num_gens() - 1;
    for (; i >= 0; i--) {
      long n = g.torsion[size_t(i)];
      if (++cur.e[size_t(i)] < n) break;
      cur.e[size_t(i)] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

void check_character(const AbelianGroup& g, const Character& c) {
  require(int(c.values.size()) == g.num_gens(), "Character: wrong number of values");
  for (const auto& v : c.values) require(!v.is_zero(), "Character: zero value");
  for (size_t i = 0; i < g.torsion.size(); i++) {
    const Scalar& v = c.values[size_t(g.free_rank) + i];
    require(v.pow_int(g.torsion[i]).is_one(),
            "Character: torsion generator value has wrong order");
  }
}

Character trivial_character(const AbelianGroup& g, int conductor) {
  return Character{std::vector<Scalar>(size_t(g.num_gens()), Scalar::one(conductor))};
}

Scalar char_eval(const AbelianGroup& g, const Character& c, const GroupElem& x) {
  require(int(c.values.size()) == g.num_gens() && x.e.size() == c.values.size(),
          "char_eval: shape mismatch");
  Scalar out;
  bool first = true;
  for (size_t i = 0; i < c.values.size(); i++) {
    if (x.e[i] == 0) continue;
    Scalar f = c.values[i].pow_int(x.e[i]);
    out = first ? f : out * f;
    first = false;
  }
  if (first) {
    // identity element: take the conductor from the character values
    return c.values.empty() ? Scalar::one(1) : Scalar::one(c.values[0].conductor());
  }
  return out;
}

Character char_product(const AbelianGroup& g, const Character& a, const Character& b) {
  require(a.values.size() == b.values.size() && int(a.values.size()) == g.num_gens(),
          "char_product: group mismatch");
  Character c = a;
  for (size_t i = 0; i < c.values.size(); i++) c.values[i] *= b.values[i];
  return c;
}

Character char_power(const AbelianGroup& g, const Character& a, long k) {
  require(int(a.values.size()) == g.num_gens(), "char_power: group mismatch");
  Character c = a;
  for (auto& v : c.values) v = v.pow_int(k);
  return c;
}

bool char_is_trivial(const AbelianGroup& g, const Character& c) {
  require(int(c.values.size()) == g.num_gens(), "char_is_trivial: group mismatch");
  for (const auto& v : c.values)
    if (!v.is_one()) return false;
  return true;
}

std::vector<Character> enumerate_characters(const AbelianGroup& g, int conductor) {
  require(g.free_rank == 0,
          "enumerate_characters: positive free rank gives infinitely many characters");
  require(g.exponent() == 1 || conductor % g.exponent() == 0,
          "enumerate_characters: conductor not divisible by the group exponent");
  std::vector<Character> out;
  int s = int(g.torsion.size());
  std::vector<long> k(size_t(s), 0);
  for (;;) {
    Character c;
    c.values.reserve(size_t(s));
    for (int i = 0; i < s; i++) {
      long n = g.torsion[size_t(i)];
      c.values.push_back(Scalar::zeta(conductor, (long(conductor) / n) * k[size_t(i)]));
    }
    out.push_back(std::move(c));
    int i = s - 1;
    for (; i >= 0; i--) {
      if (++k[size_t(i)] < g.torsion[size_t(i)]) break;
      k[size_t(i)] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace halg
