#pragma once

#include <string>
#include <vector>

#include "halg/rational.hpp"

namespace halg {

// Element of the cyclotomic field Q(zeta_N) for a fixed conductor N, stored
// as the canonical residue modulo the N-th cyclotomic polynomial Phi_N: a
// vector of phi(N) rational coordinates in the power basis 1, z, ..,
// z^{phi(N)-1}. The representation is unique, so equality is coordinate-wise.
//
// Zero is conductor-agnostic: arithmetic accepts an exact zero of any
// conductor as the absorbing/neutral element, and all zeros compare equal.
// Mixing nonzero elements of different conductors is an error.
class CycloElem {
 public:
  CycloElem();  // zero (conductor 1)

  static CycloElem zero(int conductor);
  static CycloElem one(int conductor);
  static CycloElem from_rational(int conductor, const Rational& r);
  static CycloElem from_coeffs(int conductor, std::vector<Rational> coeffs);
  // zeta(N)^power, reduced.
  static CycloElem zeta(int conductor, long power = 1);

  int conductor() const;
  int degree() const { return int(c_.size()); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_part() const;  // requires is_rational()

  CycloElem operator-() const;
  friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  CycloElem& operator+=(const CycloElem& b) { return *this = *this + b; }
  CycloElem& operator-=(const CycloElem& b) { return *this = *this - b; }
  CycloElem& operator*=(const CycloElem& b) { return *this = *this * b; }

  CycloElem inverse() const;  // error on zero
  CycloElem pow(long e) const;

  // True iff x^L = 1 with L = lcm(2, N); all roots of unity of Q(zeta_N)
  // have order dividing L.
  bool is_root_of_unity() const;
  // Smallest d >= 1 with x^d = 1, or 0 if x is not a root of unity.
  long root_of_unity_order() const;

  friend bool operator==(const CycloElem& a, const CycloElem& b);
  friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

  std::string str() const;

  // Monic integer coefficients of Phi_n, low degree first.
  static const std::vector<Rational>& cyclotomic_poly(int n);
  static int euler_phi(int n);
  // All roots of unity of Q(zeta_N): the group mu_{lcm(2,N)}.
  static std::vector<CycloElem> roots_of_unity(int conductor);

 private:
  struct Field;
  CycloElem(const Field* f, std::vector<Rational> c);
  static const Field* field(int conductor);

  const Field* f_;          // interned per conductor, never null
  std::vector<Rational> c_;  // size phi(conductor)
};

// Deterministic total order (conductor, then coordinates); used only to fix
// orderings in reports and enumerations.
bool cyclo_less(const CycloElem& a, const CycloElem& b);

}  // namespace halg
