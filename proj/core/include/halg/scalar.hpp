#pragma once

#include <string>
#include <vector>

#include "halg/cyclotomic.hpp"

namespace halg {

// Element of k = Q(zeta_N)(q): a rational function in the indeterminate q
// with CycloElem coefficients, kept in canonical reduced form:
//   - denominator monic and coprime to the numerator,
//   - zero is represented as 0/1.
// Equality of canonical forms is field equality. Constants (no q dependence)
// embed Q(zeta_N). As with CycloElem, exact zeros are conductor-agnostic.
class Scalar {
 public:
  Scalar();  // zero

  static Scalar zero(int conductor);
  static Scalar one(int conductor);
  static Scalar from_int(int conductor, long v);
  static Scalar from_rational(int conductor, const Rational& r);
  static Scalar from_cyclo(const CycloElem& c);
  static Scalar zeta(int conductor, long power = 1);
  static Scalar q(int conductor);
  static Scalar q_pow(int conductor, long e);
  // Canonical form of num/den; errors when den = 0. Scaling both inputs by a
  // common nonzero factor yields the identical result.
  static Scalar normalize(int conductor, std::vector<CycloElem> num,
                          std::vector<CycloElem> den);

  int conductor() const;

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  bool is_constant() const;          // no q dependence
  CycloElem constant_value() const;  // requires is_constant()

  int num_degree() const { return int(num_.size()) - 1; }  // -1 for zero
  int den_degree() const { return den_.empty() ? 0 : int(den_.size()) - 1; }
  const std::vector<CycloElem>& num() const { return num_; }
  std::vector<CycloElem> den() const;  // materializes {1} for a unit denominator

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  Scalar inverse() const;     // error on zero
  Scalar pow_int(long e) const;  // error on zero with e < 0; x^0 = 1

  // True iff the value is constant and x^L = 1 for L = lcm(2, N). Errors on
  // zero. Any Scalar with genuine q dependence is never a root of unity.
  bool is_root_of_unity() const;

  // True when every coefficient is rational, i.e. the value lies in Q(q) and
  // embeds in any session field.
  bool is_rational_function_over_q() const;
  Scalar promoted(int conductor) const;  // error unless rational over q

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  Scalar(int conductor, std::vector<CycloElem> num, std::vector<CycloElem> den);

  int conductor_;
  std::vector<CycloElem> num_;  // empty iff zero
  std::vector<CycloElem> den_;  // empty means 1, else monic of degree >= 1
};

// Deterministic total order for stable enumerations.
bool scalar_less(const Scalar& a, const Scalar& b);

}  // namespace halg
