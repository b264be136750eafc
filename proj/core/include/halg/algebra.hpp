#pragma once

#include <optional>
#include <string>
#include <vector>

#include "halg/linalg.hpp"
#include "halg/report.hpp"
#include "halg/scalar.hpp"

namespace halg {

// Sparse vector in a fixed basis: sorted by index, no zero coefficients.
using SVec = std::vector<std::pair<int, Scalar>>;

SVec sv_normalize(SVec v);
SVec sv_from_dense(const Vec& v);
Vec sv_to_dense(const SVec& v, int dim);
void sv_add_scaled(SVec& acc, const Scalar& c, const SVec& v);  // acc += c*v, re-normalized
SVec sv_scale(const Scalar& c, const SVec& v);
bool sv_equal(const SVec& a, const SVec& b);

// Finite-dimensional algebra by structure constants: prod[i*dim+j] holds
// e_i * e_j. Associativity and the unit laws are verified, not assumed; see
// verify_algebra.
struct AlgebraData {
  int dim = 0;
  int conductor = 1;
  Vec unit;                // dense coordinates of 1
  std::vector<SVec> prod;  // dim*dim entries

  const SVec& basis_prod(int i, int j) const { return prod[size_t(i) * size_t(dim) + size_t(j)]; }
  SVec& basis_prod(int i, int j) { return prod[size_t(i) * size_t(dim) + size_t(j)]; }
  SVec mul(const SVec& a, const SVec& b) const;
  Vec mul_dense(const Vec& a, const Vec& b) const;
  Mat left_mult_matrix(const Vec& x) const;   // y -> x y
  Mat right_mult_matrix(const Vec& x) const;  // y -> y x
};

struct CoTerm {
  int left, right;
  Scalar c;
};

struct CoalgebraData {
  int dim = 0;
  int conductor = 1;
  std::vector<std::vector<CoTerm>> comult;  // per basis index
  Vec counit;

  Scalar counit_of(const Vec& v) const;
};

// One summand of an iterated coproduct (Delta x id) Delta e_i.
struct TriTerm {
  int a, b, c;
  Scalar coeff;
};
std::vector<TriTerm> comult2(const CoalgebraData& c, int i);

struct HopfData {
  AlgebraData alg;
  CoalgebraData coa;
  std::optional<Mat> antipode;  // n x n, columns are images of basis vectors

  int dim() const { return alg.dim; }
  int conductor() const { return alg.conductor; }
  Vec antipode_of(const Vec& v) const;
};

Report verify_algebra(const AlgebraData& a);
Report verify_coalgebra(const CoalgebraData& c);
// Algebra + coalgebra axioms plus: Delta and counit are unit-preserving
// algebra maps. verify_hopf additionally checks S(x_(1)) x_(2) = eps(x) 1 =
// x_(1) S(x_(2)).
Report verify_bialgebra(const HopfData& h);
Report verify_hopf(const HopfData& h);

// Dual Hopf algebra on the dual basis: multiplication is the transpose of
// comultiplication and vice versa, antipode is the transpose.
HopfData dual_hopf(const HopfData& h);
AlgebraData op_variant(const AlgebraData& a);
CoalgebraData cop_variant(const CoalgebraData& c);
// H^{cop}: same algebra, flipped coproduct, antipode replaced by its inverse.
HopfData cop_hopf(const HopfData& h);
// A^{* cop}, the left factor of the Drinfeld double construction.
HopfData dual_cop_hopf(const HopfData& h);

// The multiplicative characters Alg(B, k) of a finite-dimensional algebra:
// value vectors on the basis. Exact and complete whenever all character
// values are detectable in the session field (roots of unity, zero, or
// matrix entries of multiplication operators); otherwise an Error names the
// obstruction. Results are deterministically ordered.
std::vector<Vec> algebra_characters(const AlgebraData& b);

// Group-like elements of the underlying coalgebra: all v with
// Delta v = v (x) v and eps(v) = 1, found as characters of the dual algebra.
// Complete under the same session-field condition as algebra_characters.
std::vector<Vec> grouplikes(const HopfData& h, int dim_cap = 100);

// Dual algebra of a coalgebra: (e^i e^j)(x) = (e^i (x) e^j)(Delta x).
AlgebraData dual_algebra(const CoalgebraData& c);

}  // namespace halg
