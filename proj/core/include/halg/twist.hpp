#pragma once

#include "halg/algebra.hpp"

namespace halg {

// Bilinear pairing tau : U (x) A -> k subject to the four compatibility
// axioms (multiplication on either side matches comultiplication on the
// other, units map to counits), together with its convolution inverse.
struct Pairing {
  Mat matrix;   // dimU x dimA, entry (i,j) = tau(e_i, f_j)
  Mat inverse;  // two-sided convolution inverse
};

// Algebra structure H on U (x) A built from a pairing by a two-cocycle
// twist of the tensor product bialgebra. Basis of H is e_i (x) f_j at index
// i*dimA + j; the coalgebra is the tensor product coalgebra. Products with
// the unit in either slot multiply slotwise.
struct TwistedAlgebra {
  HopfData U, A;
  Pairing tau;
  HopfData H;

  int dimU() const { return U.dim(); }
  int dimA() const { return A.dim(); }
  int dim() const { return H.dim(); }
  int conductor() const { return H.conductor(); }
  int hindex(int i, int j) const { return i * A.dim() + j; }
  int uindex(int h) const { return h / A.dim(); }
  int aindex(int h) const { return h % A.dim(); }

  Vec embed_U(const Vec& u) const;  // u (x) 1
  Vec embed_A(const Vec& a) const;  // 1 (x) a
  Vec tensor_elem(const Vec& u, const Vec& a) const;
};

// Axioms checked on all basis tuples; failures are itemized per axiom.
Report verify_pairing_axioms(const HopfData& u, const HopfData& a, const Mat& tau);

// Convolution inverse: tau composed with an antipode, taken from U when
// present and from A (inverted) otherwise; the result is verified to be a
// two-sided inverse. Errors when no antipode is available or the candidate
// fails verification.
Mat pairing_inverse(const HopfData& u, const HopfData& a, const Mat& tau);

// verify_pairing_axioms + pairing_inverse; throws on invalid input.
Pairing make_pairing(const HopfData& u, const HopfData& a, Mat tau);
Pairing trivial_pairing(const HopfData& u, const HopfData& a);
// Evaluation pairing between A^{* cop} and A in dual bases.
Pairing evaluation_pairing(const HopfData& ustar, const HopfData& a);

// The twisted product on all basis pairs, the tensor coalgebra, and an
// antipode derived from the twist of the tensor Hopf structure (verified).
// The slotwise product property is re-checked on construction.
TwistedAlgebra build_twisted(const HopfData& u, const HopfData& a, const Pairing& tau);

// Drinfeld double D(A) = A^{* cop} (x) A with the product written directly
// through the bimodule form p(a_(1) . q . s^{-1}(a_(3))) (x) a_(2) b; asserts
// entrywise equality with the twisted construction over the evaluation
// pairing.
TwistedAlgebra drinfeld_double(const HopfData& a);

// The two-cocycle sigma and its convolution inverse on basis pairs of H,
// materialized lazily from tau.
Scalar twist_sigma(const TwistedAlgebra& h, int hx, int hy);
Scalar twist_sigma_inv(const TwistedAlgebra& h, int hx, int hy);

// sigma(x1,y1) sigma(x2 y2, z) = sigma(y1, z1) sigma(x, y2 z2) on all basis
// triples. Quadratic in dim(H); intended for dim <= 16.
Report verify_cocycle_identity(const TwistedAlgebra& h);

// The slotwise product property on all basis pairs:
// (u (x) 1)(u' (x) a') = u u' (x) a' and (u (x) a)(1 (x) a') = u (x) a a'.
Report verify_mult_property(const TwistedAlgebra& h);

// The algebra structure H~ = A^op (x) U^op on A (x) U transported through
// the flip from H^op; satisfies the slotwise product property with the
// slots reversed.
struct OpReversal {
  AlgebraData slot_u;  // A^op
  AlgebraData slot_a;  // U^op
  AlgebraData h;       // dim = dimA*dimU, basis (j,i) at j*dimU + i
};
OpReversal op_reversal(const TwistedAlgebra& h);
Report verify_op_reversal_property(const OpReversal& r);

// The comparison map H -> D(A), u (x) a -> tau_l(u) (x) a, verified to be a
// bialgebra morphism (multiplicative, comultiplicative, unit/counit
// preserving).
struct ComparisonMap {
  TwistedAlgebra target;  // D(A)
  Mat matrix;             // dim D(A) x dim H
  Report check;
};
ComparisonMap comparison_map(const TwistedAlgebra& h);

// All central elements u (x) g with u from the candidate list and g a
// group-like of A, decided by commutators against every basis element.
struct CentralPair {
  Vec u, g;
  Vec element;  // u (x) g in H coordinates
};
std::vector<CentralPair> central_grouplike_scan(const TwistedAlgebra& h,
                                                const std::vector<Vec>& u_candidates);
std::vector<CentralPair> central_grouplike_scan(const TwistedAlgebra& h);  // u from G(U)

}  // namespace halg
