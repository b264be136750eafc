#pragma once

#include <optional>
#include <string>

#include "halg/twist.hpp"

namespace halg {

enum class Side { left, right };

// Module over a twisted algebra H, given by the action of every basis
// element. For a left module, act[h] v is e_h . v; for a right module,
// act[h] v is v . e_h (so act is an anti-homomorphism).
struct HModule {
  Side side = Side::left;
  int dim = 0;
  int conductor = 1;
  std::vector<Mat> act;

  Mat act_of(const Vec& h) const;
};

// Named-generator representation: the JSON-facing flavor, also used for
// condition-(C) style data where the algebra is presented by generators.
struct Representation {
  Side side = Side::left;
  int dim = 0;
  std::vector<std::pair<std::string, Mat>> generators;

  const Mat& action(const std::string& name) const;
};

// Multiplicative characters as value vectors on an algebra basis.
bool is_algebra_character(const AlgebraData& a, const Vec& chi);
Scalar char_value(const Vec& chi, const Vec& x);  // extend linearly

// Characters of the twisted algebra's two slots, deterministically ordered.
std::vector<Vec> characters_of_U(const TwistedAlgebra& h);
std::vector<Vec> characters_of_A(const TwistedAlgebra& h);

// Induced left H-module on U from a character of A:
//   h . u' = (I (x) chi)(h (u' (x) 1)).
// Restriction to U (x) 1 is left multiplication and (1 (x) a) . 1 = chi(a) 1.
HModule induced_U_chi(const TwistedAlgebra& h, const Vec& chi);
// Induced right H-module on A from a character of U:
//   a . h = (rho (x) I)((1 (x) a) h).
HModule induced_A_rho(const TwistedAlgebra& h, const Vec& rho);

// Smallest subspace containing v and stable under all generator actions.
Subspace submodule_generated(const std::vector<Mat>& gens, const Vec& v);
Subspace submodule_generated(const std::vector<Mat>& gens, const Subspace& seed);
// Largest subspace of w stable under all generator actions, by the nested
// kernel fixpoint V -> {v in V : g v in V for all g}.
Subspace largest_submodule_within(const std::vector<Mat>& gens, const Subspace& w);

struct WeightSpace {
  Vec eigenvalues;  // one per generator matrix
  Mat basis;        // ambient x multiplicity, columns
};
// Simultaneous eigenspace decomposition of a commuting family. Errors when
// the family is not simultaneously diagonalizable over the session field,
// naming the first undetected factor.
std::vector<WeightSpace> weight_decomposition(const std::vector<Mat>& commuting, int conductor);

// The intertwiner test: an invertible t with t a_i = b_i t for all i, or
// nullopt when only t = 0 exists. Errors if a nonzero non-invertible solution
// space defeats the certified search (cannot happen for simple modules).
std::optional<Mat> module_iso(const std::vector<Mat>& a, const std::vector<Mat>& b,
                              int conductor);

// Simplicity for modules whose commuting "group part" acts diagonalizably
// with one-dimensional weight spaces: simple iff every weight vector
// generates. Errors on multiplicity > 1 (certified enumeration unsupported).
bool is_simple(const std::vector<Mat>& all_gens, const std::vector<Mat>& group_gens,
               int conductor);

// A left H-module together with a distinguished one-dimensional A-stable
// line km and a codimension-one U-stable subspace N meeting no nonzero
// H-submodule.
struct TripleObject {
  HModule module;
  Vec m;
  Subspace n;
  Vec rho, chi;   // characters of U and A attached to the triple
  Mat proj, incl; // quotient data from the inducing space
  Subspace ideal; // kernel of the projection: I(rho,chi) resp. J(chi,rho)
};

// L(rho, chi) = U_chi / I(rho, chi) with I the largest H-submodule inside
// Ker rho. All structural invariants are re-verified on construction.
TripleObject build_L(const TwistedAlgebra& h, const Vec& rho, const Vec& chi);
// R(chi, rho) = A_rho / J(chi, rho), the right-module mirror.
TripleObject build_R(const TwistedAlgebra& h, const Vec& chi, const Vec& rho);

// Extracts (rho, chi) from an abstract triple via the annihilator
// identities, checks them against the stated characters, and produces the
// classifying isomorphism L(rho, chi) -> M induced by u -> u . m.
struct TripleClassification {
  Vec rho, chi;
  Mat iso;  // from the freshly built L onto the given module
  Report check;
};
TripleClassification classify_triple(const TwistedAlgebra& h, const TripleObject& t);

// The dual triple (M., km., N.) inside M* with the transpose right action:
// m. is the functional vanishing on N with m.(m) = 1, M. = m. H,
// N. = m-perp intersect M.. Verifies the annihilator identities and the
// isomorphism with R(chi, rho).
struct DualityResult {
  TripleObject dual;  // right module triple, coordinates in the chosen basis of M.
  Mat basis;          // dim M x dim M., columns embed M. into M*
  Report check;
};
DualityResult duality_bullet(const TwistedAlgebra& h, const TripleObject& t);

// All one-dimensional A-submodule generators (up to scale) of a left
// H-module, via the weight lines of the group-likes of A. Errors on
// multiplicity > 1 in the group-like weight structure.
std::vector<Vec> find_one_dim_A_submodules(const TwistedAlgebra& h, const HModule& m);
// All codimension-one U-submodules, via one-dimensional U-stable lines of
// the transpose module.
std::vector<Subspace> find_codim_one_U_submodules(const TwistedAlgebra& h, const HModule& m);

// Induced map L(rho, chi) -> L(rho_bar, chi_bar) along a morphism
// F = f (x) g of twisted algebras with rho = rho_bar f, chi = chi_bar g.
struct LiftResult {
  Mat map;
  Vec rho, chi;  // pulled back characters
  bool invertible = false;
  Report check;
};
LiftResult lift_morphism_L(const TwistedAlgebra& h, const TwistedAlgebra& hbar, const Mat& f,
                           const Mat& g, const Vec& rho_bar, const Vec& chi_bar);

// Condition (C): act(g) act(a_i) act(g)^{-1} = chi_i(g) act(a_i) for every
// group generator action, with every chi_i nontrivial.
Report condition_C_check(const Representation& rep, const AbelianGroup& group,
                         const std::vector<int>& group_gen_indices,
                         const std::vector<int>& a_gen_indices,
                         const std::vector<Character>& chi);

// A common eigenvector of the group actions inside the joint kernel of the
// a_i actions, when one exists; its span is a verified one-dimensional
// submodule for the full generator family.
std::optional<Vec> find_annihilated_weight_vector(const std::vector<Mat>& a_actions,
                                                  const std::vector<Mat>& group_actions,
                                                  int conductor);

}  // namespace halg
