#pragma once

#include "halg/algebra.hpp"
#include "halg/cartan_types.hpp"
#include "halg/group.hpp"
#include "halg/module.hpp"
#include "halg/twist.hpp"

namespace halg {

// Constructors for the concrete objects used across the test and acceptance
// suites. Every object is verified on construction and construction fails on
// a verification error.

// Group algebra kG of a finite abelian group: basis = group elements in
// enumeration order, Delta g = g (x) g, S(g) = g^{-1}.
HopfData group_algebra(const AbelianGroup& g, int conductor);

// Taft algebra of dimension n^2: generators g, x with g^n = 1, x^n = 0,
// x g = q g x; Delta g = g (x) g, Delta x = x (x) g + 1 (x) x. Basis g^i x^j
// at index i*n + j. Requires q of exact multiplicative order n.
HopfData taft_algebra(int n, const Scalar& q);

// D(T_n) built via drinfeld_double, at conductor n with q = zeta_n.
TwistedAlgebra double_taft(int n);

// The n-dimensional simple module over k<g, a | g^n = 1, g a g^{-1} = q a>
// with g m_i = q^i m_i and a m_i = m_{i+1}, together with its rank-one
// Cartan datum (type A1, chi(g) = q).
struct SimpleRepExample {
  Representation rep;   // generators named "g" and "a"
  CartanDatum datum;
  int a_generator = 1;  // index of "a" in rep.generators
};
SimpleRepExample example_simple_rep(int n, const Scalar& q);

// Connected rank-two datum over a free abelian group with Cartan matrix
// [[2,-2],[-2,2]] and chi_j(g_i) = q^{a_ij}: of Cartan type but not finite
// type, with chi_1 chi_2 = 1.
CartanDatum counterexample_datum();

// Standard finite-type data over free abelian groups, chi_j(g_i) = q^{d_i a_ij}.
enum class FiniteType { A1, A2, B2, G2 };
CartanDatum finite_type_datum(FiniteType label);
const char* finite_type_name(FiniteType label);

}  // namespace halg
