#include <doctest.h>

#include <random>

#include "halg/error.hpp"
#include "halg/scalar.hpp"

using namespace halg;

namespace {

// Small deterministic sampler over Q(zeta_N)(q) for property sweeps.
struct Sampler {
  std::mt19937 rng{20260810};
  int n;
  explicit Sampler(int conductor) : n(conductor) {}

  Rational rat() {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng)) / Rational(den(rng));
  }
  CycloElem cyclo() {
    std::vector<Rational> c(size_t(CycloElem::euler_phi(n)));
    for (auto& x : c) x = rat();
    return CycloElem::from_coeffs(n, std::move(c));
  }
  std::vector<CycloElem> poly(int maxdeg) {
    std::uniform_int_distribution<int> d(0, maxdeg);
    std::vector<CycloElem> p(size_t(d(rng)) + 1);
    for (auto& c : p) c = cyclo();
    return p;
  }
  Scalar scalar() {
    for (;;) {
      auto den = poly(1);
      bool zero = true;
      for (auto& c : den) zero = zero && c.is_zero();
      if (zero) continue;
      return Scalar::normalize(n, poly(2), std::move(den));
    }
  }
  Scalar nonzero() {
    for (;;) {
      Scalar s = scalar();
      if (!s.is_zero()) return s;
    }
  }
};

}  // namespace

TEST_CASE("cyclotomic basics: zeta_N^N = 1 and Phi_N(zeta_N) = 0") {
  for (int n : {1, 2, 3, 4, 5, 6, 8, 12}) {
    CycloElem z = CycloElem::zeta(n);
    CHECK(z.pow(n).is_one());
    const auto& phi = CycloElem::cyclotomic_poly(n);
    CycloElem acc = CycloElem::zero(n);
    for (size_t i = 0; i < phi.size(); i++) {
      acc += CycloElem::from_rational(n, phi[i]) * z.pow(long(i));
    }
    CHECK(acc.is_zero());
    CHECK(CycloElem::euler_phi(n) == int(phi.size()) - 1);
  }
}

TEST_CASE("cyclotomic arithmetic closure and inverses") {
  Sampler s(12);
  for (int it = 0; it < 50; it++) {
    CycloElem a = s.cyclo(), b = s.cyclo(), c = s.cyclo();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) {
      CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("normalize: polynomial cancellation") {
  int n = 1;
  // (q^2 - 1) / (q - 1) -> q + 1
  std::vector<CycloElem> num = {CycloElem::from_rational(n, -1), CycloElem::zero(n),
                                CycloElem::one(n)};
  std::vector<CycloElem> den = {CycloElem::from_rational(n, -1), CycloElem::one(n)};
  Scalar r = Scalar::normalize(n, num, den);
  Scalar expect = Scalar::q(n) + Scalar::one(n);
  CHECK(r == expect);
}

TEST_CASE("normalize: zero numerator and zero denominator") {
  int n = 1;
  std::vector<CycloElem> num = {CycloElem::zero(n)};
  std::vector<CycloElem> q3 = {CycloElem::zero(n), CycloElem::zero(n), CycloElem::zero(n),
                               CycloElem::one(n)};
  CHECK(Scalar::normalize(n, num, q3).is_zero());
  CHECK_THROWS_AS(Scalar::normalize(n, q3, {CycloElem::zero(n)}), Error);
}

TEST_CASE("normalize: constant absorption (2q, 4) -> q/2") {
  int n = 1;
  std::vector<CycloElem> num = {CycloElem::zero(n), CycloElem::from_rational(n, 2)};
  std::vector<CycloElem> den = {CycloElem::from_rational(n, 4)};
  Scalar r = Scalar::normalize(n, num, den);
  CHECK(r.den_degree() == 0);
  CHECK(r.den()[0].is_one());
  CHECK(r == Scalar::q(n) * Scalar::from_rational(n, Rational(1) / 2));
}

TEST_CASE("normalize is scale invariant") {
  Sampler s(3);
  for (int it = 0; it < 30; it++) {
    auto num = s.poly(2);
    auto den = s.poly(1);
    bool deny = false;
    for (auto& c : den) deny = deny || !c.is_zero();
    if (!deny) continue;
    CycloElem a = s.cyclo();
    if (a.is_zero()) continue;
    auto snum = num;
    auto sden = den;
    for (auto& c : snum) c *= a;
    for (auto& c : sden) c *= a;
    CHECK(Scalar::normalize(3, num, den) == Scalar::normalize(3, snum, sden));
  }
}

TEST_CASE("is_root_of_unity") {
  CHECK(Scalar::zeta(3).is_root_of_unity());
  CHECK_FALSE(Scalar::q(3).is_root_of_unity());
  CHECK(Scalar::from_int(4, -1).is_root_of_unity());
  CHECK_FALSE(Scalar::from_int(4, 2).is_root_of_unity());
  CHECK_THROWS_AS(Scalar::zero(3).is_root_of_unity(), Error);
  // products of roots of unity are roots of unity
  for (long i = 0; i < 12; i++) {
    for (long j = 0; j < 12; j++) {
      Scalar a = Scalar::zeta(12, i), b = Scalar::zeta(12, j);
      CHECK((a * b).is_root_of_unity());
    }
  }
}

TEST_CASE("pow_int") {
  int n = 4;
  CHECK(Scalar::q(n).pow_int(-2) == Scalar::q_pow(n, -2));
  CHECK(Scalar::q_pow(n, -2) == Scalar::one(n) / (Scalar::q(n) * Scalar::q(n)));
  CHECK(Scalar::zeta(4).pow_int(4) == Scalar::one(4));
  Scalar qp1 = Scalar::q(n) + Scalar::one(n);
  Scalar sq = qp1.pow_int(2);
  Scalar expect = Scalar::q_pow(n, 2) + Scalar::from_int(n, 2) * Scalar::q(n) + Scalar::one(n);
  CHECK(sq == expect);
  CHECK(qp1.pow_int(0) == Scalar::one(n));
  CHECK_THROWS_AS(Scalar::zero(n).pow_int(-1), Error);
}

TEST_CASE("field axioms on random scalars") {
  for (int n : {1, 3, 4}) {
    Sampler s(n);
    for (int it = 0; it < 40; it++) {
      Scalar a = s.scalar(), b = s.scalar(), c = s.scalar();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Scalar::zero(n));
      Scalar x = s.nonzero();
      CHECK(x * x.inverse() == Scalar::one(n));
    }
  }
}

TEST_CASE("canonical form uniqueness") {
  int n = 3;
  Sampler s(n);
  for (int it = 0; it < 30; it++) {
    Scalar a = s.scalar();
    Scalar b = s.nonzero();
    // a == (a*b)/b must hold with identical representations
    Scalar r = (a * b) / b;
    CHECK(r == a);
    CHECK(r.num() == a.num());
    CHECK(r.den() == a.den());
  }
}

TEST_CASE("zero is conductor agnostic") {
  CHECK(Scalar::zero(1) == Scalar::zero(12));
  CHECK(Scalar() + Scalar::q(3) == Scalar::q(3));
  CHECK((Scalar() * Scalar::q(3)).is_zero());
}

TEST_CASE("roots of unity enumeration") {
  CHECK(CycloElem::roots_of_unity(1).size() == 2);   // {1, -1}
  CHECK(CycloElem::roots_of_unity(3).size() == 6);   // mu_6
  CHECK(CycloElem::roots_of_unity(4).size() == 4);   // mu_4
  CHECK(CycloElem::roots_of_unity(12).size() == 12);
  for (const auto& w : CycloElem::roots_of_unity(12)) CHECK(w.is_root_of_unity());
}

TEST_CASE("root of unity order") {
  CHECK(CycloElem::zeta(12).root_of_unity_order() == 12);
  CHECK(CycloElem::zeta(12, 4).root_of_unity_order() == 3);
  CHECK(CycloElem::from_rational(3, 2).root_of_unity_order() == 0);
  CHECK((-CycloElem::one(3)).root_of_unity_order() == 2);
}
