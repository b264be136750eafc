#include <doctest.h>

#include "halg/error.hpp"
#include "halg/group.hpp"

using namespace halg;

TEST_CASE("group element canonicalization and ops") {
  AbelianGroup g{0, {2, 3}};
  CHECK(g.order() == 6);
  CHECK(g.exponent() == 6);
  GroupElem a{{1, 2}}, b{{1, 2}};
  GroupElem ab = group_mul(g, a, b);
  CHECK(ab == GroupElem{{0, 1}});
  CHECK(group_inv(g, a) == GroupElem{{1, 1}});
  CHECK(group_pow(g, a, 6) == group_identity(g));
  CHECK(group_elements(g).size() == 6);
}

TEST_CASE("char_eval: trivial character") {
  AbelianGroup g{0, {4}};
  Character triv = trivial_character(g, 4);
  for (const auto& x : group_elements(g)) {
    CHECK(char_eval(g, triv, x).is_one());
  }
}

TEST_CASE("char_eval on the rank-two free group datum") {
  // chi_1 = (q^2, q^-2) on Z^2, evaluated at g_1 = (1,0)
  AbelianGroup g{2, {}};
  Character chi1{{Scalar::q_pow(1, 2), Scalar::q_pow(1, -2)}};
  CHECK(char_eval(g, chi1, GroupElem{{1, 0}}) == Scalar::q_pow(1, 2));
  CHECK(char_eval(g, chi1, GroupElem{{0, 1}}) == Scalar::q_pow(1, -2));
  CHECK(char_eval(g, chi1, GroupElem{{1, 1}}).is_one());
  // multiplicative in the group element
  GroupElem x{{2, -1}}, y{{-1, 3}};
  CHECK(char_eval(g, chi1, group_mul(g, x, y)) ==
        char_eval(g, chi1, x) * char_eval(g, chi1, y));
}

TEST_CASE("order-2 character squares to one") {
  AbelianGroup g{0, {2}};
  Character c{{Scalar::from_int(2, -1)}};
  check_character(g, c);
  GroupElem gg{{1}};
  CHECK(char_eval(g, c, group_mul(g, gg, gg)).is_one());
}

TEST_CASE("enumerate_characters") {
  AbelianGroup z2{0, {2}};
  auto chars2 = enumerate_characters(z2, 2);
  REQUIRE(chars2.size() == 2);
  CHECK(chars2[0].values[0].is_one());
  CHECK(chars2[1].values[0] == Scalar::from_int(2, -1));

  AbelianGroup z2z2{0, {2, 2}};
  CHECK(enumerate_characters(z2z2, 2).size() == 4);

  AbelianGroup z3{0, {3}};
  auto chars3 = enumerate_characters(z3, 3);
  REQUIRE(chars3.size() == 3);
  CHECK(chars3[0].values[0].is_one());
  CHECK(chars3[1].values[0] == Scalar::zeta(3));
  CHECK(chars3[2].values[0] == Scalar::zeta(3, 2));

  AbelianGroup z2free{1, {}};
  CHECK_THROWS_AS(enumerate_characters(z2free, 2), Error);
  CHECK_THROWS_AS(enumerate_characters(z3, 2), Error);  // conductor too small
}

TEST_CASE("character group structure") {
  AbelianGroup g{0, {2, 3}};
  auto chars = enumerate_characters(g, 6);
  REQUIRE(chars.size() == 6);
  // pointwise product law against evaluation, on all pairs and elements
  auto elems = group_elements(g);
  for (const auto& c1 : chars) {
    for (const auto& c2 : chars) {
      Character p = char_product(g, c1, c2);
      for (const auto& x : elems) {
        CHECK(char_eval(g, p, x) == char_eval(g, c1, x) * char_eval(g, c2, x));
      }
    }
  }
  // the enumeration forms a group of order |G| under products: closure check
  auto index_of = [&](const Character& c) {
    for (size_t i = 0; i < chars.size(); i++)
      if (chars[i] == c) return int(i);
    return -1;
  };
  for (const auto& c1 : chars)
    for (const auto& c2 : chars) CHECK(index_of(char_product(g, c1, c2)) >= 0);
  // inverse and identity
  for (const auto& c : chars) {
    CHECK(char_is_trivial(g, char_product(g, c, char_power(g, c, -1))));
  }
  CHECK(char_is_trivial(g, char_power(g, chars[3], 0)));
}

TEST_CASE("example 5.7 characters multiply to the trivial character") {
  AbelianGroup g{2, {}};
  Character chi1{{Scalar::q_pow(1, 2), Scalar::q_pow(1, -2)}};
  Character chi2{{Scalar::q_pow(1, -2), Scalar::q_pow(1, 2)}};
  CHECK(char_is_trivial(g, char_product(g, chi1, chi2)));
}
