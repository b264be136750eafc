#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace halg {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// "3/2", "-1/4"; integers print without the denominator.
std::string rat_to_string(const Rational& r);
Rational rat_from_string(const std::string& s);

}  // namespace halg
