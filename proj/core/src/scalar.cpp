#include "halg/scalar.hpp"

#include <algorithm>

#include "halg/error.hpp"

namespace halg {

namespace {

using QPoly = std::vector<CycloElem>;  // dense in q, low degree first

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b, int conductor) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, CycloElem::zero(conductor));
  for (size_t i = 0; i < a.size(); i++) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); j++) {
      if (b[j].is_zero()) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  trim(c);
  return c;
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly c = a.size() >= b.size() ? a : b;
  const QPoly& s = a.size() >= b.size() ? b : a;
  for (size_t i = 0; i < s.size(); i++) c[i] += s[i];
  trim(c);
  return c;
}

QPoly neg(QPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

// Remainder of a by b (b nonzero).
QPoly rem(QPoly a, const QPoly& b) {
  trim(a);
  CycloElem lead_inv = b.back().inverse();
  while (a.size() >= b.size() && !a.empty()) {
    CycloElem c = a.back() * lead_inv;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); i++) a[shift + i] -= c * b[i];
    trim(a);
  }
  return a;
}

QPoly div_exact(QPoly a, const QPoly& b, int conductor) {
  trim(a);
  if (a.empty()) return {};
  CycloElem lead_inv = b.back().inverse();
  QPoly q(a.size() - b.size() + 1, CycloElem::zero(conductor));
  while (a.size() >= b.size() && !a.empty()) {
    CycloElem c = a.back() * lead_inv;
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); i++) a[shift + i] -= c * b[i];
    trim(a);
  }
  require(a.empty(), "Scalar: non-exact polynomial division");
  return q;
}

QPoly make_monic(QPoly p) {
  trim(p);
  if (p.empty() || p.back().is_one()) return p;
  CycloElem inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

// Monic gcd by the Euclidean algorithm over Q(zeta_N).
QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

}  // namespace

// Internal invariant: den_ empty means denominator 1; a stored denominator is
// monic of degree >= 1 and coprime to the numerator.
Scalar::Scalar() : conductor_(1), num_(), den_() {}

Scalar::Scalar(int conductor, std::vector<CycloElem> num, std::vector<CycloElem> den)
    : conductor_(conductor), num_(std::move(num)), den_(std::move(den)) {
  if (den_.size() == 1 && den_[0].is_one()) den_.clear();
}

int Scalar::conductor() const { return conductor_; }

std::vector<CycloElem> Scalar::den() const {
  if (den_.empty()) return {CycloElem::one(conductor_)};
  return den_;
}

Scalar Scalar::zero(int conductor) { return Scalar(conductor, {}, {}); }

Scalar Scalar::one(int conductor) {
  return Scalar(conductor, {CycloElem::one(conductor)}, {});
}

Scalar Scalar::from_int(int conductor, long v) {
  return from_rational(conductor, Rational(v));
}

Scalar Scalar::from_rational(int conductor, const Rational& r) {
  return from_cyclo(CycloElem::from_rational(conductor, r));
}

Scalar Scalar::from_cyclo(const CycloElem& c) {
  int n = c.conductor();
  if (c.is_zero()) return zero(n);
  return Scalar(n, {c}, {});
}

Scalar Scalar::zeta(int conductor, long power) {
  return from_cyclo(CycloElem::zeta(conductor, power));
}

Scalar Scalar::q(int conductor) { return q_pow(conductor, 1); }

Scalar Scalar::q_pow(int conductor, long e) {
  if (e >= 0) {
    QPoly num(size_t(e) + 1, CycloElem::zero(conductor));
    num.back() = CycloElem::one(conductor);
    return Scalar(conductor, std::move(num), {});
  }
  QPoly den(size_t(-e) + 1, CycloElem::zero(conductor));
  den.back() = CycloElem::one(conductor);
  return Scalar(conductor, {CycloElem::one(conductor)}, std::move(den));
}

Scalar Scalar::normalize(int conductor, std::vector<CycloElem> num,
                         std::vector<CycloElem> den) {
  trim(num);
  trim(den);
  require(!den.empty(), "Scalar: zero denominator");
  if (num.empty()) return zero(conductor);
  QPoly g = gcd(num, den);
  if (g.size() > 1) {
    num = div_exact(std::move(num), g, conductor);
    den = div_exact(std::move(den), g, conductor);
  }
  CycloElem lead_inv = den.back().inverse();
  for (auto& c : den) c *= lead_inv;
  for (auto& c : num) c *= lead_inv;
  return Scalar(conductor, std::move(num), std::move(den));
}

bool Scalar::is_one() const {
  return num_.size() == 1 && den_.empty() && num_[0].is_one();
}

bool Scalar::is_constant() const { return num_.size() <= 1 && den_.empty(); }

CycloElem Scalar::constant_value() const {
  require(is_constant(), "Scalar: not a constant");
  if (is_zero()) return CycloElem::zero(conductor_);
  return num_[0];  // den_ is monic of degree 0, hence 1
}

Scalar Scalar::operator-() const {
  if (is_zero()) return *this;
  return Scalar(conductor_, neg(num_), den_);
}

namespace {
bool all_rational(const QPoly& p) {
  for (const auto& c : p)
    if (!c.is_rational()) return false;
  return true;
}
}  // namespace

bool Scalar::is_rational_function_over_q() const {
  return all_rational(num_) && all_rational(den_);
}

Scalar Scalar::promoted(int conductor) const {
  if (conductor_ == conductor) return *this;
  require(is_rational_function_over_q(), "Scalar: conductor mismatch");
  auto lift = [&](const QPoly& p) {
    QPoly out;
    out.reserve(p.size());
    for (const auto& c : p)
      out.push_back(CycloElem::from_rational(conductor, c.rational_part()));
    return out;
  };
  return Scalar(conductor, lift(num_), lift(den_));
}

namespace {
// Rational constants/functions embed in every session field; promote them to
// the other operand's conductor. Anything else mixing conductors is an error.
void align(Scalar& a, Scalar& b) {
  if (a.conductor() == b.conductor()) return;
  if (a.is_rational_function_over_q())
    a = a.promoted(b.conductor());
  else
    b = b.promoted(a.conductor());
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.conductor_ != b.conductor_) {
    Scalar x = a, y = b;
    align(x, y);
    return x + y;
  }
  int n = a.conductor_;
  if (a.is_constant() && b.is_constant()) {
    return Scalar::from_cyclo(a.num_[0] + b.num_[0]);
  }
  if (a.den_.empty() && b.den_.empty()) {
    QPoly num = add(a.num_, b.num_);
    if (num.empty()) return Scalar::zero(n);
    return Scalar(n, std::move(num), {});
  }
  QPoly aden = a.den_.empty() ? QPoly{CycloElem::one(n)} : a.den_;
  QPoly bden = b.den_.empty() ? QPoly{CycloElem::one(n)} : b.den_;
  QPoly num = add(mul(a.num_, bden, n), mul(b.num_, aden, n));
  QPoly den = mul(aden, bden, n);
  return Scalar::normalize(n, std::move(num), std::move(den));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.conductor_ != b.conductor_) {
    Scalar x = a, y = b;
    align(x, y);
    return x * y;
  }
  int n = a.conductor_;
  if (a.is_constant() && b.is_constant()) {
    return Scalar::from_cyclo(a.num_[0] * b.num_[0]);
  }
  if (a.den_.empty() && b.den_.empty()) {
    return Scalar(n, mul(a.num_, b.num_, n), {});
  }
  QPoly aden = a.den_.empty() ? QPoly{CycloElem::one(n)} : a.den_;
  QPoly bden = b.den_.empty() ? QPoly{CycloElem::one(n)} : b.den_;
  return Scalar::normalize(n, mul(a.num_, b.num_, n), mul(aden, bden, n));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::inverse() const {
  require(!is_zero(), "Scalar: inverse of zero");
  QPoly den = den_.empty() ? QPoly{CycloElem::one(conductor_)} : den_;
  return normalize(conductor_, std::move(den), num_);
}

Scalar Scalar::pow_int(long e) const {
  if (e == 0) return one(conductor_);
  require(!is_zero() || e > 0, "Scalar: negative power of zero");
  if (is_zero()) return *this;
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  Scalar acc = one(conductor_);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

bool Scalar::is_root_of_unity() const {
  require(!is_zero(), "Scalar: is_root_of_unity on zero");
  if (!is_constant()) return false;
  return constant_value().is_root_of_unity();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.conductor_ != b.conductor_) {
    if (!a.is_rational_function_over_q() || !b.is_rational_function_over_q()) return false;
    return a.promoted(1) == b.promoted(1);
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}


std::string Scalar::str() const {
  if (is_zero()) return "0";
  auto poly_str = [](const QPoly& p) {
    std::string out;
    for (int i = int(p.size()) - 1; i >= 0; i--) {
      if (p[size_t(i)].is_zero()) continue;
      if (!out.empty()) out += " + ";
      std::string c = p[size_t(i)].str();
      if (i == 0) {
        out += c;
      } else {
        if (c != "1") out += "(" + c + ")*";
        out += "q";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? std::string("0") : out;
  };
  std::string n = poly_str(num_);
  if (den_.empty()) return n;
  return "(" + n + ")/(" + poly_str(den_) + ")";
}

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.is_zero() != b.is_zero()) return a.is_zero();
  if (a.is_zero()) return false;
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
  auto cmp_poly = [](const std::vector<CycloElem>& x, const std::vector<CycloElem>& y) {
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    for (size_t i = 0; i < x.size(); i++) {
      if (x[i] != y[i]) return cyclo_less(x[i], y[i]) ? -1 : 1;
    }
    return 0;
  };
  int c = cmp_poly(a.num(), b.num());
  if (c != 0) return c < 0;
  return cmp_poly(a.den(), b.den()) < 0;
}

}  // namespace halg
