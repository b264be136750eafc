#include "halg/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "halg/error.hpp"

namespace halg {

std::string rat_to_string(const Rational& r) {
  Integer num = numerator(r);
  Integer den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rat_from_string(const std::string& s) {
  require(!s.empty(), "rational: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    require(den != 0, "rational: zero denominator");
    return Rational(num) / Rational(den);
  } catch (const std::exception& e) {
    fail("rational: cannot parse '" + s + "'");
  }
}

namespace {

using Poly = std::vector<Rational>;  // dense, low degree first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division, remainder must vanish.
Poly div_exact(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); i++) a[shift + i] -= c * b[i];
    trim(a);
  }
  require(a.empty(), "cyclotomic: non-exact polynomial division");
  return q;
}

}  // namespace

struct CycloElem::Field {
  int n = 1;
  int deg = 1;
  Poly phi;                       // Phi_n, monic
  std::vector<Poly> pow_red;      // x^t mod Phi_n for t in [0, 2*deg-2]
  std::vector<std::vector<Rational>> zeta_pow;  // zeta^k reduced, k in [0, n)
};

int CycloElem::euler_phi(int n) {
  require(n >= 1, "euler_phi: conductor must be positive");
  int r = n;
  for (int p = 2; p * p <= n; p++) {
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

const std::vector<Rational>& CycloElem::cyclotomic_poly(int n) {
  static std::map<int, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up so the
  // recursion never re-enters the lock.
  std::function<const Poly&(int)> get = [&](int m) -> const Poly& {
    auto jt = cache.find(m);
    if (jt != cache.end()) return jt->second;
    Poly num(m + 1, Rational(0));
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; d++) {
      if (m % d == 0) num = div_exact(std::move(num), get(d));
    }
    return cache.emplace(m, std::move(num)).first->second;
  };
  return get(n);
}

const CycloElem::Field* CycloElem::field(int conductor) {
  require(conductor >= 1, "CycloElem: conductor must be >= 1");
  static std::map<int, Field> fields;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = fields.find(conductor);
  if (it != fields.end()) return &it->second;

  Field f;
  f.n = conductor;
  f.phi = cyclotomic_poly(conductor);
  f.deg = int(f.phi.size()) - 1;
  // Reduction table: x^t mod Phi for all powers a product of two residues
  // can reach.
  f.pow_red.resize(2 * f.deg - 1 > 0 ? 2 * f.deg - 1 : 1);
  for (int t = 0; t < int(f.pow_red.size()); t++) {
    if (t < f.deg) {
      Poly p(f.deg, Rational(0));
      p[t] = 1;
      f.pow_red[t] = std::move(p);
    } else {
      // x^t = x * x^{t-1}, then reduce the top coefficient.
      Poly p = f.pow_red[t - 1];
      p.insert(p.begin(), Rational(0));
      if (int(p.size()) > f.deg) {
        Rational top = p.back();
        p.pop_back();
        for (int i = 0; i < f.deg; i++) p[i] -= top * f.phi[i];
      }
      f.pow_red[t] = std::move(p);
    }
  }
  f.zeta_pow.resize(conductor);
  {
    Poly p(f.deg, Rational(0));
    p[0] = 1;
    for (int k = 0; k < conductor; k++) {
      f.zeta_pow[k] = p;
      // multiply by x and reduce
      p.insert(p.begin(), Rational(0));
      if (int(p.size()) > f.deg) {
        Rational top = p.back();
        p.pop_back();
        for (int i = 0; i < f.deg; i++) p[i] -= top * f.phi[i];
      }
    }
  }
  return &fields.emplace(conductor, std::move(f)).first->second;
}

CycloElem::CycloElem() : f_(field(1)), c_(1, Rational(0)) {}

CycloElem::CycloElem(const Field* f, std::vector<Rational> c) : f_(f), c_(std::move(c)) {
  c_.resize(f_->deg, Rational(0));
}

int CycloElem::conductor() const { return f_->n; }

CycloElem CycloElem::zero(int conductor) {
  const Field* f = field(conductor);
  return CycloElem(f, std::vector<Rational>(f->deg, Rational(0)));
}

CycloElem CycloElem::one(int conductor) { return from_rational(conductor, Rational(1)); }

CycloElem CycloElem::from_rational(int conductor, const Rational& r) {
  const Field* f = field(conductor);
  std::vector<Rational> c(f->deg, Rational(0));
  c[0] = r;
  return CycloElem(f, std::move(c));
}

CycloElem CycloElem::from_coeffs(int conductor, std::vector<Rational> coeffs) {
  const Field* f = field(conductor);
  require(int(coeffs.size()) == f->deg, "CycloElem: coefficient vector has wrong length");
  return CycloElem(f, std::move(coeffs));
}

CycloElem CycloElem::zeta(int conductor, long power) {
  const Field* f = field(conductor);
  long k = power % conductor;
  if (k < 0) k += conductor;
  return CycloElem(f, f->zeta_pow[size_t(k)]);
}

bool CycloElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool CycloElem::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); i++)
    if (c_[i] != 0) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (size_t i = 1; i < c_.size(); i++)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycloElem::rational_part() const {
  require(is_rational(), "CycloElem: not a rational number");
  return c_[0];
}

CycloElem CycloElem::operator-() const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); i++) c[i] = -c_[i];
  return CycloElem(f_, std::move(c));
}

namespace {
// Rational values live in every Q(zeta_N); align conductors by promoting the
// rational side. Genuinely cyclotomic values of different conductors clash.
void align(CycloElem& a, CycloElem& b) {
  if (a.conductor() == b.conductor()) return;
  if (a.is_rational())
    a = CycloElem::from_rational(b.conductor(), a.rational_part());
  else if (b.is_rational())
    b = CycloElem::from_rational(a.conductor(), b.rational_part());
  else
    fail("CycloElem: conductor mismatch");
}
}  // namespace

CycloElem operator+(const CycloElem& a, const CycloElem& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.f_ != b.f_) {
    CycloElem x = a, y = b;
    align(x, y);
    return x + y;
  }
  std::vector<Rational> c(a.c_.size());
  for (size_t i = 0; i < c.size(); i++) c[i] = a.c_[i] + b.c_[i];
  return CycloElem(a.f_, std::move(c));
}

CycloElem operator-(const CycloElem& a, const CycloElem& b) { return a + (-b); }

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.f_ != b.f_) {
    CycloElem x = a, y = b;
    align(x, y);
    return x * y;
  }
  const auto* f = a.f_;
  std::vector<Rational> c(f->deg, Rational(0));
  for (size_t i = 0; i < a.c_.size(); i++) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); j++) {
      if (b.c_[j] == 0) continue;
      Rational p = a.c_[i] * b.c_[j];
      const Poly& red = f->pow_red[i + j];
      for (int k = 0; k < f->deg; k++) {
        if (red[k] != 0) c[size_t(k)] += p * red[k];
      }
    }
  }
  return CycloElem(a.f_, std::move(c));
}

CycloElem CycloElem::inverse() const {
  require(!is_zero(), "CycloElem: inverse of zero");
  // Extended Euclid in Q[x]: u*this + v*Phi = gcd = const.
  Poly r0 = f_->phi;
  Poly r1 = c_;
  trim(r1);
  Poly s0(1, Rational(0));  // coefficient of `this` for r0
  Poly s1(1, Rational(1));  // coefficient of `this` for r1
  while (true) {
    require(!r1.empty(), "CycloElem: inverse failed (element not a unit?)");
    if (r1.size() == 1) break;
    // r0 = q*r1 + r2
    Poly r2 = r0;
    Poly q(r2.size() >= r1.size() ? r2.size() - r1.size() + 1 : 1, Rational(0));
    while (r2.size() >= r1.size() && !r2.empty()) {
      Rational cq = r2.back() / r1.back();
      size_t shift = r2.size() - r1.size();
      q[shift] = cq;
      for (size_t i = 0; i < r1.size(); i++) r2[shift + i] -= cq * r1[i];
      trim(r2);
    }
    // s2 = s0 - q*s1
    Poly s2 = s0;
    s2.resize(std::max(s2.size(), q.size() + s1.size()), Rational(0));
    for (size_t i = 0; i < q.size(); i++) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); j++) s2[i + j] -= q[i] * s1[j];
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rational g = r1[0];
  std::vector<Rational> inv(size_t(f_->deg), Rational(0));
  for (size_t i = 0; i < s1.size() && i < inv.size(); i++) inv[i] = s1[i] / g;
  return CycloElem(f_, std::move(inv));
}

CycloElem CycloElem::pow(long e) const {
  if (e == 0) return one(conductor());
  CycloElem base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  CycloElem acc = one(conductor());
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

bool CycloElem::is_root_of_unity() const {
  if (is_zero()) return false;
  long l = std::lcm(2L, long(conductor()));
  return pow(l).is_one();
}

long CycloElem::root_of_unity_order() const {
  if (is_zero()) return 0;
  long l = std::lcm(2L, long(conductor()));
  if (!pow(l).is_one()) return 0;
  for (long d = 1; d <= l; d++) {
    if (l % d == 0 && pow(d).is_one()) return d;
  }
  return 0;
}

bool operator==(const CycloElem& a, const CycloElem& b) {
  if (a.f_ == b.f_) return a.c_ == b.c_;
  return a.is_rational() && b.is_rational() && a.c_[0] == b.c_[0];
}

std::string CycloElem::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree() - 1; i >= 0; i--) {
    if (c_[size_t(i)] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string coef = rat_to_string(c_[size_t(i)]);
    if (i == 0) {
      out += coef;
    } else {
      if (coef != "1") out += coef + "*";
      out += "z";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::vector<CycloElem> CycloElem::roots_of_unity(int conductor) {
  // mu_{lcm(2,N)} = {±zeta^j}; duplicates collapse for even N.
  std::vector<CycloElem> uniq;
  auto push = [&](CycloElem w) {
    for (auto& u : uniq)
      if (u == w) return;
    uniq.push_back(std::move(w));
  };
  for (long k = 0; k < conductor; k++) {
    push(zeta(conductor, k));
    push(-zeta(conductor, k));
  }
  return uniq;
}

bool cyclo_less(const CycloElem& a, const CycloElem& b) {
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (size_t i = 0; i < x.size(); i++) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return false;
}

}  // namespace halg
