#include "halg/algebra.hpp"

#include <algorithm>
#include <map>

#include "halg/error.hpp"

namespace halg {

SVec sv_normalize(SVec v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SVec out;
  for (auto& [i, c] : v) {
    if (c.is_zero()) continue;
    if (!out.empty() && out.back().first == i)
      out.back().second += c;
    else
      out.emplace_back(i, std::move(c));
  }
  SVec clean;
  clean.reserve(out.size());
  for (auto& [i, c] : out)
    if (!c.is_zero()) clean.emplace_back(i, std::move(c));
  return clean;
}

SVec sv_from_dense(const Vec& v) {
  SVec out;
  for (size_t i = 0; i < v.size(); i++)
    if (!v[i].is_zero()) out.emplace_back(int(i), v[i]);
  return out;
}

Vec sv_to_dense(const SVec& v, int dim) {
  Vec out(size_t(dim));
  for (const auto& [i, c] : v) out[size_t(i)] = c;
  return out;
}

void sv_add_scaled(SVec& acc, const Scalar& c, const SVec& v) {
  if (c.is_zero() || v.empty()) return;
  SVec merged;
  merged.reserve(acc.size() + v.size());
  size_t i = 0, j = 0;
  while (i < acc.size() || j < v.size()) {
    if (j >= v.size() || (i < acc.size() && acc[i].first < v[j].first)) {
      merged.push_back(std::move(acc[i++]));
    } else if (i >= acc.size() || v[j].first < acc[i].first) {
      merged.emplace_back(v[j].first, c * v[j].second);
      j++;
    } else {
      Scalar s = acc[i].second + c * v[j].second;
      if (!s.is_zero()) merged.emplace_back(acc[i].first, std::move(s));
      i++;
      j++;
    }
  }
  SVec clean;
  clean.reserve(merged.size());
  for (auto& [k, s] : merged)
    if (!s.is_zero()) clean.emplace_back(k, std::move(s));
  acc = std::move(clean);
}

SVec sv_scale(const Scalar& c, const SVec& v) {
  if (c.is_zero()) return {};
  SVec out;
  out.reserve(v.size());
  for (const auto& [i, s] : v) {
    Scalar p = c * s;
    if (!p.is_zero()) out.emplace_back(i, std::move(p));
  }
  return out;
}

bool sv_equal(const SVec& a, const SVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); i++)
    if (a[i].first != b[i].first || !(a[i].second == b[i].second)) return false;
  return true;
}

SVec AlgebraData::mul(const SVec& a, const SVec& b) const {
  SVec acc;
  for (const auto& [i, ci] : a) {
    for (const auto& [j, cj] : b) {
      sv_add_scaled(acc, ci * cj, basis_prod(i, j));
    }
  }
  return acc;
}

Vec AlgebraData::mul_dense(const Vec& a, const Vec& b) const {
  Vec out(size_t(dim));
  for (size_t i = 0; i < a.size(); i++) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); j++) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      for (const auto& [k, s] : basis_prod(int(i), int(j))) out[size_t(k)] += c * s;
    }
  }
  return out;
}

Mat AlgebraData::left_mult_matrix(const Vec& x) const {
  Mat m = mat_zero(dim, dim);
  for (size_t i = 0; i < x.size(); i++) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; j++) {
      for (const auto& [k, s] : basis_prod(int(i), j)) m[size_t(k)][size_t(j)] += x[i] * s;
    }
  }
  return m;
}

Mat AlgebraData::right_mult_matrix(const Vec& x) const {
  Mat m = mat_zero(dim, dim);
  for (size_t j = 0; j < x.size(); j++) {
    if (x[j].is_zero()) continue;
    for (int i = 0; i < dim; i++) {
      for (const auto& [k, s] : basis_prod(i, int(j))) m[size_t(k)][size_t(i)] += x[j] * s;
    }
  }
  return m;
}

Scalar CoalgebraData::counit_of(const Vec& v) const {
  Scalar s;
  for (size_t i = 0; i < v.size(); i++) {
    if (!v[i].is_zero()) s += v[i] * counit[i];
  }
  return s;
}

std::vector<TriTerm> comult2(const CoalgebraData& c, int i) {
  std::vector<TriTerm> out;
  for (const auto& t : c.comult[size_t(i)]) {
    for (const auto& u : c.comult[size_t(t.left)]) {
      Scalar coeff = t.c * u.c;
      if (!coeff.is_zero()) out.push_back({u.left, u.right, t.right, std::move(coeff)});
    }
  }
  return out;
}

Vec HopfData::antipode_of(const Vec& v) const {
  require(antipode.has_value(), "HopfData: no antipode");
  return mat_vec(*antipode, v);
}

namespace {

// Accumulator over pairs (a,b) with sparse cleanup, for coproduct sweeps.
struct PairAccum {
  std::map<std::pair<int, int>, Scalar> m;
  void add(int a, int b, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.try_emplace({a, b}, c);
    if (!fresh) it->second += c;
  }
  void sub(int a, int b, const Scalar& c) { add(a, b, -c); }
  bool all_zero() const {
    for (const auto& [k, v] : m)
      if (!v.is_zero()) return false;
    return true;
  }
  std::vector<std::pair<std::pair<int, int>, Scalar>> nonzero() const {
    std::vector<std::pair<std::pair<int, int>, Scalar>> out;
    for (const auto& [k, v] : m)
      if (!v.is_zero()) out.push_back({k, v});
    return out;
  }
};

}  // namespace

Report verify_algebra(const AlgebraData& a) {
  Report rep;
  rep.subject = "algebra";
  int n = a.dim;
  require(int(a.unit.size()) == n && int(a.prod.size()) == size_t(n) * size_t(n),
          "verify_algebra: malformed tensors");
  // unit laws
  SVec unit = sv_from_dense(a.unit);
  for (int i = 0; i < n; i++) {
    SVec ei{{i, Scalar::one(a.conductor)}};
    if (!sv_equal(a.mul(unit, ei), ei)) rep.add_failure("left-unit", {i});
    if (!sv_equal(a.mul(ei, unit), ei)) rep.add_failure("right-unit", {i});
  }
  // associativity on all basis triples
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) {
      const SVec& xij = a.basis_prod(i, j);
      for (int k = 0; k < n; k++) {
        SVec lhs;
        for (const auto& [t, c] : xij) sv_add_scaled(lhs, c, a.basis_prod(t, k));
        SVec rhs;
        for (const auto& [s, c] : a.basis_prod(j, k)) sv_add_scaled(rhs, c, a.basis_prod(i, s));
        if (!sv_equal(lhs, rhs)) rep.add_failure("associativity", {i, j, k});
      }
    }
  }
  return rep;
}

Report verify_coalgebra(const CoalgebraData& c) {
  Report rep;
  rep.subject = "coalgebra";
  int n = c.dim;
  require(int(c.comult.size()) == n && int(c.counit.size()) == n,
          "verify_coalgebra: malformed tensors");
  for (int i = 0; i < n; i++) {
    // coassociativity
    PairAccum dif;  // over (a, (b,c)) flattened as (a, b*n+c)
    for (const auto& t : c.comult[size_t(i)]) {
      for (const auto& u : c.comult[size_t(t.left)])
        dif.add(u.left, u.right * n + t.right, t.c * u.c);
      for (const auto& u : c.comult[size_t(t.right)])
        dif.sub(t.left, u.left * n + u.right, t.c * u.c);
    }
    if (!dif.all_zero()) rep.add_failure("coassociativity", {i});
    // counit laws
    Vec left(size_t(n)), right(size_t(n));
    for (const auto& t : c.comult[size_t(i)]) {
      left[size_t(t.right)] += c.counit[size_t(t.left)] * t.c;
      right[size_t(t.left)] += c.counit[size_t(t.right)] * t.c;
    }
    for (int j = 0; j < n; j++) {
      Scalar expect = (j == i) ? Scalar::one(c.conductor) : Scalar();
      if (!(left[size_t(j)] == expect)) rep.add_failure("left-counit", {i, j});
      if (!(right[size_t(j)] == expect)) rep.add_failure("right-counit", {i, j});
    }
  }
  return rep;
}

Report verify_bialgebra(const HopfData& h) {
  Report rep;
  rep.subject = "bialgebra";
  rep.merge(verify_algebra(h.alg));
  rep.merge(verify_coalgebra(h.coa));
  int n = h.dim();
  // Delta(1) = 1 (x) 1 and eps(1) = 1
  {
    PairAccum dif;
    for (size_t i = 0; i < h.alg.unit.size(); i++) {
      if (h.alg.unit[i].is_zero()) continue;
      for (const auto& t : h.coa.comult[i]) dif.add(t.left, t.right, h.alg.unit[i] * t.c);
    }
    for (size_t i = 0; i < h.alg.unit.size(); i++)
      for (size_t j = 0; j < h.alg.unit.size(); j++)
        dif.sub(int(i), int(j), h.alg.unit[i] * h.alg.unit[j]);
    if (!dif.all_zero()) rep.add_failure("comult-unit");
    if (!(h.coa.counit_of(h.alg.unit) == Scalar::one(h.conductor())))
      rep.add_failure("counit-unit");
  }
  // Delta and eps multiplicative on all basis pairs
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) {
      const SVec& pij = h.alg.basis_prod(i, j);
      PairAccum dif;
      for (const auto& [k, c] : pij)
        for (const auto& t : h.coa.comult[size_t(k)]) dif.add(t.left, t.right, c * t.c);
      for (const auto& ti : h.coa.comult[size_t(i)]) {
        for (const auto& tj : h.coa.comult[size_t(j)]) {
          Scalar c = ti.c * tj.c;
          for (const auto& [a, ca] : h.alg.basis_prod(ti.left, tj.left)) {
            for (const auto& [b, cb] : h.alg.basis_prod(ti.right, tj.right)) {
              dif.sub(a, b, c * ca * cb);
            }
          }
        }
      }
      if (!dif.all_zero()) rep.add_failure("comult-multiplicative", {i, j});
      Scalar eps_prod;
      for (const auto& [k, c] : pij) eps_prod += c * h.coa.counit[size_t(k)];
      if (!(eps_prod == h.coa.counit[size_t(i)] * h.coa.counit[size_t(j)]))
        rep.add_failure("counit-multiplicative", {i, j});
    }
  }
  return rep;
}

Report verify_hopf(const HopfData& h) {
  Report rep = verify_bialgebra(h);
  rep.subject = "hopf";
  require(h.antipode.has_value(), "verify_hopf: antipode missing");
  int n = h.dim();
  for (int i = 0; i < n; i++) {
    Vec lhs(size_t(n)), rhs(size_t(n));
    for (const auto& t : h.coa.comult[size_t(i)]) {
      // S(x_(1)) x_(2)
      for (int k = 0; k < n; k++) {
        const Scalar& s = (*h.antipode)[size_t(k)][size_t(t.left)];
        if (s.is_zero()) continue;
        for (const auto& [m, cm] : h.alg.basis_prod(k, t.right)) lhs[size_t(m)] += t.c * s * cm;
      }
      // x_(1) S(x_(2))
      for (int k = 0; k < n; k++) {
        const Scalar& s = (*h.antipode)[size_t(k)][size_t(t.right)];
        if (s.is_zero()) continue;
        for (const auto& [m, cm] : h.alg.basis_prod(t.left, k)) rhs[size_t(m)] += t.c * s * cm;
      }
    }
    Vec expect = vec_scale(h.coa.counit[size_t(i)], h.alg.unit);
    if (!(lhs == expect)) rep.add_failure("antipode-left", {i});
    if (!(rhs == expect)) rep.add_failure("antipode-right", {i});
  }
  return rep;
}

AlgebraData dual_algebra(const CoalgebraData& c) {
  AlgebraData d;
  d.dim = c.dim;
  d.conductor = c.conductor;
  d.unit = c.counit;
  d.prod.assign(size_t(c.dim) * size_t(c.dim), {});
  for (int k = 0; k < c.dim; k++) {
    for (const auto& t : c.comult[size_t(k)]) {
      d.basis_prod(t.left, t.right).emplace_back(k, t.c);
    }
  }
  for (auto& p : d.prod) p = sv_normalize(std::move(p));
  return d;
}

HopfData dual_hopf(const HopfData& h) {
  require(h.antipode.has_value(), "dual_hopf: antipode required");
  HopfData d;
  d.alg = dual_algebra(h.coa);
  d.coa.dim = h.dim();
  d.coa.conductor = h.conductor();
  d.coa.comult.assign(size_t(h.dim()), {});
  for (int i = 0; i < h.dim(); i++) {
    for (int j = 0; j < h.dim(); j++) {
      for (const auto& [k, c] : h.alg.basis_prod(i, j)) {
        d.coa.comult[size_t(k)].push_back({i, j, c});
      }
    }
  }
  d.coa.counit = h.alg.unit;
  d.antipode = mat_transpose(*h.antipode);
  return d;
}

AlgebraData op_variant(const AlgebraData& a) {
  AlgebraData o = a;
  for (int i = 0; i < a.dim; i++)
    for (int j = 0; j < a.dim; j++) o.basis_prod(i, j) = a.basis_prod(j, i);
  return o;
}

CoalgebraData cop_variant(const CoalgebraData& c) {
  CoalgebraData o = c;
  for (auto& terms : o.comult)
    for (auto& t : terms) std::swap(t.left, t.right);
  return o;
}

HopfData cop_hopf(const HopfData& h) {
  HopfData o = h;
  o.coa = cop_variant(h.coa);
  if (h.antipode) {
    auto inv = mat_inverse(*h.antipode);
    require(inv.has_value(), "cop_hopf: antipode not invertible");
    o.antipode = std::move(*inv);
  }
  return o;
}

HopfData dual_cop_hopf(const HopfData& h) { return cop_hopf(dual_hopf(h)); }

// ---------------------------------------------------------------------------
// Algebra characters.

namespace {

using SPoly = std::vector<Scalar>;  // dense polynomial over the session field

void spoly_trim(SPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

SPoly spoly_rem(SPoly a, const SPoly& b) {
  spoly_trim(a);
  Scalar lead_inv = b.back().inverse();
  while (a.size() >= b.size() && !a.empty()) {
    Scalar c = a.back() * lead_inv;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); i++) a[shift + i] -= c * b[i];
    spoly_trim(a);
  }
  return a;
}

SPoly spoly_gcd(SPoly a, SPoly b) {
  spoly_trim(a);
  spoly_trim(b);
  while (!b.empty()) {
    SPoly r = spoly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

Scalar spoly_eval(const SPoly& p, const Scalar& x) {
  Scalar acc;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Minimal polynomial of a square matrix by Krylov iteration on the flattened
// powers.
SPoly min_poly(const Mat& t, int conductor) {
  int n = mat_rows(t);
  auto flatten = [&](const Mat& m) {
    Vec v;
    v.reserve(size_t(n) * size_t(n));
    for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
    return v;
  };
  std::vector<Vec> powers;
  Mat cur = mat_identity(n, conductor);
  for (int d = 0; d <= n; d++) {
    powers.push_back(flatten(cur));
    // dependence test: solve [p0 ... p_{d-1}] x = p_d
    if (d > 0) {
      Mat cols = mat_zero(n * n, d);
      for (int j = 0; j < d; j++)
        for (int i = 0; i < n * n; i++) cols[size_t(i)][size_t(j)] = powers[size_t(j)][size_t(i)];
      auto sol = solve(cols, powers.back());
      if (sol) {
        SPoly mu(size_t(d) + 1);
        for (int j = 0; j < d; j++) mu[size_t(j)] = -(*sol)[size_t(j)];
        mu[size_t(d)] = Scalar::one(conductor);
        return mu;
      }
    }
    cur = mat_mul(cur, t);
  }
  fail("min_poly: no dependence found (internal)");
}

// Eigenvalues of t lying in the detectable classes: roots of unity of the
// session field (complete, via gcd with x^L - 1), zero, and exact matrix
// entries.
std::vector<Scalar> detectable_eigenvalues(const Mat& t, int conductor) {
  SPoly mu = min_poly(t, conductor);
  std::vector<Scalar> found;
  auto try_root = [&](const Scalar& cand) {
    if (!spoly_eval(mu, cand).is_zero()) return;
    for (const auto& f : found)
      if (f == cand) return;
    found.push_back(cand);
  };
  try_root(Scalar::zero(conductor));
  for (const auto& w : CycloElem::roots_of_unity(conductor)) try_root(Scalar::from_cyclo(w));
  for (const auto& row : t)
    for (const auto& x : row) {
      if (!x.is_zero()) {
        try_root(x);
        try_root(-x);
      }
    }
  std::sort(found.begin(), found.end(), scalar_less);
  return found;
}

struct CharContext {
  const AlgebraData* b;
  Mat to_quotient;  // composed projection B -> E
  AlgebraData e;    // commutative semisimple quotient
};

// Two-sided ideal closure of the span of `gens`.
Subspace ideal_closure(const AlgebraData& b, std::vector<Vec> gens) {
  Subspace s = Subspace::span_vectors(b.dim, gens);
  std::vector<Vec> work = s.basis_vectors();
  while (!work.empty()) {
    Vec w = std::move(work.back());
    work.pop_back();
    SVec ws = sv_from_dense(w);
    for (int t = 0; t < b.dim; t++) {
      SVec et{{t, Scalar::one(b.conductor)}};
      for (const SVec& prod : {b.mul(et, ws), b.mul(ws, et)}) {
        Vec v = sv_to_dense(prod, b.dim);
        if (!s.contains_vector(v)) {
          s = s.sum(Subspace::span_vectors(b.dim, {v}));
          work.push_back(std::move(v));
        }
      }
    }
  }
  return s;
}

AlgebraData quotient_algebra(const AlgebraData& b, const QuotientSpace& q) {
  AlgebraData d;
  d.dim = mat_rows(q.proj);
  d.conductor = b.conductor;
  d.unit = mat_vec(q.proj, b.unit);
  d.prod.assign(size_t(d.dim) * size_t(d.dim), {});
  for (int i = 0; i < d.dim; i++) {
    Vec ei(size_t(b.dim));
    for (int r = 0; r < b.dim; r++) ei[size_t(r)] = q.incl[size_t(r)][size_t(i)];
    for (int j = 0; j < d.dim; j++) {
      Vec ej(size_t(b.dim));
      for (int r = 0; r < b.dim; r++) ej[size_t(r)] = q.incl[size_t(r)][size_t(j)];
      d.basis_prod(i, j) = sv_from_dense(mat_vec(q.proj, b.mul_dense(ei, ej)));
    }
  }
  return d;
}

}  // namespace

std::vector<Vec> algebra_characters(const AlgebraData& b) {
  int n = b.dim;
  int conductor = b.conductor;

  // 1. kill commutators
  std::vector<Vec> comms;
  for (int i = 0; i < n; i++) {
    for (int j = i + 1; j < n; j++) {
      SVec d = b.basis_prod(i, j);
      sv_add_scaled(d, Scalar::from_int(conductor, -1), b.basis_prod(j, i));
      if (!d.empty()) comms.push_back(sv_to_dense(d, n));
    }
  }
  Subspace comm_ideal = ideal_closure(b, std::move(comms));
  QuotientSpace q1 = make_quotient(comm_ideal, conductor);
  AlgebraData d = quotient_algebra(b, q1);

  // 2. kill the radical (trace form; exact in characteristic zero)
  Mat gram = mat_zero(d.dim, d.dim);
  std::vector<Mat> lmult(size_t(d.dim));
  for (int i = 0; i < d.dim; i++) {
    Vec ei(size_t(d.dim));
    ei[size_t(i)] = Scalar::one(conductor);
    lmult[size_t(i)] = d.left_mult_matrix(ei);
  }
  // gram[i][j] = tr(L_{e_i} L_{e_j}) = tr(L_{e_i e_j})
  for (int i = 0; i < d.dim; i++) {
    for (int j = 0; j < d.dim; j++) {
      Scalar tr;
      for (const auto& [k, c] : d.basis_prod(i, j)) {
        for (int m = 0; m < d.dim; m++) tr += c * lmult[size_t(k)][size_t(m)][size_t(m)];
      }
      gram[size_t(i)][size_t(j)] = tr;
    }
  }
  Subspace rad = Subspace::span_cols(nullspace(gram));
  QuotientSpace q2 = make_quotient(rad, conductor);
  AlgebraData e = quotient_algebra(d, q2);
  Mat to_e = mat_mul(q2.proj, q1.proj);

  // 3. split E into common eigenlines of the commuting multiplications
  std::vector<Mat> blocks{mat_identity(e.dim, conductor)};
  std::vector<Mat> emult(size_t(e.dim));
  for (int i = 0; i < e.dim; i++) {
    Vec ei(size_t(e.dim));
    ei[size_t(i)] = Scalar::one(conductor);
    emult[size_t(i)] = e.left_mult_matrix(ei);
  }
  for (int t = 0; t < e.dim; t++) {
    std::vector<Mat> next;
    for (const Mat& blk : blocks) {
      int bd = mat_cols(blk);
      if (bd <= 1) {
        next.push_back(blk);
        continue;
      }
      auto restricted = solve_mat(blk, mat_mul(emult[size_t(t)], blk));
      require(restricted.has_value(), "algebra_characters: block not invariant (internal)");
      for (const Scalar& lam : detectable_eigenvalues(*restricted, conductor)) {
        Mat shifted = *restricted;
        for (int i = 0; i < bd; i++) shifted[size_t(i)][size_t(i)] -= lam;
        Mat ker = nullspace(shifted);
        if (mat_cols(ker) > 0) next.push_back(mat_mul(blk, ker));
      }
      // Any remaining part of the block has no detectable eigenvalue and
      // therefore carries no character with session-field values.
    }
    blocks = std::move(next);
  }

  // 4. read off characters from the one-dimensional blocks and pull back
  std::vector<Vec> out;
  for (const Mat& blk : blocks) {
    if (mat_cols(blk) != 1) continue;
    Vec v(size_t(e.dim));
    for (int i = 0; i < e.dim; i++) v[size_t(i)] = blk[size_t(i)][0];
    Vec vals(size_t(e.dim));
    bool good = true;
    for (int t = 0; t < e.dim && good; t++) {
      Vec mv = mat_vec(emult[size_t(t)], v);
      // mv = lambda v; recover lambda at a nonzero coordinate
      int idx = -1;
      for (int i = 0; i < e.dim; i++)
        if (!v[size_t(i)].is_zero()) {
          idx = i;
          break;
        }
      Scalar lam = mv[size_t(idx)] / v[size_t(idx)];
      if (!(mat_vec(emult[size_t(t)], v) == vec_scale(lam, v))) good = false;
      vals[size_t(t)] = lam;
    }
    if (!good) continue;
    // character of B: chi(e_i) = chi_E(pi(e_i))
    Vec chi(size_t(n));
    for (int i = 0; i < n; i++) {
      Scalar acc;
      for (int j = 0; j < e.dim; j++) acc += vals[size_t(j)] * to_e[size_t(j)][size_t(i)];
      chi[size_t(i)] = acc;
    }
    // unit normalization and multiplicativity are rechecked exactly
    Scalar unit_val;
    for (int i = 0; i < n; i++) unit_val += chi[size_t(i)] * b.unit[size_t(i)];
    if (unit_val.is_zero()) continue;
    Scalar unit_inv = unit_val.inverse();
    for (auto& c : chi) c *= unit_inv;
    bool mult_ok = true;
    for (int i = 0; i < n && mult_ok; i++) {
      for (int j = 0; j < n && mult_ok; j++) {
        Scalar rhs;
        for (const auto& [k, c] : b.basis_prod(i, j)) rhs += c * chi[size_t(k)];
        if (!(chi[size_t(i)] * chi[size_t(j)] == rhs)) mult_ok = false;
      }
    }
    require(mult_ok, "algebra_characters: extracted functional is not multiplicative (internal)");
    bool dup = false;
    for (const auto& prev : out)
      if (prev == chi) dup = true;
    if (!dup) out.push_back(std::move(chi));
  }
  std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b2) {
    for (size_t i = 0; i < a.size(); i++) {
      if (!(a[i] == b2[i])) return scalar_less(a[i], b2[i]);
    }
    return false;
  });
  return out;
}

std::vector<Vec> grouplikes(const HopfData& h, int dim_cap) {
  require(h.dim() <= dim_cap, "grouplikes: dimension cap exceeded");
  auto out = algebra_characters(dual_algebra(h.coa));
  // defensive re-check of the defining equations
  for (const auto& v : out) {
    PairAccum dif;
    for (size_t i = 0; i < v.size(); i++) {
      if (v[i].is_zero()) continue;
      for (const auto& t : h.coa.comult[i]) dif.add(t.left, t.right, v[i] * t.c);
    }
    for (size_t i = 0; i < v.size(); i++)
      for (size_t j = 0; j < v.size(); j++) dif.sub(int(i), int(j), v[i] * v[j]);
    require(dif.all_zero() && h.coa.counit_of(v).is_one(),
            "grouplikes: extracted element fails the group-like equations (internal)");
  }
  return out;
}

}  // namespace halg
