#include "halg/twist.hpp"

#include <map>

#include "halg/error.hpp"

namespace halg {

Vec TwistedAlgebra::embed_U(const Vec& u) const {
  Vec out(size_t(dim()));
  for (size_t i = 0; i < u.size(); i++) {
    if (u[i].is_zero()) continue;
    for (size_t j = 0; j < A.alg.unit.size(); j++) {
      if (A.alg.unit[j].is_zero()) continue;
      out[size_t(hindex(int(i), int(j)))] = u[i] * A.alg.unit[j];
    }
  }
  return out;
}

Vec TwistedAlgebra::embed_A(const Vec& a) const {
  Vec out(size_t(dim()));
  for (size_t j = 0; j < a.size(); j++) {
    if (a[j].is_zero()) continue;
    for (size_t i = 0; i < U.alg.unit.size(); i++) {
      if (U.alg.unit[i].is_zero()) continue;
      out[size_t(hindex(int(i), int(j)))] = U.alg.unit[i] * a[j];
    }
  }
  return out;
}

Vec TwistedAlgebra::tensor_elem(const Vec& u, const Vec& a) const {
  Vec out(size_t(dim()));
  for (size_t i = 0; i < u.size(); i++) {
    if (u[i].is_zero()) continue;
    for (size_t j = 0; j < a.size(); j++) {
      if (a[j].is_zero()) continue;
      out[size_t(hindex(int(i), int(j)))] = u[i] * a[j];
    }
  }
  return out;
}

Report verify_pairing_axioms(const HopfData& u, const HopfData& a, const Mat& tau) {
  Report rep;
  rep.subject = "pairing";
  int du = u.dim(), da = a.dim();
  require(mat_rows(tau) == du && mat_cols(tau) == da, "pairing: matrix shape mismatch");

  // (A.1) tau(x, a a') = tau(x_(2), a) tau(x_(1), a')
  for (int x = 0; x < du; x++) {
    for (int i = 0; i < da; i++) {
      for (int j = 0; j < da; j++) {
        Scalar lhs;
        for (const auto& [k, c] : a.alg.basis_prod(i, j)) lhs += c * tau[size_t(x)][size_t(k)];
        Scalar rhs;
        for (const auto& t : u.coa.comult[size_t(x)])
          rhs += t.c * tau[size_t(t.right)][size_t(i)] * tau[size_t(t.left)][size_t(j)];
        if (!(lhs == rhs)) rep.add_failure("A1", {x, i, j});
      }
    }
  }
  // (A.2) tau(1, a) = eps(a)
  for (int j = 0; j < da; j++) {
    Scalar lhs;
    for (int i = 0; i < du; i++)
      if (!u.alg.unit[size_t(i)].is_zero()) lhs += u.alg.unit[size_t(i)] * tau[size_t(i)][size_t(j)];
    if (!(lhs == a.coa.counit[size_t(j)])) rep.add_failure("A2", {j});
  }
  // (A.3) tau(x x', a) = tau(x, a_(1)) tau(x', a_(2))
  for (int x = 0; x < du; x++) {
    for (int y = 0; y < du; y++) {
      for (int j = 0; j < da; j++) {
        Scalar lhs;
        for (const auto& [k, c] : u.alg.basis_prod(x, y)) lhs += c * tau[size_t(k)][size_t(j)];
        Scalar rhs;
        for (const auto& t : a.coa.comult[size_t(j)])
          rhs += t.c * tau[size_t(x)][size_t(t.left)] * tau[size_t(y)][size_t(t.right)];
        if (!(lhs == rhs)) rep.add_failure("A3", {x, y, j});
      }
    }
  }
  // (A.4) tau(x, 1) = eps(x)
  for (int i = 0; i < du; i++) {
    Scalar lhs;
    for (int j = 0; j < da; j++)
      if (!a.alg.unit[size_t(j)].is_zero()) lhs += a.alg.unit[size_t(j)] * tau[size_t(i)][size_t(j)];
    if (!(lhs == u.coa.counit[size_t(i)])) rep.add_failure("A4", {i});
  }
  return rep;
}

namespace {

// Convolution product of two pairing matrices: (f*g)(x, a) =
// f(x_(1), a_(1)) g(x_(2), a_(2)).
Mat convolution(const HopfData& u, const HopfData& a, const Mat& f, const Mat& g) {
  int du = u.dim(), da = a.dim();
  Mat out = mat_zero(du, da);
  for (int x = 0; x < du; x++) {
    for (int j = 0; j < da; j++) {
      Scalar acc;
      for (const auto& tu : u.coa.comult[size_t(x)]) {
        for (const auto& ta : a.coa.comult[size_t(j)]) {
          const Scalar& f1 = f[size_t(tu.left)][size_t(ta.left)];
          if (f1.is_zero()) continue;
          const Scalar& g2 = g[size_t(tu.right)][size_t(ta.right)];
          if (g2.is_zero()) continue;
          acc += tu.c * ta.c * f1 * g2;
        }
      }
      out[size_t(x)][size_t(j)] = acc;
    }
  }
  return out;
}

Mat counit_pairing(const HopfData& u, const HopfData& a) {
  Mat out = mat_zero(u.dim(), a.dim());
  for (int i = 0; i < u.dim(); i++)
    for (int j = 0; j < a.dim(); j++)
      out[size_t(i)][size_t(j)] = u.coa.counit[size_t(i)] * a.coa.counit[size_t(j)];
  return out;
}

}  // namespace

Mat pairing_inverse(const HopfData& u, const HopfData& a, const Mat& tau) {
  std::optional<Mat> candidate;
  if (u.antipode) {
    // tau^{-1}(x, b) = tau(S x, b)
    candidate = mat_zero(u.dim(), a.dim());
    for (int i = 0; i < u.dim(); i++)
      for (int j = 0; j < a.dim(); j++) {
        Scalar acc;
        for (int k = 0; k < u.dim(); k++) {
          const Scalar& s = (*u.antipode)[size_t(k)][size_t(i)];
          if (!s.is_zero()) acc += s * tau[size_t(k)][size_t(j)];
        }
        (*candidate)[size_t(i)][size_t(j)] = acc;
      }
  } else if (a.antipode) {
    // tau^{-1}(x, b) = tau(x, T b) with T the antipode of A^{op}
    auto t = mat_inverse(*a.antipode);
    require(t.has_value(), "pairing_inverse: antipode of A not invertible");
    candidate = mat_mul(tau, *t);
  } else {
    fail("pairing_inverse: no antipode available on either side");
  }
  Mat eps = counit_pairing(u, a);
  require(convolution(u, a, tau, *candidate) == eps &&
              convolution(u, a, *candidate, tau) == eps,
          "pairing_inverse: candidate is not a two-sided convolution inverse");
  return std::move(*candidate);
}

Pairing make_pairing(const HopfData& u, const HopfData& a, Mat tau) {
  Report axioms = verify_pairing_axioms(u, a, tau);
  require(axioms.ok(), "make_pairing: axioms fail: " + axioms.summary());
  Mat inv = pairing_inverse(u, a, tau);
  return Pairing{std::move(tau), std::move(inv)};
}

Pairing trivial_pairing(const HopfData& u, const HopfData& a) {
  return Pairing{counit_pairing(u, a), counit_pairing(u, a)};
}

Pairing evaluation_pairing(const HopfData& ustar, const HopfData& a) {
  require(ustar.dim() == a.dim(), "evaluation_pairing: dimension mismatch");
  return make_pairing(ustar, a, mat_identity(a.dim(), a.conductor()));
}

namespace {

// Iterated coproduct legs of one basis element, indexed by (leg1, leg3) for
// fast pairing contraction.
using TripleIndex = std::map<std::pair<int, int>, SVec>;

TripleIndex index_triples(const CoalgebraData& c, int i) {
  TripleIndex out;
  for (const auto& t : comult2(c, i)) {
    SVec& slot = out[{t.a, t.c}];
    slot.emplace_back(t.b, t.coeff);
  }
  for (auto& [k, v] : out) v = sv_normalize(std::move(v));
  return out;
}

struct DenseAccum {
  Vec val;
  std::vector<int> touched;
  std::vector<char> mark;
  explicit DenseAccum(int n) : val(size_t(n)), mark(size_t(n), 0) {}
  void add(int idx, const Scalar& s) {
    if (s.is_zero()) return;
    if (!mark[size_t(idx)]) {
      mark[size_t(idx)] = 1;
      touched.push_back(idx);
      val[size_t(idx)] = s;
    } else {
      val[size_t(idx)] += s;
    }
  }
  SVec take() {
    SVec out;
    std::sort(touched.begin(), touched.end());
    for (int idx : touched) {
      if (!val[size_t(idx)].is_zero()) out.emplace_back(idx, std::move(val[size_t(idx)]));
      val[size_t(idx)] = Scalar();
      mark[size_t(idx)] = 0;
    }
    touched.clear();
    return out;
  }
};

// sigma(u (x) a, u' (x) a') = eps(u) tau(u', a) eps(a'), extended bilinearly
// in the second slot over a dense H vector.
Scalar sigma_on(const TwistedAlgebra& h, int hx, const Vec& y, bool inverse) {
  int ux = h.uindex(hx), ax = h.aindex(hx);
  const Scalar& eu = h.U.coa.counit[size_t(ux)];
  if (eu.is_zero()) return Scalar();
  const Mat& m = inverse ? h.tau.inverse : h.tau.matrix;
  Scalar acc;
  for (size_t k = 0; k < y.size(); k++) {
    if (y[k].is_zero()) continue;
    int uy = h.uindex(int(k)), ay = h.aindex(int(k));
    const Scalar& ea = h.A.coa.counit[size_t(ay)];
    if (ea.is_zero()) continue;
    const Scalar& tv = m[size_t(uy)][size_t(ax)];
    if (tv.is_zero()) continue;
    acc += y[k] * ea * tv;
  }
  return eu * acc;
}

}  // namespace

Scalar twist_sigma(const TwistedAlgebra& h, int hx, int hy) {
  Vec y(size_t(h.dim()));
  y[size_t(hy)] = Scalar::one(h.conductor());
  return sigma_on(h, hx, y, false);
}

Scalar twist_sigma_inv(const TwistedAlgebra& h, int hx, int hy) {
  Vec y(size_t(h.dim()));
  y[size_t(hy)] = Scalar::one(h.conductor());
  return sigma_on(h, hx, y, true);
}

TwistedAlgebra build_twisted(const HopfData& u, const HopfData& a, const Pairing& tau) {
  TwistedAlgebra h;
  h.U = u;
  h.A = a;
  h.tau = tau;
  int du = u.dim(), da = a.dim(), n = du * da;
  int conductor = std::max(u.conductor(), a.conductor());

  h.H.alg.dim = n;
  h.H.alg.conductor = conductor;
  h.H.alg.prod.assign(size_t(n) * size_t(n), {});

  // unit and coalgebra: tensor structure
  {
    h.H.alg.unit = Vec(size_t(n));
    for (int i = 0; i < du; i++)
      for (int j = 0; j < da; j++) {
        Scalar v = u.alg.unit[size_t(i)] * a.alg.unit[size_t(j)];
        if (!v.is_zero()) h.H.alg.unit[size_t(h.hindex(i, j))] = std::move(v);
      }
    h.H.coa.dim = n;
    h.H.coa.conductor = conductor;
    h.H.coa.comult.assign(size_t(n), {});
    h.H.coa.counit = Vec(size_t(n));
    for (int i = 0; i < du; i++) {
      for (int j = 0; j < da; j++) {
        int idx = h.hindex(i, j);
        h.H.coa.counit[size_t(idx)] = u.coa.counit[size_t(i)] * a.coa.counit[size_t(j)];
        for (const auto& tu : u.coa.comult[size_t(i)]) {
          for (const auto& ta : a.coa.comult[size_t(j)]) {
            Scalar c = tu.c * ta.c;
            if (c.is_zero()) continue;
            h.H.coa.comult[size_t(idx)].push_back(
                {h.hindex(tu.left, ta.left), h.hindex(tu.right, ta.right), std::move(c)});
          }
        }
      }
    }
  }

  // product: (u (x) a)(u' (x) a') =
  //   u tau(u'_(1), a_(1)) u'_(2) (x) a_(2) tau^{-1}(u'_(3), a_(3)) a'
  std::vector<std::vector<TriTerm>> ta_triples(size_t(da));
  for (int j = 0; j < da; j++) ta_triples[size_t(j)] = comult2(a.coa, j);
  std::vector<TripleIndex> tu_index(size_t(du));
  for (int i = 0; i < du; i++) tu_index[size_t(i)] = index_triples(u.coa, i);

  DenseAccum acc(n);
  for (int i = 0; i < du; i++) {
    for (int j = 0; j < da; j++) {
      for (int ip = 0; ip < du; ip++) {
        const TripleIndex& tix = tu_index[size_t(ip)];
        for (int jp = 0; jp < da; jp++) {
          for (const auto& t : ta_triples[size_t(j)]) {
            for (const auto& [legs, mids] : tix) {
              const Scalar& t1 = tau.matrix[size_t(legs.first)][size_t(t.a)];
              if (t1.is_zero()) continue;
              const Scalar& t3 = tau.inverse[size_t(legs.second)][size_t(t.c)];
              if (t3.is_zero()) continue;
              Scalar base = t.coeff * t1 * t3;
              for (const auto& [mid, cmid] : mids) {
                Scalar f = base * cmid;
                for (const auto& [w, cw] : u.alg.basis_prod(i, mid)) {
                  for (const auto& [p, cp] : a.alg.basis_prod(t.b, jp)) {
                    acc.add(h.hindex(w, p), f * cw * cp);
                  }
                }
              }
            }
          }
          h.H.alg.basis_prod(h.hindex(i, j), h.hindex(ip, jp)) = acc.take();
        }
      }
    }
  }

  // antipode from the twist of the tensor Hopf structure when available:
  //   S^sigma(x) = u_sigma(x_(1)) S(x_(2)) u_sigma^{-1}(x_(3)),
  //   u_sigma(x) = sigma(x_(1), S(x_(2))), u_sigma^{-1}(x) = sigma^{-1}(S(x_(1)), x_(2))
  if (u.antipode && a.antipode) {
    Mat s_tensor = mat_zero(n, n);  // S_U (x) S_A columns
    for (int i = 0; i < du; i++)
      for (int j = 0; j < da; j++) {
        int col = h.hindex(i, j);
        for (int iu = 0; iu < du; iu++) {
          const Scalar& su = (*u.antipode)[size_t(iu)][size_t(i)];
          if (su.is_zero()) continue;
          for (int ja = 0; ja < da; ja++) {
            const Scalar& sa = (*a.antipode)[size_t(ja)][size_t(j)];
            if (sa.is_zero()) continue;
            s_tensor[size_t(h.hindex(iu, ja))][size_t(col)] = su * sa;
          }
        }
      }
    auto s_col = [&](int idx) {
      Vec v(size_t(n));
      for (int r = 0; r < n; r++) v[size_t(r)] = s_tensor[size_t(r)][size_t(idx)];
      return v;
    };
    Vec usig(size_t(n)), usig_inv(size_t(n));
    for (int x = 0; x < n; x++) {
      Scalar uval, uinv;
      for (const auto& t : h.H.coa.comult[size_t(x)]) {
        uval += t.c * sigma_on(h, t.left, s_col(t.right), false);
        // sigma^{-1}(S(x_(1)), x_(2)): bilinear in the first slot
        Vec sfirst = s_col(t.left);
        for (size_t w = 0; w < sfirst.size(); w++) {
          if (sfirst[w].is_zero()) continue;
          uinv += t.c * sfirst[w] * twist_sigma_inv(h, int(w), t.right);
        }
      }
      usig[size_t(x)] = std::move(uval);
      usig_inv[size_t(x)] = std::move(uinv);
    }
    Mat s = mat_zero(n, n);
    for (int x = 0; x < n; x++) {
      DenseAccum sacc(n);
      for (const auto& t : comult2(h.H.coa, x)) {
        Scalar c = t.coeff * usig[size_t(t.a)] * usig_inv[size_t(t.c)];
        if (c.is_zero()) continue;
        for (int r = 0; r < n; r++) {
          const Scalar& sv = s_tensor[size_t(r)][size_t(t.b)];
          if (!sv.is_zero()) sacc.add(r, c * sv);
        }
      }
      for (const auto& [r, v] : sacc.take()) s[size_t(r)][size_t(x)] = v;
    }
    h.H.antipode = std::move(s);
    // antipode identity sweep (fail fast; cheap relative to construction)
    Report hopf_part;
    {
      Report full;
      int nn = n;
      for (int i = 0; i < nn; i++) {
        Vec lhs(size_t(nn)), rhs(size_t(nn));
        for (const auto& t : h.H.coa.comult[size_t(i)]) {
          for (int k = 0; k < nn; k++) {
            const Scalar& sl = (*h.H.antipode)[size_t(k)][size_t(t.left)];
            if (!sl.is_zero())
              for (const auto& [m, cm] : h.H.alg.basis_prod(k, t.right))
                lhs[size_t(m)] += t.c * sl * cm;
            const Scalar& sr = (*h.H.antipode)[size_t(k)][size_t(t.right)];
            if (!sr.is_zero())
              for (const auto& [m, cm] : h.H.alg.basis_prod(t.left, k))
                rhs[size_t(m)] += t.c * sr * cm;
          }
        }
        Vec expect = vec_scale(h.H.coa.counit[size_t(i)], h.H.alg.unit);
        if (!(lhs == expect) || !(rhs == expect)) full.add_failure("antipode", {i});
      }
      hopf_part = full;
    }
    require(hopf_part.ok(), "build_twisted: derived antipode fails the antipode identity");
  }

  Report prop = verify_mult_property(h);
  require(prop.ok(), "build_twisted: slotwise product property fails: " + prop.summary());
  return h;
}

Report verify_mult_property(const TwistedAlgebra& h) {
  Report rep;
  rep.subject = "mult-property";
  int du = h.dimU(), da = h.dimA();
  for (int i = 0; i < du; i++) {
    Vec uvec(size_t(du));
    uvec[size_t(i)] = Scalar::one(h.conductor());
    SVec left = sv_from_dense(h.embed_U(uvec));
    for (int ip = 0; ip < du; ip++) {
      for (int jp = 0; jp < da; jp++) {
        // (u (x) 1)(u' (x) a') = u u' (x) a'
        SVec right{{h.hindex(ip, jp), Scalar::one(h.conductor())}};
        SVec lhs = h.H.alg.mul(left, right);
        SVec rhs;
        for (const auto& [w, c] : h.U.alg.basis_prod(i, ip)) rhs.emplace_back(h.hindex(w, jp), c);
        rhs = sv_normalize(std::move(rhs));
        if (!sv_equal(lhs, rhs)) rep.add_failure("left-slot", {i, ip, jp});
      }
    }
  }
  for (int i = 0; i < du; i++) {
    for (int j = 0; j < da; j++) {
      for (int jp = 0; jp < da; jp++) {
        // (u (x) a)(1 (x) a') = u (x) a a'
        Vec avec(size_t(da));
        avec[size_t(jp)] = Scalar::one(h.conductor());
        SVec right = sv_from_dense(h.embed_A(avec));
        SVec left{{h.hindex(i, j), Scalar::one(h.conductor())}};
        SVec lhs = h.H.alg.mul(left, right);
        SVec rhs;
        for (const auto& [p, c] : h.A.alg.basis_prod(j, jp)) rhs.emplace_back(h.hindex(i, p), c);
        rhs = sv_normalize(std::move(rhs));
        if (!sv_equal(lhs, rhs)) rep.add_failure("right-slot", {i, j, jp});
      }
    }
  }
  return rep;
}

TwistedAlgebra drinfeld_double(const HopfData& a) {
  require(a.antipode.has_value(), "drinfeld_double: antipode required");
  auto sinv = mat_inverse(*a.antipode);
  require(sinv.has_value(), "drinfeld_double: antipode not invertible");

  HopfData u = dual_cop_hopf(a);
  Pairing tau = evaluation_pairing(u, a);
  TwistedAlgebra h = build_twisted(u, a, tau);

  // direct product: (p (x) a)(q (x) b) = p (a_(1) -> q <- s^{-1}(a_(3))) (x) a_(2) b
  int n = a.dim();
  int conductor = a.conductor();
  std::vector<std::vector<TriTerm>> triples(size_t(n));
  for (int j = 0; j < n; j++) triples[size_t(j)] = comult2(a.coa, j);
  // right-mult matrices of basis elements of A
  std::vector<Mat> rmul(size_t(n));
  for (int i = 0; i < n; i++) {
    Vec ei(size_t(n));
    ei[size_t(i)] = Scalar::one(conductor);
    rmul[size_t(i)] = a.alg.right_mult_matrix(ei);
  }

  for (int j = 0; j < n; j++) {  // a = f_j
    // Op_t(y) = s^{-1}(a_(3)) y a_(1) for each coproduct term of f_j
    std::vector<Mat> ops;
    ops.reserve(triples[size_t(j)].size());
    for (const auto& t : triples[size_t(j)]) {
      Vec scol(size_t(n));
      for (int r = 0; r < n; r++) scol[size_t(r)] = (*sinv)[size_t(r)][size_t(t.c)];
      ops.push_back(mat_mul(a.alg.left_mult_matrix(scol), rmul[size_t(t.a)]));
    }
    for (int ip = 0; ip < n; ip++) {    // q = p_{ip}
      for (int i = 0; i < n; i++) {     // p = p_i
        for (int jp = 0; jp < n; jp++) {  // b = f_{jp}
          SVec cell;
          for (size_t ti = 0; ti < triples[size_t(j)].size(); ti++) {
            const auto& t = triples[size_t(j)][ti];
            // w = Op_t^T q, the functional y -> q(s^{-1}(a3) y a1)
            Vec w(size_t(n));
            for (int r = 0; r < n; r++) w[size_t(r)] = ops[ti][size_t(ip)][size_t(r)];
            SVec pw = u.alg.mul(SVec{{i, Scalar::one(conductor)}}, sv_from_dense(w));
            for (const auto& [uu, cu] : pw) {
              for (const auto& [aa, ca] : a.alg.basis_prod(t.b, jp)) {
                cell.emplace_back(h.hindex(uu, aa), t.coeff * cu * ca);
              }
            }
          }
          cell = sv_normalize(std::move(cell));
          const SVec& twisted = h.H.alg.basis_prod(h.hindex(i, j), h.hindex(ip, jp));
          require(sv_equal(cell, twisted),
                  "drinfeld_double: direct product disagrees with the twisted construction");
        }
      }
    }
  }
  return h;
}

Report verify_cocycle_identity(const TwistedAlgebra& h) {
  Report rep;
  rep.subject = "cocycle";
  int n = h.dim();
  // cache sigma on basis pairs
  Mat sig = mat_zero(n, n), sig_inv = mat_zero(n, n);
  for (int x = 0; x < n; x++)
    for (int y = 0; y < n; y++) {
      sig[size_t(x)][size_t(y)] = twist_sigma(h, x, y);
      sig_inv[size_t(x)][size_t(y)] = twist_sigma_inv(h, x, y);
    }
  // convolution inverse check: sigma * sigma^{-1} = eps (x) eps
  for (int x = 0; x < n; x++) {
    for (int y = 0; y < n; y++) {
      Scalar acc, acc2;
      for (const auto& tx : h.H.coa.comult[size_t(x)]) {
        for (const auto& ty : h.H.coa.comult[size_t(y)]) {
          acc += tx.c * ty.c * sig[size_t(tx.left)][size_t(ty.left)] *
                 sig_inv[size_t(tx.right)][size_t(ty.right)];
          acc2 += tx.c * ty.c * sig_inv[size_t(tx.left)][size_t(ty.left)] *
                  sig[size_t(tx.right)][size_t(ty.right)];
        }
      }
      Scalar expect = h.H.coa.counit[size_t(x)] * h.H.coa.counit[size_t(y)];
      if (!(acc == expect) || !(acc2 == expect)) rep.add_failure("sigma-inverse", {x, y});
    }
  }
  // cocycle identity on all basis triples
  for (int x = 0; x < n; x++) {
    for (int y = 0; y < n; y++) {
      for (int z = 0; z < n; z++) {
        Scalar lhs;
        for (const auto& tx : h.H.coa.comult[size_t(x)]) {
          for (const auto& ty : h.H.coa.comult[size_t(y)]) {
            const Scalar& s1 = sig[size_t(tx.left)][size_t(ty.left)];
            if (s1.is_zero()) continue;
            Scalar inner;
            for (const auto& [w, cw] : h.H.alg.basis_prod(tx.right, ty.right))
              inner += cw * sig[size_t(w)][size_t(z)];
            lhs += tx.c * ty.c * s1 * inner;
          }
        }
        Scalar rhs;
        for (const auto& ty : h.H.coa.comult[size_t(y)]) {
          for (const auto& tz : h.H.coa.comult[size_t(z)]) {
            const Scalar& s1 = sig[size_t(ty.left)][size_t(tz.left)];
            if (s1.is_zero()) continue;
            Scalar inner;
            for (const auto& [w, cw] : h.H.alg.basis_prod(ty.right, tz.right))
              inner += cw * sig[size_t(x)][size_t(w)];
            rhs += ty.c * tz.c * s1 * inner;
          }
        }
        if (!(lhs == rhs)) rep.add_failure("cocycle-identity", {x, y, z});
      }
    }
  }
  return rep;
}

OpReversal op_reversal(const TwistedAlgebra& h) {
  OpReversal r;
  r.slot_u = op_variant(h.A.alg);
  r.slot_a = op_variant(h.U.alg);
  int du = h.dimU(), da = h.dimA(), n = du * da;
  r.h.dim = n;
  r.h.conductor = h.conductor();
  auto ridx = [&](int j, int i) { return j * du + i; };
  r.h.unit = Vec(size_t(n));
  for (int j = 0; j < da; j++)
    for (int i = 0; i < du; i++) {
      Scalar v = h.A.alg.unit[size_t(j)] * h.U.alg.unit[size_t(i)];
      if (!v.is_zero()) r.h.unit[size_t(ridx(j, i))] = std::move(v);
    }
  r.h.prod.assign(size_t(n) * size_t(n), {});
  for (int j = 0; j < da; j++)
    for (int i = 0; i < du; i++)
      for (int jp = 0; jp < da; jp++)
        for (int ip = 0; ip < du; ip++) {
          // (a (x) u)(a' (x) u') = flip((u' (x) a')(u (x) a))
          SVec out;
          for (const auto& [w, c] : h.H.alg.basis_prod(h.hindex(ip, jp), h.hindex(i, j))) {
            out.emplace_back(ridx(h.aindex(w), h.uindex(w)), c);
          }
          r.h.prod[size_t(ridx(j, i)) * size_t(n) + size_t(ridx(jp, ip))] =
              sv_normalize(std::move(out));
        }
  return r;
}

Report verify_op_reversal_property(const OpReversal& r) {
  Report rep;
  rep.subject = "op-reversal";
  int du = r.slot_u.dim, da = r.slot_a.dim, n = du * da;
  auto idx = [&](int j, int i) { return j * da + i; };
  (void)idx;
  auto prod = [&](int x, int y) -> const SVec& { return r.h.prod[size_t(x) * size_t(n) + size_t(y)]; };
  // (x (x) 1) (x' (x) y') = x x' (x) y' in the reversed slots
  for (int x = 0; x < du; x++)
    for (int xp = 0; xp < du; xp++)
      for (int yp = 0; yp < da; yp++) {
        SVec lhs;
        for (int i = 0; i < da; i++) {
          if (r.slot_a.unit[size_t(i)].is_zero()) continue;
          sv_add_scaled(lhs, r.slot_a.unit[size_t(i)], prod(x * da + i, xp * da + yp));
        }
        SVec rhs;
        for (const auto& [w, c] : r.slot_u.basis_prod(x, xp)) rhs.emplace_back(w * da + yp, c);
        rhs = sv_normalize(std::move(rhs));
        if (!sv_equal(lhs, rhs)) rep.add_failure("left-slot", {x, xp, yp});
      }
  for (int x = 0; x < du; x++)
    for (int y = 0; y < da; y++)
      for (int yp = 0; yp < da; yp++) {
        SVec lhs;
        for (int i = 0; i < du; i++) {
          if (r.slot_u.unit[size_t(i)].is_zero()) continue;
          sv_add_scaled(lhs, r.slot_u.unit[size_t(i)], prod(x * da + y, i * da + yp));
        }
        SVec rhs;
        for (const auto& [p, c] : r.slot_a.basis_prod(y, yp)) rhs.emplace_back(x * da + p, c);
        rhs = sv_normalize(std::move(rhs));
        if (!sv_equal(lhs, rhs)) rep.add_failure("right-slot", {x, y, yp});
      }
  return rep;
}

ComparisonMap comparison_map(const TwistedAlgebra& h) {
  ComparisonMap cm{drinfeld_double(h.A), {}, {}};
  cm.check.subject = "comparison-map";
  int n = h.dim();
  int nd = cm.target.dim();
  cm.matrix = mat_zero(nd, n);
  for (int i = 0; i < h.dimU(); i++)
    for (int j = 0; j < h.dimA(); j++) {
      int col = h.hindex(i, j);
      for (int k = 0; k < h.dimA(); k++) {
        const Scalar& t = h.tau.matrix[size_t(i)][size_t(k)];
        if (!t.is_zero()) cm.matrix[size_t(cm.target.hindex(k, j))][size_t(col)] = t;
      }
    }
  // unit
  {
    Vec f1 = mat_vec(cm.matrix, h.H.alg.unit);
    if (!(f1 == cm.target.H.alg.unit)) cm.check.add_failure("unit");
  }
  // multiplicativity on all basis pairs
  for (int x = 0; x < n; x++) {
    for (int y = 0; y < n; y++) {
      SVec fxy;
      for (const auto& [w, c] : h.H.alg.basis_prod(x, y)) {
        for (int r = 0; r < nd; r++) {
          const Scalar& m = cm.matrix[size_t(r)][size_t(w)];
          if (!m.is_zero()) fxy.emplace_back(r, c * m);
        }
      }
      fxy = sv_normalize(std::move(fxy));
      SVec fx, fy;
      for (int r = 0; r < nd; r++) {
        if (!cm.matrix[size_t(r)][size_t(x)].is_zero())
          fx.emplace_back(r, cm.matrix[size_t(r)][size_t(x)]);
        if (!cm.matrix[size_t(r)][size_t(y)].is_zero())
          fy.emplace_back(r, cm.matrix[size_t(r)][size_t(y)]);
      }
      if (!sv_equal(fxy, cm.target.H.alg.mul(fx, fy)))
        cm.check.add_failure("multiplicative", {x, y});
    }
  }
  // comultiplicativity on all basis elements
  for (int x = 0; x < n; x++) {
    std::map<std::pair<int, int>, Scalar> dif;
    auto add = [&](int a2, int b, const Scalar& c) {
      if (c.is_zero()) return;
      auto [it, fresh] = dif.try_emplace({a2, b}, c);
      if (!fresh) it->second += c;
    };
    for (const auto& t : h.H.coa.comult[size_t(x)]) {
      for (int r1 = 0; r1 < nd; r1++) {
        const Scalar& m1 = cm.matrix[size_t(r1)][size_t(t.left)];
        if (m1.is_zero()) continue;
        for (int r2 = 0; r2 < nd; r2++) {
          const Scalar& m2 = cm.matrix[size_t(r2)][size_t(t.right)];
          if (m2.is_zero()) continue;
          add(r1, r2, t.c * m1 * m2);
        }
      }
    }
    for (int r = 0; r < nd; r++) {
      const Scalar& m = cm.matrix[size_t(r)][size_t(x)];
      if (m.is_zero()) continue;
      for (const auto& t : cm.target.H.coa.comult[size_t(r)]) add(t.left, t.right, -(m * t.c));
    }
    bool zero = true;
    for (const auto& [k, v] : dif)
      if (!v.is_zero()) zero = false;
    if (!zero) cm.check.add_failure("comultiplicative", {x});
    // counit
    Scalar eps_f;
    for (int r = 0; r < nd; r++)
      eps_f += cm.matrix[size_t(r)][size_t(x)] * cm.target.H.coa.counit[size_t(r)];
    if (!(eps_f == h.H.coa.counit[size_t(x)])) cm.check.add_failure("counit", {x});
  }
  return cm;
}

std::vector<CentralPair> central_grouplike_scan(const TwistedAlgebra& h,
                                                const std::vector<Vec>& u_candidates) {
  std::vector<CentralPair> out;
  for (const Vec& g : grouplikes(h.A)) {
    for (const Vec& u : u_candidates) {
      Vec v = h.tensor_elem(u, g);
      Mat l = h.H.alg.left_mult_matrix(v);
      Mat r = h.H.alg.right_mult_matrix(v);
      if (l == r) out.push_back({u, g, std::move(v)});
    }
  }
  return out;
}

std::vector<CentralPair> central_grouplike_scan(const TwistedAlgebra& h) {
  return central_grouplike_scan(h, grouplikes(h.U));
}

}  // namespace halg
