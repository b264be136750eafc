#include "halg/linalg.hpp"

#include <algorithm>

#include "halg/error.hpp"

namespace halg {

Mat mat_zero(int rows, int cols) {
  return Mat(size_t(rows), Vec(size_t(cols)));
}

Mat mat_identity(int n, int conductor) {
  Mat m = mat_zero(n, n);
  for (int i = 0; i < n; i++) m[size_t(i)][size_t(i)] = Scalar::one(conductor);
  return m;
}

Mat mat_transpose(const Mat& a) {
  if (a.empty()) return a;
  Mat t(a[0].size(), Vec(a.size()));
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < a[i].size(); j++) t[j][i] = a[i][j];
  return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  require(!a.empty() && !b.empty() && a[0].size() == b.size(), "mat_mul: shape mismatch");
  Mat c = mat_zero(int(a.size()), int(b[0].size()));
  for (size_t i = 0; i < a.size(); i++) {
    for (size_t k = 0; k < b.size(); k++) {
      const Scalar& aik = a[i][k];
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b[k].size(); j++) {
        if (b[k][j].is_zero()) continue;
        c[i][j] += aik * b[k][j];
      }
    }
  }
  return c;
}

Vec mat_vec(const Mat& a, const Vec& v) {
  require(a.empty() || a[0].size() == v.size(), "mat_vec: shape mismatch");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); i++) {
    for (size_t j = 0; j < v.size(); j++) {
      if (a[i][j].is_zero() || v[j].is_zero()) continue;
      out[i] += a[i][j] * v[j];
    }
  }
  return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
  require(a.size() == b.size(), "mat_add: shape mismatch");
  Mat c = a;
  for (size_t i = 0; i < a.size(); i++) {
    require(a[i].size() == b[i].size(), "mat_add: shape mismatch");
    for (size_t j = 0; j < a[i].size(); j++) c[i][j] += b[i][j];
  }
  return c;
}

Mat mat_sub(const Mat& a, const Mat& b) { return mat_add(a, mat_scale(Scalar::from_int(1, -1), b)); }

Mat mat_scale(const Scalar& c, const Mat& a) {
  Mat m = a;
  for (auto& row : m)
    for (auto& x : row) x *= c;
  return m;
}

bool mat_is_zero(const Mat& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vec_add: shape mismatch");
  Vec c = a;
  for (size_t i = 0; i < b.size(); i++) c[i] += b[i];
  return c;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vec_sub: shape mismatch");
  Vec c = a;
  for (size_t i = 0; i < b.size(); i++) c[i] -= b[i];
  return c;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec out = v;
  for (auto& x : out) x *= c;
  return out;
}

Scalar dot(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "dot: shape mismatch");
  Scalar s;
  for (size_t i = 0; i < a.size(); i++) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    s += a[i] * b[i];
  }
  return s;
}

int mat_rows(const Mat& a) { return int(a.size()); }
int mat_cols(const Mat& a) { return a.empty() ? 0 : int(a[0].size()); }

Rref rref(Mat a) {
  Rref r;
  int rows = mat_rows(a), cols = mat_cols(a);
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; col++) {
    int piv = -1;
    for (int i = lead; i < rows; i++) {
      if (!a[size_t(i)][size_t(col)].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[size_t(piv)], a[size_t(lead)]);
    Scalar inv = a[size_t(lead)][size_t(col)].inverse();
    for (int j = col; j < cols; j++) a[size_t(lead)][size_t(j)] *= inv;
    for (int i = 0; i < rows; i++) {
      if (i == lead) continue;
      Scalar f = a[size_t(i)][size_t(col)];
      if (f.is_zero()) continue;
      for (int j = col; j < cols; j++)
        a[size_t(i)][size_t(j)] -= f * a[size_t(lead)][size_t(j)];
    }
    r.pivot_cols.push_back(col);
    lead++;
  }
  r.rank = lead;
  r.m = std::move(a);
  return r;
}

Mat nullspace(const Mat& a) {
  int cols = mat_cols(a);
  Rref r = rref(a);
  std::vector<bool> is_pivot(size_t(cols), false);
  for (int c : r.pivot_cols) is_pivot[size_t(c)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; c++)
    if (!is_pivot[size_t(c)]) free_cols.push_back(c);
  Mat basis = mat_zero(cols, int(free_cols.size()));
  int conductor = 1;
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) conductor = x.conductor();
  for (size_t k = 0; k < free_cols.size(); k++) {
    int fc = free_cols[k];
    basis[size_t(fc)][k] = Scalar::one(conductor);
    for (size_t pi = 0; pi < r.pivot_cols.size(); pi++) {
      basis[size_t(r.pivot_cols[pi])][k] = -r.m[pi][size_t(fc)];
    }
  }
  return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  auto sol = solve_mat(a, mat_transpose(Mat{b}));
  if (!sol) return std::nullopt;
  Vec out(sol->size());
  for (size_t i = 0; i < sol->size(); i++) out[i] = (*sol)[i][0];
  return out;
}

std::optional<Mat> solve_mat(const Mat& a, const Mat& b) {
  require(a.size() == b.size(), "solve_mat: shape mismatch");
  int cols = mat_cols(a), bcols = mat_cols(b);
  Mat aug = a;
  for (size_t i = 0; i < a.size(); i++)
    aug[i].insert(aug[i].end(), b[i].begin(), b[i].end());
  Rref r = rref(std::move(aug));
  // consistency: no pivot in the augmented block
  for (int c : r.pivot_cols)
    if (c >= cols) return std::nullopt;
  Mat x = mat_zero(cols, bcols);
  for (size_t pi = 0; pi < r.pivot_cols.size(); pi++) {
    int pc = r.pivot_cols[pi];
    for (int j = 0; j < bcols; j++) x[size_t(pc)][size_t(j)] = r.m[pi][size_t(cols + j)];
  }
  return x;
}

std::optional<Mat> mat_inverse(const Mat& a) {
  int n = mat_rows(a);
  require(n == mat_cols(a), "mat_inverse: matrix not square");
  int conductor = 1;
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) conductor = x.conductor();
  Mat aug = a;
  Mat id = mat_identity(n, conductor);
  for (int i = 0; i < n; i++)
    aug[size_t(i)].insert(aug[size_t(i)].end(), id[size_t(i)].begin(), id[size_t(i)].end());
  Rref r = rref(std::move(aug));
  if (r.rank < n) return std::nullopt;
  Mat inv = mat_zero(n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) inv[size_t(i)][size_t(j)] = r.m[size_t(i)][size_t(n + j)];
  return inv;
}

Scalar det(Mat a) {
  int n = mat_rows(a);
  require(n == mat_cols(a), "det: matrix not square");
  if (n == 0) return Scalar::one(1);
  Scalar d = Scalar::one(1);
  for (int col = 0; col < n; col++) {
    int piv = -1;
    for (int i = col; i < n; i++) {
      if (!a[size_t(i)][size_t(col)].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return Scalar();  // singular
    if (piv != col) {
      std::swap(a[size_t(piv)], a[size_t(col)]);
      d = -d;
    }
    const Scalar p = a[size_t(col)][size_t(col)];
    d *= p;
    Scalar inv = p.inverse();
    for (int i = col + 1; i < n; i++) {
      Scalar f = a[size_t(i)][size_t(col)] * inv;
      if (f.is_zero()) continue;
      for (int j = col; j < n; j++)
        a[size_t(i)][size_t(j)] -= f * a[size_t(col)][size_t(j)];
    }
  }
  return d;
}

int mat_rank(Mat a) { return rref(std::move(a)).rank; }

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = mat_zero(ambient, 0);
  return s;
}

Subspace Subspace::full(int ambient, int conductor) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = mat_identity(ambient, conductor);
  return s;
}

Subspace Subspace::span_cols(const Mat& cols) {
  Subspace s;
  s.ambient_ = mat_rows(cols);
  // reduced column echelon = transpose of rref of transpose, nonzero rows only
  Rref r = rref(mat_transpose(cols));
  Mat rows;
  for (int i = 0; i < r.rank; i++) rows.push_back(r.m[size_t(i)]);
  if (rows.empty()) rows = mat_zero(0, s.ambient_);
  s.basis_ = mat_transpose(rows);
  if (s.basis_.empty()) s.basis_ = mat_zero(s.ambient_, 0);
  return s;
}

Subspace Subspace::span_vectors(int ambient, const std::vector<Vec>& vectors) {
  Mat cols = mat_zero(ambient, int(vectors.size()));
  for (size_t j = 0; j < vectors.size(); j++) {
    require(int(vectors[j].size()) == ambient, "span_vectors: wrong vector length");
    for (int i = 0; i < ambient; i++) cols[size_t(i)][j] = vectors[j][size_t(i)];
  }
  return span_cols(cols);
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  for (int j = 0; j < dim(); j++) {
    Vec v = Vec(size_t(ambient_));
    for (int i = 0; i < ambient_; i++) v[size_t(i)] = basis_[size_t(i)][size_t(j)];
    out.push_back(std::move(v));
  }
  return out;
}

bool Subspace::contains_vector(const Vec& v) const {
  require(int(v.size()) == ambient_, "Subspace: wrong vector length");
  if (vec_is_zero(v)) return true;
  if (dim() == 0) return false;
  return solve(basis_, v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  require(ambient_ == other.ambient_, "Subspace: ambient mismatch");
  for (const auto& v : other.basis_vectors())
    if (!contains_vector(v)) return false;
  return true;
}

Subspace Subspace::intersect(const Subspace& other) const {
  require(ambient_ == other.ambient_, "Subspace: ambient mismatch");
  if (dim() == 0 || other.dim() == 0) return zero(ambient_);
  // solutions of A x = B y; intersection vectors are A x
  Mat stacked = mat_zero(ambient_, dim() + other.dim());
  for (int i = 0; i < ambient_; i++) {
    for (int j = 0; j < dim(); j++) stacked[size_t(i)][size_t(j)] = basis_[size_t(i)][size_t(j)];
    for (int j = 0; j < other.dim(); j++)
      stacked[size_t(i)][size_t(dim() + j)] = -other.basis_[size_t(i)][size_t(j)];
  }
  Mat ker = nullspace(stacked);
  Mat gens = mat_zero(ambient_, mat_cols(ker));
  for (int k = 0; k < mat_cols(ker); k++) {
    for (int i = 0; i < ambient_; i++) {
      Scalar acc;
      for (int j = 0; j < dim(); j++) acc += basis_[size_t(i)][size_t(j)] * ker[size_t(j)][size_t(k)];
      gens[size_t(i)][size_t(k)] = acc;
    }
  }
  return span_cols(gens);
}

Subspace Subspace::sum(const Subspace& other) const {
  require(ambient_ == other.ambient_, "Subspace: ambient mismatch");
  Mat cols = basis_;
  if (cols.empty()) cols = mat_zero(ambient_, 0);
  for (int i = 0; i < ambient_; i++)
    cols[size_t(i)].insert(cols[size_t(i)].end(), other.basis_[size_t(i)].begin(),
                           other.basis_[size_t(i)].end());
  return span_cols(cols);
}

Mat Subspace::annihilator_rows() const {
  // rows spanning {q : q v = 0 for v in subspace} = nullspace of basis^T
  if (dim() == 0) {
    int conductor = 1;
    return mat_identity(ambient_, conductor);
  }
  return mat_transpose(nullspace(mat_transpose(basis_)));
}

QuotientSpace make_quotient(const Subspace& s, int conductor) {
  int n = s.ambient();
  int d = s.dim();
  // complement: standard vectors at non-pivot rows of the column echelon basis
  std::vector<bool> pivot_row(size_t(n), false);
  for (int j = 0; j < d; j++) {
    for (int i = 0; i < n; i++) {
      if (!s.basis()[size_t(i)][size_t(j)].is_zero()) {
        pivot_row[size_t(i)] = true;  // leading entry of column j
        break;
      }
    }
  }
  std::vector<int> comp_rows;
  for (int i = 0; i < n; i++)
    if (!pivot_row[size_t(i)]) comp_rows.push_back(i);
  require(int(comp_rows.size()) == n - d, "make_quotient: complement selection failed");

  Mat m = mat_zero(n, n);  // [basis | complement]
  for (int i = 0; i < n; i++)
    for (int j = 0; j < d; j++) m[size_t(i)][size_t(j)] = s.basis()[size_t(i)][size_t(j)];
  for (size_t k = 0; k < comp_rows.size(); k++)
    m[size_t(comp_rows[k])][size_t(d) + k] = Scalar::one(conductor);
  auto minv = mat_inverse(m);
  require(minv.has_value(), "make_quotient: basis completion not invertible");

  QuotientSpace q;
  q.proj = Mat(minv->begin() + d, minv->end());
  q.incl = mat_zero(n, n - d);
  for (size_t k = 0; k < comp_rows.size(); k++)
    q.incl[size_t(comp_rows[k])][k] = Scalar::one(conductor);
  return q;
}

}  // namespace halg
