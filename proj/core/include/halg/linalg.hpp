#pragma once

#include <optional>
#include <vector>

#include "halg/scalar.hpp"

namespace halg {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row major; rows of equal length

Mat mat_zero(int rows, int cols);
Mat mat_identity(int n, int conductor);
Mat mat_transpose(const Mat& a);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& v);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(const Scalar& c, const Mat& a);
bool mat_is_zero(const Mat& a);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
Scalar dot(const Vec& a, const Vec& b);
int mat_rows(const Mat& a);
int mat_cols(const Mat& a);

struct Rref {
  Mat m;
  std::vector<int> pivot_cols;
  int rank = 0;
};
Rref rref(Mat a);

// Columns form a basis of {x : a x = 0}.
Mat nullspace(const Mat& a);
// One solution of a x = b, if any.
std::optional<Vec> solve(const Mat& a, const Vec& b);
// Solves a X = B columnwise; nullopt if any column is unsolvable.
std::optional<Mat> solve_mat(const Mat& a, const Mat& b);
std::optional<Mat> mat_inverse(const Mat& a);
Scalar det(Mat a);
int mat_rank(Mat a);

// Subspace of k^n stored as the unique reduced column echelon basis, so
// equality of subspaces is equality of representations.
class Subspace {
 public:
  Subspace() = default;  // zero subspace of the zero space
  static Subspace zero(int ambient);
  static Subspace full(int ambient, int conductor);
  // span of the columns of `cols` (ambient = rows)
  static Subspace span_cols(const Mat& cols);
  static Subspace span_vectors(int ambient, const std::vector<Vec>& vectors);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.empty() ? 0 : int(basis_[0].size()); }
  // n x dim matrix, columns are the canonical basis
  const Mat& basis() const { return basis_; }
  std::vector<Vec> basis_vectors() const;

  bool contains_vector(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  // rows q spanning the annihilator: x in subspace iff Q x = 0
  Mat annihilator_rows() const;

  bool operator==(const Subspace&) const = default;

 private:
  int ambient_ = 0;
  Mat basis_;  // ambient_ rows, dim columns, reduced column echelon
};

// Data for working in k^n / S: proj (d' x n), incl (n x d'), with
// proj * incl = I and ker(proj) = S.
struct QuotientSpace {
  Mat proj;
  Mat incl;
};
QuotientSpace make_quotient(const Subspace& s, int conductor);

}  // namespace halg
