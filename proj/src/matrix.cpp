#include "curvrank/matrix.hpp"

#include <utility>

#include "curvrank/error.hpp"

namespace curvrank {

namespace {

void require(bool ok, Errc code, const char* what) {
  if (!ok) fail(code, what);
}

}  // namespace

Mat mat_of(std::size_t rows, std::size_t cols, std::initializer_list<long> entries) {
  require(entries.size() == rows * cols, Errc::DimensionMismatch, "entry count mismatch");
  Mat m(rows, cols);
  auto it = entries.begin();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = *it++;
  return m;
}

Vec vec_of(std::initializer_list<long> entries) {
  Vec v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  require(i < n, Errc::DimensionMismatch, "unit vector index out of range");
  Vec v(n);
  v[i] = 1;
  return v;
}

Mat transpose(const Mat& m) {
  Mat t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

Mat operator+(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), Errc::DimensionMismatch, "matrix sum");
  Mat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), Errc::DimensionMismatch,
          "matrix difference");
  Mat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

Mat operator-(const Mat& a) {
  Mat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = -a(i, j);
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  require(a.cols() == b.rows(), Errc::DimensionMismatch, "matrix product");
  Mat r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

Vec operator*(const Mat& a, const Vec& v) {
  require(a.cols() == v.size(), Errc::DimensionMismatch, "matrix-vector product");
  Vec r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

Mat operator*(const Rational& c, const Mat& a) {
  Mat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
  return r;
}

Vec vadd(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), Errc::DimensionMismatch, "vector sum");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vsub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), Errc::DimensionMismatch, "vector difference");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vscale(const Rational& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) return false;
  return true;
}

bool is_zero(const Vec& v) {
  for (const Rational& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

bool is_symmetric(const Mat& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_antisymmetric(const Mat& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

Vec col(const Mat& m, std::size_t j) {
  require(j < m.cols(), Errc::DimensionMismatch, "column index out of range");
  Vec v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

void set_col(Mat& m, std::size_t j, const Vec& v) {
  require(j < m.cols() && v.size() == m.rows(), Errc::DimensionMismatch, "set_col shape");
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = v[i];
}

Mat from_cols(const std::vector<Vec>& columns, std::size_t dim) {
  Mat m(dim, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require(columns[j].size() == dim, Errc::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Mat hstack(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows(), Errc::DimensionMismatch, "hstack row mismatch");
  Mat r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

Rref rref(Mat a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pr = r;
    while (pr < a.rows() && sgn(a(pr, c)) == 0) ++pr;
    if (pr == a.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pr, j), a(r, j));
    Rational inv_pivot = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv_pivot;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

namespace {

/// Row-wise denominator clearing; returns the integer matrix. Row scaling by
/// positive factors preserves rank and row space.
std::vector<std::vector<Integer>> cleared_rows(const Mat& m) {
  std::vector<std::vector<Integer>> z(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational scaled = m(i, j) * Rational(l);
      z[i][j] = scaled.get_num();
    }
  }
  return z;
}

}  // namespace

std::size_t rank(const Mat& m) {
  if (m.empty()) return 0;
  auto z = cleared_rows(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && sgn(z[pr][c]) == 0) ++pr;
    if (pr == rows) continue;
    std::swap(z[pr], z[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = z[r][c] * z[i][j] - z[i][c] * z[r][j];
        mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      z[i][c] = 0;
    }
    prev = z[r][c];
    ++r;
  }
  return r;
}

Rational det(const Mat& m) {
  if (m.rows() != m.cols()) fail(Errc::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  auto z = cleared_rows(m);
  Rational row_factor_product(1);
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    row_factor_product *= Rational(l);
  }
  Integer prev = 1;
  int swap_sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = c;
    while (pr < n && sgn(z[pr][c]) == 0) ++pr;
    if (pr == n) return Rational(0);
    if (pr != c) {
      std::swap(z[pr], z[c]);
      swap_sign = -swap_sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Integer t = z[c][c] * z[i][j] - z[i][c] * z[c][j];
        mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      z[i][c] = 0;
    }
    prev = z[c][c];
  }
  Rational d(z[n - 1][n - 1]);
  if (swap_sign < 0) d = -d;
  return d / row_factor_product;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) fail(Errc::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Rref red = rref(hstack(m, Mat::identity(n)));
  if (red.pivots.size() != n || (n > 0 && red.pivots.back() >= n)) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.m(i, n + j);
  return inv;
}

Mat kernel_columns(const Mat& m) {
  Rref red = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : red.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec x(n);
    x[f] = 1;
    for (std::size_t k = 0; k < red.pivots.size(); ++k) x[red.pivots[k]] = -red.m(k, f);
    basis.push_back(std::move(x));
  }
  return column_canonical(from_cols(basis, n));
}

Mat column_canonical(const Mat& columns) {
  Rref red = rref(transpose(columns));
  Mat rows_kept(red.pivots.size(), columns.rows());
  for (std::size_t i = 0; i < red.pivots.size(); ++i)
    for (std::size_t j = 0; j < columns.rows(); ++j) rows_kept(i, j) = red.m(i, j);
  return transpose(rows_kept);
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (a.rows() != b.size()) fail(Errc::DimensionMismatch, "solve shape mismatch");
  Mat rhs = from_cols({b}, b.size());
  Rref red = rref(hstack(a, rhs));
  for (std::size_t k = 0; k < red.pivots.size(); ++k)
    if (red.pivots[k] == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t k = 0; k < red.pivots.size(); ++k) x[red.pivots[k]] = red.m(k, a.cols());
  return x;
}

}  // namespace curvrank
