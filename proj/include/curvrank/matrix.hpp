#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "curvrank/rational.hpp"

namespace curvrank {

/// Dense matrix of exact rationals, row major. Zero-by-n and n-by-zero shapes
/// are valid and arise as empty subspace bases.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Mat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using Vec = std::vector<Rational>;

Mat mat_of(std::size_t rows, std::size_t cols, std::initializer_list<long> entries);
Vec vec_of(std::initializer_list<long> entries);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

Mat transpose(const Mat& m);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator-(const Mat& a);
Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& v);
Mat operator*(const Rational& c, const Mat& a);

Vec vadd(const Vec& a, const Vec& b);
Vec vsub(const Vec& a, const Vec& b);
Vec vscale(const Rational& c, const Vec& a);

bool is_zero(const Mat& m);
bool is_zero(const Vec& v);
bool is_symmetric(const Mat& m);
bool is_antisymmetric(const Mat& m);

Vec col(const Mat& m, std::size_t j);
void set_col(Mat& m, std::size_t j, const Vec& v);
Mat from_cols(const std::vector<Vec>& columns, std::size_t dim);
Mat hstack(const Mat& a, const Mat& b);

/// Reduced row echelon form together with the pivot column indices.
struct Rref {
  Mat m;
  std::vector<std::size_t> pivots;
};

Rref rref(Mat a);

/// Exact rank via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
std::size_t rank(const Mat& m);

Rational det(const Mat& m);
std::optional<Mat> inverse(const Mat& m);

/// Canonical basis of the null space, returned as matrix columns.
Mat kernel_columns(const Mat& m);

/// Canonical basis of the column span: unique reduced-echelon representative,
/// dependent input columns are dropped.
Mat column_canonical(const Mat& columns);

/// One exact solution of a·x = b (free variables set to zero), or nullopt when
/// the system is inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

}  // namespace curvrank
