#include "curvrank/exactlin.hpp"

#include <utility>

#include "curvrank/error.hpp"

namespace curvrank {

SignatureSpace SignatureSpace::standard(std::size_t p, std::size_t q) {
  SignatureSpace s;
  s.p = p;
  s.q = q;
  s.gram = Mat(p + q, p + q);
  for (std::size_t i = 0; i < p; ++i) s.gram(i, i) = -1;
  for (std::size_t i = p; i < p + q; ++i) s.gram(i, i) = 1;
  s.gram_inv = s.gram;
  return s;
}

SignatureSpace SignatureSpace::with_gram(std::size_t p, std::size_t q, Mat gram) {
  if (gram.rows() != p + q || gram.cols() != p + q)
    fail(Errc::DimensionMismatch, "gram matrix shape does not match p + q");
  Inertia in = signature_of_symmetric(gram);
  if (in.n_zero != 0) fail(Errc::Degenerate, "gram matrix is degenerate");
  if (in.n_pos != q || in.n_neg != p)
    fail(Errc::BadParams, "gram matrix inertia does not match signature (p, q)");
  SignatureSpace s;
  s.p = p;
  s.q = q;
  auto inv = inverse(gram);
  s.gram = std::move(gram);
  s.gram_inv = std::move(*inv);
  return s;
}

Subspace Subspace::span(const SignatureSpace& ambient, const Mat& vectors) {
  if (vectors.cols() > 0 && vectors.rows() != ambient.dim())
    fail(Errc::DimensionMismatch, "span vectors do not match ambient dimension");
  Subspace s;
  s.ambient = ambient;
  s.basis = vectors.cols() > 0 ? column_canonical(vectors) : Mat(ambient.dim(), 0);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient.dim()) fail(Errc::DimensionMismatch, "vector outside ambient space");
  if (is_zero(v)) return true;
  if (basis.cols() == 0) return false;
  return solve(basis, v).has_value();
}

Rational inner(const SignatureSpace& space, const Vec& v1, const Vec& v2) {
  if (v1.size() != space.dim() || v2.size() != space.dim())
    fail(Errc::DimensionMismatch, "inner product operands must have the space dimension");
  Rational acc(0);
  for (std::size_t i = 0; i < space.dim(); ++i) {
    if (sgn(v1[i]) == 0) continue;
    Rational row(0);
    for (std::size_t j = 0; j < space.dim(); ++j) row += space.gram(i, j) * v2[j];
    acc += v1[i] * row;
  }
  return acc;
}

Subspace kernel_basis(const SignatureSpace& ambient, const Mat& m) {
  if (m.cols() != ambient.dim())
    fail(Errc::DimensionMismatch, "kernel ambient dimension must equal column count");
  Subspace s;
  s.ambient = ambient;
  s.basis = kernel_columns(m);
  return s;
}

Subspace intersect(const Subspace& s1, const Subspace& s2) {
  if (!(s1.ambient == s2.ambient)) fail(Errc::AmbientMismatch, "subspaces in different spaces");
  const std::size_t d = s1.ambient.dim();
  const std::size_t k1 = s1.basis.cols(), k2 = s2.basis.cols();
  Subspace result;
  result.ambient = s1.ambient;
  if (k1 == 0 || k2 == 0) {
    result.basis = Mat(d, 0);
  } else {
    Mat paired = hstack(s1.basis, -s2.basis);
    Mat null_cols = kernel_columns(paired);
    std::vector<Vec> members;
    for (std::size_t c = 0; c < null_cols.cols(); ++c) {
      Vec x(d);
      for (std::size_t j = 0; j < k1; ++j)
        for (std::size_t i = 0; i < d; ++i) x[i] += null_cols(j, c) * s1.basis(i, j);
      members.push_back(std::move(x));
    }
    result.basis = column_canonical(from_cols(members, d));
  }
  std::size_t sum_dim = rank(hstack(s1.basis, s2.basis));
  if (k1 + k2 != sum_dim + result.basis.cols())
    fail(Errc::Degenerate, "intersection violates the rank identity");
  return result;
}

Congruence congruence_diagonalize(const Mat& m) {
  if (!is_symmetric(m)) fail(Errc::NonSymmetric, "congruence diagonalization needs symmetry");
  const std::size_t n = m.rows();
  Mat a = m;
  Mat e = Mat::identity(n);

  auto swap_rc = [&](std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
    for (std::size_t i = 0; i < n; ++i) std::swap(e(i, x), e(i, y));
  };
  auto add_rc = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
    for (std::size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
    for (std::size_t i = 0; i < n; ++i) e(i, dst) += f * e(i, src);
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t dpos = n;
      for (std::size_t j = k + 1; j < n; ++j)
        if (sgn(a(j, j)) != 0) {
          dpos = j;
          break;
        }
      if (dpos < n) {
        swap_rc(k, dpos);
      } else {
        std::size_t opos = n;
        for (std::size_t j = k + 1; j < n; ++j)
          if (sgn(a(k, j)) != 0) {
            opos = j;
            break;
          }
        if (opos == n) continue;
        add_rc(k, opos, Rational(1));
      }
    }
    Rational pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      add_rc(i, k, -a(i, k) / pivot);
    }
  }
  return {std::move(e), std::move(a)};
}

Inertia signature_of_symmetric(const Mat& m) {
  if (!is_symmetric(m)) fail(Errc::NonSymmetric, "inertia of a non-symmetric matrix");
  Congruence c = congruence_diagonalize(m);
  Inertia in;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int s = sgn(c.diagonal(i, i));
    if (s > 0)
      ++in.n_pos;
    else if (s < 0)
      ++in.n_neg;
    else
      ++in.n_zero;
  }
  return in;
}

std::optional<Vec> solve_in_span(const Vec& target, const Mat& basis) {
  if (basis.cols() > 0 && basis.rows() != target.size())
    fail(Errc::DimensionMismatch, "basis vectors do not match target length");
  if (rank(basis) != basis.cols()) fail(Errc::DependentBasis, "span basis is dependent");
  if (basis.cols() == 0) return is_zero(target) ? std::optional<Vec>(Vec{}) : std::nullopt;
  return solve(basis, target);
}

}  // namespace curvrank
