#pragma once

#include <cstddef>

#include "curvrank/matrix.hpp"

namespace curvrank {

/// Inner-product space of signature (p, q): p basis directions of negative
/// square, q of positive square. The default basis Gram matrix is
/// diag(-1 x p, +1 x q); arbitrary symmetric non-degenerate Gram matrices of
/// the same signature are supported for derived spaces.
struct SignatureSpace {
  std::size_t p = 0;
  std::size_t q = 0;
  Mat gram;
  Mat gram_inv;

  std::size_t dim() const noexcept { return p + q; }

  static SignatureSpace standard(std::size_t p, std::size_t q);

  /// Builds a space over an explicit Gram matrix; verifies symmetry,
  /// non-degeneracy, and that the inertia matches (p, q).
  static SignatureSpace with_gram(std::size_t p, std::size_t q, Mat gram);

  bool operator==(const SignatureSpace& other) const {
    return p == other.p && q == other.q && gram == other.gram;
  }
};

/// Linear subspace in reduced-echelon canonical form: equal subspaces have
/// identical basis matrices. Basis vectors are the columns.
struct Subspace {
  SignatureSpace ambient;
  Mat basis;

  std::size_t dim() const noexcept { return basis.cols(); }

  static Subspace span(const SignatureSpace& ambient, const Mat& vectors);

  bool contains(const Vec& v) const;

  bool operator==(const Subspace& other) const {
    return ambient == other.ambient && basis == other.basis;
  }
};

/// Inner product v1' * gram * v2.
Rational inner(const SignatureSpace& space, const Vec& v1, const Vec& v2);

/// Null space of m as a subspace of the given ambient space
/// (ambient.dim() must equal m.cols()).
Subspace kernel_basis(const SignatureSpace& ambient, const Mat& m);

/// Canonical intersection; cross-checked against the rank identity
/// dim(s1) + dim(s2) = dim(s1 + s2) + dim(s1 n s2).
Subspace intersect(const Subspace& s1, const Subspace& s2);

/// Inertia of a symmetric matrix as (n_pos, n_neg, n_zero), computed by exact
/// congruence diagonalization.
struct Inertia {
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
  std::size_t n_zero = 0;

  bool operator==(const Inertia&) const = default;
};

Inertia signature_of_symmetric(const Mat& m);

/// Invertible transform with transform' * m * transform diagonal.
struct Congruence {
  Mat transform;
  Mat diagonal;
};

Congruence congruence_diagonalize(const Mat& m);

/// Coefficients c with target = sum c_i * basis_i, or nullopt when the target
/// lies outside the span. The basis columns must be independent.
std::optional<Vec> solve_in_span(const Vec& target, const Mat& basis);

}  // namespace curvrank
