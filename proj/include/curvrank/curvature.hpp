#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "curvrank/exactlin.hpp"

namespace curvrank {

/// Linear map between signature spaces; matrix is dim(codomain) x dim(domain).
struct LinearMap {
  SignatureSpace domain;
  SignatureSpace codomain;
  Mat matrix;

  static LinearMap endo(const SignatureSpace& space, Mat m) { return {space, space, std::move(m)}; }
};

/// Alternating bilinear map into the codomain, stored by its values on basis
/// pairs (i, j) with i < j.
struct AlternatingMap {
  SignatureSpace domain;
  SignatureSpace codomain;
  std::map<std::pair<std::size_t, std::size_t>, Vec> values;

  /// Value on (e_i, e_j) for any i, j, using antisymmetry.
  Vec value(std::size_t i, std::size_t j) const;

  void set_value(std::size_t i, std::size_t j, Vec v);
};

/// Four-index curvature array over one space, stored densely. Symmetry
/// properties are checked by validate_symmetries, not enforced by the type,
/// so partially symmetric arrays (alternating-only examples) fit too.
class CurvatureTensor4 {
 public:
  explicit CurvatureTensor4(SignatureSpace space);

  const SignatureSpace& space() const noexcept { return space_; }

  Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l);
  const Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;

  bool operator==(const CurvatureTensor4& other) const {
    return space_ == other.space_ && comp_ == other.comp_;
  }

 private:
  SignatureSpace space_;
  std::vector<Rational> comp_;
};

/// Alternating bilinear map from domain pairs into skew endomorphisms of the
/// codomain; the block for (i, j) with i > j is minus the stored (j, i) block.
class BilinearSkewMap {
 public:
  BilinearSkewMap(SignatureSpace domain, SignatureSpace codomain);

  const SignatureSpace& domain() const noexcept { return domain_; }
  const SignatureSpace& codomain() const noexcept { return codomain_; }

  Mat block(std::size_t i, std::size_t j) const;
  void set_block(std::size_t i, std::size_t j, Mat m);

  bool operator==(const BilinearSkewMap& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_ && blocks_ == other.blocks_;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  SignatureSpace domain_;
  SignatureSpace codomain_;
  std::vector<Mat> blocks_;
};

/// Curvature operator of a plane together with the plane's Gram determinant.
/// The operator is kept unnormalized; every derived invariant is a rational
/// function of (op, gramdet).
struct PlaneOperator {
  Mat op;
  Rational gramdet;
};

enum class JordanTag { Zero, ImaginaryPair, RealPair, Nilpotent2, Nilpotent3 };

const char* jordan_tag_name(JordanTag tag);

/// Jordan normal-form class of a normalized rank <= 2 skew operator.
/// lambda_sq is the squared magnitude of the nonzero eigenvalue pair and is
/// present exactly for the ImaginaryPair and RealPair tags.
struct JordanType {
  JordanTag tag = JordanTag::Zero;
  std::optional<Rational> lambda_sq;

  bool operator==(const JordanType&) const = default;
};

struct SymmetryReport {
  bool antisymmetry_ok = false;
  bool pair_symmetry_ok = false;
  bool bianchi_ok = false;

  bool all() const noexcept { return antisymmetry_ok && pair_symmetry_ok && bianchi_ok; }
};

/// Checks the three curvature identities entrywise: antisymmetry in the first
/// and last index pairs, symmetry under swapping the pairs, and the first
/// Bianchi identity.
SymmetryReport validate_symmetries(const CurvatureTensor4& r);

/// Matrix M with inner(M z, w) = R(x, y, z, w) for all z, w.
Mat curvature_operator(const CurvatureTensor4& r, const Vec& x, const Vec& y);

/// Matrix of the Jacobi operator y -> R(y, x) x.
Mat jacobi(const CurvatureTensor4& r, const Vec& x);

PlaneOperator plane_operator(const CurvatureTensor4& r, const Vec& v1, const Vec& v2);
PlaneOperator plane_operator(const BilinearSkewMap& t, const Vec& v1, const Vec& v2);

/// Plane operator for any non-degenerate plane, spacelike or not. Only the
/// rank of the result is basis-invariant for non-spacelike planes.
PlaneOperator plane_operator_indefinite(const CurvatureTensor4& r, const Vec& v1, const Vec& v2);
PlaneOperator plane_operator_indefinite(const BilinearSkewMap& t, const Vec& v1, const Vec& v2);

/// R_phi(x,y,z,w) = <phi y, z><phi x, w> - <phi x, z><phi y, w> over one space.
CurvatureTensor4 make_R_phi(const LinearMap& phi);

/// T_phi(a1,a2) b = <phi a2, b> phi a1 - <phi a1, b> phi a2.
BilinearSkewMap make_T_phi(const LinearMap& phi);

/// T_chi_xi(a1,a2) b = <chi(a1,a2), b> xi - <xi, b> chi(a1,a2).
BilinearSkewMap make_T_chi_xi(const AlternatingMap& chi, const Vec& xi);

/// Four-index array of a skew map on a single space:
/// R(i,j,k,l) = <T(e_i,e_j) e_k, e_l>.
CurvatureTensor4 tensor_from_skew_map(const BilinearSkewMap& t);

/// Inverse of tensor_from_skew_map on pair-antisymmetric arrays:
/// block(i,j) = curvature operator of (e_i, e_j).
BilinearSkewMap skew_map_from_tensor(const CurvatureTensor4& r);

/// True when gram * m is antisymmetric, i.e. m is skew-adjoint for the space.
bool in_so(const Mat& m, const SignatureSpace& space);

/// Alternating 2-form of a skew operator: omega(i,j) = <t e_i, e_j>.
Mat omega(const Mat& t, const SignatureSpace& space);

/// True iff the wedge square of the form vanishes identically, which for the
/// form of a skew operator happens exactly when the operator has rank <= 2.
bool wedge_square_zero(const Mat& om);

JordanType jordan_type(const PlaneOperator& po);

Rational trace(const Mat& m);

/// Gram determinant of the pair (v1, v2).
Rational gram_det2(const SignatureSpace& s, const Vec& v1, const Vec& v2);

/// True when span{v1, v2} is 2-dimensional and positive definite.
bool is_spacelike_plane(const SignatureSpace& s, const Vec& v1, const Vec& v2);

/// Bilinear extension Sum_{i,j} v1_i v2_j block(i,j).
Mat skew_combination(const BilinearSkewMap& t, const Vec& v1, const Vec& v2);

}  // namespace curvrank
