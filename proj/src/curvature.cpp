#include "curvrank/curvature.hpp"

#include <utility>

#include "curvrank/error.hpp"

namespace curvrank {

Vec AlternatingMap::value(std::size_t i, std::size_t j) const {
  if (i == j) return zero_vec(codomain.dim());
  bool flip = i > j;
  auto it = values.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == values.end()) return zero_vec(codomain.dim());
  return flip ? vscale(Rational(-1), it->second) : it->second;
}

void AlternatingMap::set_value(std::size_t i, std::size_t j, Vec v) {
  if (i == j) fail(Errc::BadParams, "alternating map has no diagonal values");
  if (v.size() != codomain.dim())
    fail(Errc::DimensionMismatch, "alternating map value outside codomain");
  if (i > j) {
    std::swap(i, j);
    v = vscale(Rational(-1), v);
  }
  values[{i, j}] = std::move(v);
}

CurvatureTensor4::CurvatureTensor4(SignatureSpace space)
    : space_(std::move(space)), comp_(space_.dim() * space_.dim() * space_.dim() * space_.dim()) {}

Rational& CurvatureTensor4::at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  const std::size_t n = space_.dim();
  return comp_[((i * n + j) * n + k) * n + l];
}

const Rational& CurvatureTensor4::at(std::size_t i, std::size_t j, std::size_t k,
                                     std::size_t l) const {
  const std::size_t n = space_.dim();
  return comp_[((i * n + j) * n + k) * n + l];
}

BilinearSkewMap::BilinearSkewMap(SignatureSpace domain, SignatureSpace codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  const std::size_t d = domain_.dim();
  blocks_.assign(d * (d - 1) / 2, Mat(codomain_.dim(), codomain_.dim()));
}

std::size_t BilinearSkewMap::index(std::size_t i, std::size_t j) const {
  const std::size_t d = domain_.dim();
  return i * d - i * (i + 1) / 2 + (j - i - 1);
}

Mat BilinearSkewMap::block(std::size_t i, std::size_t j) const {
  if (i >= domain_.dim() || j >= domain_.dim())
    fail(Errc::DimensionMismatch, "block index outside domain");
  if (i == j) return Mat(codomain_.dim(), codomain_.dim());
  if (i < j) return blocks_[index(i, j)];
  return -blocks_[index(j, i)];
}

void BilinearSkewMap::set_block(std::size_t i, std::size_t j, Mat m) {
  if (i >= domain_.dim() || j >= domain_.dim())
    fail(Errc::DimensionMismatch, "block index outside domain");
  if (i == j) fail(Errc::BadParams, "diagonal blocks are identically zero");
  if (m.rows() != codomain_.dim() || m.cols() != codomain_.dim())
    fail(Errc::DimensionMismatch, "block shape does not match codomain");
  if (i < j) {
    blocks_[index(i, j)] = std::move(m);
  } else {
    blocks_[index(j, i)] = -m;
  }
}

SymmetryReport validate_symmetries(const CurvatureTensor4& r) {
  const std::size_t n = r.space().dim();
  SymmetryReport rep{true, true, true};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Rational& v = r.at(i, j, k, l);
          if (v != -r.at(j, i, k, l) || v != -r.at(i, j, l, k)) rep.antisymmetry_ok = false;
          if (v != r.at(k, l, i, j)) rep.pair_symmetry_ok = false;
          if (sgn(v + r.at(j, k, i, l) + r.at(k, i, j, l)) != 0) rep.bianchi_ok = false;
        }
  return rep;
}

Mat curvature_operator(const CurvatureTensor4& r, const Vec& x, const Vec& y) {
  const std::size_t n = r.space().dim();
  if (x.size() != n || y.size() != n)
    fail(Errc::DimensionMismatch, "curvature operator arguments outside the space");
  Mat c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) c(k, l) += w * r.at(i, j, k, l);
    }
  }
  return r.space().gram_inv * transpose(c);
}

Mat jacobi(const CurvatureTensor4& r, const Vec& x) {
  const std::size_t n = r.space().dim();
  if (x.size() != n) fail(Errc::DimensionMismatch, "jacobi argument outside the space");
  Mat c(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      Rational acc(0);
      for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (sgn(x[j]) == 0) continue;
          acc += x[i] * x[j] * r.at(k, i, j, l);
        }
      }
      c(k, l) = acc;
    }
  return r.space().gram_inv * transpose(c);
}

Rational gram_det2(const SignatureSpace& s, const Vec& v1, const Vec& v2) {
  Rational a = inner(s, v1, v1), b = inner(s, v1, v2), c = inner(s, v2, v2);
  return a * c - b * b;
}

bool is_spacelike_plane(const SignatureSpace& s, const Vec& v1, const Vec& v2) {
  if (rank(from_cols({v1, v2}, s.dim())) != 2) return false;
  return sgn(inner(s, v1, v1)) > 0 && sgn(gram_det2(s, v1, v2)) > 0;
}

namespace {

void check_plane(const SignatureSpace& s, const Vec& v1, const Vec& v2, bool require_spacelike) {
  if (v1.size() != s.dim() || v2.size() != s.dim())
    fail(Errc::DimensionMismatch, "plane vectors outside the space");
  if (rank(from_cols({v1, v2}, s.dim())) != 2)
    fail(Errc::Degenerate, "plane vectors are linearly dependent");
  Rational g = gram_det2(s, v1, v2);
  if (require_spacelike) {
    if (sgn(g) <= 0 || sgn(inner(s, v1, v1)) <= 0)
      fail(Errc::NotSpacelike, "plane is not spacelike");
  } else if (sgn(g) == 0) {
    fail(Errc::Degenerate, "plane metric is degenerate");
  }
}

}  // namespace

PlaneOperator plane_operator(const CurvatureTensor4& r, const Vec& v1, const Vec& v2) {
  check_plane(r.space(), v1, v2, true);
  return {curvature_operator(r, v1, v2), gram_det2(r.space(), v1, v2)};
}

PlaneOperator plane_operator(const BilinearSkewMap& t, const Vec& v1, const Vec& v2) {
  check_plane(t.domain(), v1, v2, true);
  return {skew_combination(t, v1, v2), gram_det2(t.domain(), v1, v2)};
}

PlaneOperator plane_operator_indefinite(const CurvatureTensor4& r, const Vec& v1, const Vec& v2) {
  check_plane(r.space(), v1, v2, false);
  return {curvature_operator(r, v1, v2), gram_det2(r.space(), v1, v2)};
}

PlaneOperator plane_operator_indefinite(const BilinearSkewMap& t, const Vec& v1, const Vec& v2) {
  check_plane(t.domain(), v1, v2, false);
  return {skew_combination(t, v1, v2), gram_det2(t.domain(), v1, v2)};
}

CurvatureTensor4 make_R_phi(const LinearMap& phi) {
  if (!(phi.domain == phi.codomain))
    fail(Errc::AmbientMismatch, "curvature construction needs an endomorphism");
  const SignatureSpace& s = phi.domain;
  const std::size_t n = s.dim();
  if (phi.matrix.rows() != n || phi.matrix.cols() != n)
    fail(Errc::DimensionMismatch, "endomorphism matrix shape mismatch");
  Mat c = transpose(phi.matrix) * s.gram;
  CurvatureTensor4 r(s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          r.at(i, j, k, l) = c(j, k) * c(i, l) - c(i, k) * c(j, l);
  return r;
}

BilinearSkewMap make_T_phi(const LinearMap& phi) {
  const std::size_t da = phi.domain.dim(), db = phi.codomain.dim();
  if (phi.matrix.rows() != db || phi.matrix.cols() != da)
    fail(Errc::DimensionMismatch, "linear map matrix shape mismatch");
  BilinearSkewMap t(phi.domain, phi.codomain);
  std::vector<Vec> image(da);
  std::vector<Vec> dual(da);
  for (std::size_t i = 0; i < da; ++i) {
    image[i] = col(phi.matrix, i);
    dual[i] = phi.codomain.gram * image[i];
  }
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = i + 1; j < da; ++j) {
      Mat m(db, db);
      for (std::size_t r = 0; r < db; ++r)
        for (std::size_t c = 0; c < db; ++c)
          m(r, c) = image[i][r] * dual[j][c] - image[j][r] * dual[i][c];
      t.set_block(i, j, std::move(m));
    }
  return t;
}

BilinearSkewMap make_T_chi_xi(const AlternatingMap& chi, const Vec& xi) {
  const std::size_t da = chi.domain.dim(), db = chi.codomain.dim();
  if (xi.size() != db) fail(Errc::DimensionMismatch, "xi outside the codomain");
  BilinearSkewMap t(chi.domain, chi.codomain);
  Vec dual_xi = chi.codomain.gram * xi;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = i + 1; j < da; ++j) {
      Vec c = chi.value(i, j);
      Vec dual_c = chi.codomain.gram * c;
      Mat m(db, db);
      for (std::size_t r = 0; r < db; ++r)
        for (std::size_t s = 0; s < db; ++s) m(r, s) = xi[r] * dual_c[s] - c[r] * dual_xi[s];
      t.set_block(i, j, std::move(m));
    }
  return t;
}

CurvatureTensor4 tensor_from_skew_map(const BilinearSkewMap& t) {
  if (!(t.domain() == t.codomain()))
    fail(Errc::AmbientMismatch, "tensor form needs matching domain and codomain");
  const SignatureSpace& s = t.domain();
  const std::size_t n = s.dim();
  CurvatureTensor4 r(s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Mat slab = transpose(t.block(i, j)) * s.gram;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          r.at(i, j, k, l) = slab(k, l);
          r.at(j, i, k, l) = -slab(k, l);
        }
    }
  return r;
}

BilinearSkewMap skew_map_from_tensor(const CurvatureTensor4& r) {
  const SignatureSpace& s = r.space();
  const std::size_t n = s.dim();
  BilinearSkewMap t(s, s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      t.set_block(i, j, curvature_operator(r, unit_vec(n, i), unit_vec(n, j)));
  return t;
}

bool in_so(const Mat& m, const SignatureSpace& space) {
  if (m.rows() != space.dim() || m.cols() != space.dim()) return false;
  return is_antisymmetric(space.gram * m);
}

Mat omega(const Mat& t, const SignatureSpace& space) {
  if (!in_so(t, space)) fail(Errc::NotSkew, "operator is not skew-adjoint for the space");
  return transpose(t) * space.gram;
}

bool wedge_square_zero(const Mat& om) {
  if (!is_antisymmetric(om)) fail(Errc::NotSkew, "form matrix is not antisymmetric");
  const std::size_t n = om.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          if (sgn(om(i, j) * om(k, l) - om(i, k) * om(j, l) + om(i, l) * om(j, k)) != 0)
            return false;
  return true;
}

Rational trace(const Mat& m) {
  if (m.rows() != m.cols()) fail(Errc::DimensionMismatch, "trace of a non-square matrix");
  Rational acc(0);
  for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, i);
  return acc;
}

JordanType jordan_type(const PlaneOperator& po) {
  std::size_t r = rank(po.op);
  if (r == 0) return {JordanTag::Zero, std::nullopt};
  if (r != 2) fail(Errc::UnsupportedRank, "classification applies to operators of rank 0 or 2");
  Rational c = trace(po.op * po.op) / (2 * po.gramdet);
  if (sgn(c) > 0) return {JordanTag::RealPair, c};
  if (sgn(c) < 0) return {JordanTag::ImaginaryPair, -c};
  Mat sq = po.op * po.op;
  if (!is_zero(sq)) {
    if (!is_zero(sq * po.op))
      fail(Errc::UnsupportedRank, "traceless non-nilpotent operator cannot have rank 2");
    return {JordanTag::Nilpotent3, std::nullopt};
  }
  return {JordanTag::Nilpotent2, std::nullopt};
}

const char* jordan_tag_name(JordanTag tag) {
  switch (tag) {
    case JordanTag::Zero: return "Zero";
    case JordanTag::ImaginaryPair: return "ImaginaryPair";
    case JordanTag::RealPair: return "RealPair";
    case JordanTag::Nilpotent2: return "Nilpotent2";
    case JordanTag::Nilpotent3: return "Nilpotent3";
  }
  return "Unknown";
}

Mat skew_combination(const BilinearSkewMap& t, const Vec& v1, const Vec& v2) {
  const std::size_t da = t.domain().dim(), db = t.codomain().dim();
  if (v1.size() != da || v2.size() != da)
    fail(Errc::DimensionMismatch, "combination arguments outside the domain");
  Mat acc(db, db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = i + 1; j < da; ++j) {
      Rational w = v1[i] * v2[j] - v1[j] * v2[i];
      if (sgn(w) == 0) continue;
      Mat b = t.block(i, j);
      for (std::size_t r = 0; r < db; ++r)
        for (std::size_t c = 0; c < db; ++c) acc(r, c) += w * b(r, c);
    }
  return acc;
}

}  // namespace curvrank
