#include "curvrank/fixtures.hpp"

#include "curvrank/error.hpp"

namespace curvrank {

namespace {

Rational det4(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  Mat m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, 0) = a[i];
    m(i, 1) = b[i];
    m(i, 2) = c[i];
    m(i, 3) = d[i];
  }
  return det(m);
}

/// Skew map on (p,4): <T(v1,v2)v3, v4> is the determinant of the projections
/// of the four vectors onto the last four (spacelike) coordinates.
BilinearSkewMap determinant_map(std::size_t p) {
  SignatureSpace s = SignatureSpace::standard(p, 4);
  const std::size_t n = s.dim();
  auto proj = [&](std::size_t i) {
    Vec v(4);
    if (i >= p) v[i - p] = 1;
    return v;
  };
  BilinearSkewMap t(s, s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Mat d(n, n);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) d(k, l) = det4(proj(i), proj(j), proj(k), proj(l));
      t.set_block(i, j, s.gram_inv * transpose(d));
    }
  return t;
}

/// Endomorphism of (p,p+1): the i-th timelike and spacelike directions are
/// folded onto the null vector e_i^- + e_i^+ (with sign), and the last
/// spacelike direction is fixed.
LinearMap folded_null_map_82(std::size_t p) {
  const std::size_t q = p + 1;
  SignatureSpace s = SignatureSpace::standard(p, q);
  Mat m(s.dim(), s.dim());
  for (std::size_t i = 0; i < p; ++i) {
    m(i, i) = -1;
    m(p + i, i) = -1;
    m(i, p + i) = 1;
    m(p + i, p + i) = 1;
  }
  m(p + q - 1, p + q - 1) = 1;
  return LinearMap::endo(s, std::move(m));
}

/// Endomorphism of (q+1,q): folds the first q pairs onto null vectors and
/// annihilates the last timelike direction, so the range is totally isotropic.
LinearMap folded_null_map_83(std::size_t p) {
  const std::size_t q = p - 1;
  SignatureSpace s = SignatureSpace::standard(p, q);
  Mat m(s.dim(), s.dim());
  for (std::size_t i = 0; i < q; ++i) {
    m(i, i) = -1;
    m(p + i, i) = -1;
    m(i, p + i) = 1;
    m(p + i, p + i) = 1;
  }
  return LinearMap::endo(s, std::move(m));
}

}  // namespace

Fixture fixture(const std::string& name, std::size_t p) {
  if (name == "8.1") return {name, p, 4, determinant_map(p)};
  if (name == "8.2") {
    if (p < 4) fail(Errc::BadParams, "fixture 8.2 needs p >= 4 so that q = p+1 >= 5");
    return {name, p, p + 1, folded_null_map_82(p)};
  }
  if (name == "8.3") {
    if (p < 6) fail(Errc::BadParams, "fixture 8.3 needs p >= 6 so that q = p-1 >= 5");
    return {name, p, p - 1, folded_null_map_83(p)};
  }
  fail(Errc::BadParams, "unknown fixture name '" + name + "'");
}

}  // namespace curvrank
