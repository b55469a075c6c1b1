#pragma once

#include <cstdint>
#include <vector>

#include "curvrank/reconstruct.hpp"

namespace curvrank {

/// Graph hypersurface data for a self-adjoint endomorphism: the ambient
/// space extends the base by one direction of square epsilon, and the
/// immersion sends y to y + (1/2)<phi y, y> times that direction.
struct Immersion {
  LinearMap phi;
  int epsilon = 1;
  SignatureSpace ambient;
};

Immersion embed(const LinearMap& phi, int epsilon);

/// F(y): the immersed point in the ambient space.
Vec embed_point(const Immersion& imm, const Vec& y);

/// d/dy^i F at y: e_i plus the height gradient component.
Vec immersion_tangent(const Immersion& imm, const Vec& y, std::size_t i);

/// Induced metric as a polynomial in the base point: constant part plus a
/// biquadratic coefficient array, g_ij(y) = gram_ij + sum quad(i,j,k,l) y^k y^l.
class PolyMetric {
 public:
  PolyMetric(Mat gram, std::size_t dim);

  const Mat& gram() const noexcept { return gram_; }
  std::size_t dim() const noexcept { return dim_; }

  Rational& quad(std::size_t i, std::size_t j, std::size_t k, std::size_t l);
  const Rational& quad(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;

 private:
  Mat gram_;
  std::size_t dim_;
  std::vector<Rational> coef_;
};

PolyMetric poly_metric(const Immersion& imm);

/// Exact evaluation of the metric polynomial at a rational point.
Mat first_fundamental_form(const PolyMetric& pm, const Vec& y);

/// Curvature tensor of the induced metric at y, over the derived space
/// carrying the evaluated metric as its Gram matrix. Uses the flat-ambient
/// Gauss identity with the unnormalized normal. Throws DegeneratePoint when
/// the normal is null there.
CurvatureTensor4 gauss_curvature_tensor(const Immersion& imm, const Vec& y);

/// Origin curvature from the metric second derivatives alone; independent
/// route that must agree with gauss_curvature_tensor at 0.
CurvatureTensor4 origin_curvature_from_metric(const Immersion& imm);

/// The shape operator at the origin, epsilon * phi.
LinearMap shape_operator_origin(const Immersion& imm);

struct RankSample {
  Vec point;
  std::size_t rank = 0;
};

struct RealizationReport {
  bool ok = false;
  int epsilon = 1;
  LinearMap phi;
  bool origin_exact = false;
  std::vector<RankSample> rank_samples;
};

/// Factors R as epsilon * R_phi with rational phi, embeds, and checks the
/// realized curvature: exact equality at the origin and rank 2 on sampled
/// spacelike planes at sampled near-origin points. Throws NotRankTwo when R
/// fails the symmetry or sampled-rank precondition, VerificationFailed when
/// no rational self-adjoint generator exists.
RealizationReport verify_realization(const CurvatureTensor4& r, std::size_t point_samples = 8,
                                     std::uint64_t seed = kDefaultSeed);

}  // namespace curvrank
