#include "curvrank/realize.hpp"

#include <utility>

#include "curvrank/classify.hpp"
#include "curvrank/error.hpp"
#include "curvrank/generators.hpp"
#include "curvrank/rng.hpp"

namespace curvrank {

namespace {

Mat lowered(const LinearMap& phi) { return phi.domain.gram * phi.matrix; }

Mat ambient_gram(const SignatureSpace& base, int epsilon) {
  const std::size_t m = base.dim();
  Mat g(m + 1, m + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(i, j) = base.gram(i, j);
  g(m, m) = epsilon;
  return g;
}

}  // namespace

Immersion embed(const LinearMap& phi, int epsilon) {
  if (epsilon != 1 && epsilon != -1) fail(Errc::BadParams, "epsilon must be +1 or -1");
  if (!is_self_adjoint(phi)) fail(Errc::NotSelfAdjoint, "graph immersions need a self-adjoint map");
  const SignatureSpace& base = phi.domain;
  SignatureSpace ambient = SignatureSpace::with_gram(base.p + (epsilon < 0 ? 1 : 0),
                                                     base.q + (epsilon > 0 ? 1 : 0),
                                                     ambient_gram(base, epsilon));
  return Immersion{phi, epsilon, std::move(ambient)};
}

Vec embed_point(const Immersion& imm, const Vec& y) {
  const std::size_t m = imm.phi.domain.dim();
  if (y.size() != m) fail(Errc::DimensionMismatch, "point outside the base space");
  Vec out(m + 1);
  for (std::size_t i = 0; i < m; ++i) out[i] = y[i];
  out[m] = inner(imm.phi.domain, imm.phi.matrix * y, y) / 2;
  return out;
}

Vec immersion_tangent(const Immersion& imm, const Vec& y, std::size_t i) {
  const std::size_t m = imm.phi.domain.dim();
  if (y.size() != m || i >= m) fail(Errc::DimensionMismatch, "tangent index outside the base");
  Vec w = lowered(imm.phi) * y;
  Vec out(m + 1);
  out[i] = 1;
  out[m] = w[i];
  return out;
}

PolyMetric::PolyMetric(Mat gram, std::size_t dim)
    : gram_(std::move(gram)), dim_(dim), coef_(dim * dim * dim * dim, Rational(0)) {}

Rational& PolyMetric::quad(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  return coef_[((i * dim_ + j) * dim_ + k) * dim_ + l];
}

const Rational& PolyMetric::quad(std::size_t i, std::size_t j, std::size_t k,
                                 std::size_t l) const {
  return coef_[((i * dim_ + j) * dim_ + k) * dim_ + l];
}

PolyMetric poly_metric(const Immersion& imm) {
  const std::size_t m = imm.phi.domain.dim();
  Mat c = lowered(imm.phi);
  PolyMetric pm(imm.phi.domain.gram, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
          pm.quad(i, j, k, l) = rat(imm.epsilon) * c(i, k) * c(j, l);
  return pm;
}

Mat first_fundamental_form(const PolyMetric& pm, const Vec& y) {
  const std::size_t m = pm.dim();
  if (y.size() != m) fail(Errc::DimensionMismatch, "point outside the base space");
  Mat g = pm.gram();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Rational acc = 0;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) acc += pm.quad(i, j, k, l) * y[k] * y[l];
      g(i, j) += acc;
    }
  return g;
}

CurvatureTensor4 gauss_curvature_tensor(const Immersion& imm, const Vec& y) {
  const SignatureSpace& base = imm.phi.domain;
  const std::size_t m = base.dim();
  if (y.size() != m) fail(Errc::DimensionMismatch, "point outside the base space");
  Vec py = imm.phi.matrix * y;
  Rational normal_sq = inner(base, py, py) + imm.epsilon;
  if (normal_sq == 0) fail(Errc::DegeneratePoint, "the hypersurface normal is null at this point");

  Mat c = lowered(imm.phi);
  Vec w = c * y;
  Mat g = base.gram;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(i, j) += rat(imm.epsilon) * w[i] * w[j];
  Inertia in = signature_of_symmetric(g);
  SignatureSpace space_y = SignatureSpace::with_gram(in.n_neg, in.n_pos, std::move(g));

  CurvatureTensor4 r(space_y);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
          r.at(i, j, k, l) = (c(i, l) * c(j, k) - c(i, k) * c(j, l)) / normal_sq;
  return r;
}

CurvatureTensor4 origin_curvature_from_metric(const Immersion& imm) {
  const SignatureSpace& base = imm.phi.domain;
  const std::size_t m = base.dim();
  PolyMetric pm = poly_metric(imm);
  auto dd = [&pm](std::size_t a, std::size_t b, std::size_t i, std::size_t j) {
    return pm.quad(i, j, a, b) + pm.quad(i, j, b, a);
  };
  CurvatureTensor4 r(base);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
          r.at(i, j, k, l) = (dd(i, k, j, l) + dd(j, l, i, k) - dd(i, l, j, k) - dd(j, k, i, l)) / 2;
  return r;
}

LinearMap shape_operator_origin(const Immersion& imm) {
  return LinearMap::endo(imm.phi.domain, rat(imm.epsilon) * imm.phi.matrix);
}

RealizationReport verify_realization(const CurvatureTensor4& r, std::size_t point_samples,
                                     std::uint64_t seed) {
  const SignatureSpace& space = r.space();
  if (!validate_symmetries(r).all())
    fail(Errc::NotRankTwo, "input is not an algebraic curvature tensor");
  Rng root(seed, 0x8EA1);
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto [v1, v2] = gen::random_spacelike_plane(space, root.fork(s).next_u64());
    if (rank(plane_operator(r, v1, v2).op) != 2)
      fail(Errc::NotRankTwo, "a sampled spacelike plane is not rank 2");
  }

  Decomposition d = decompose(skew_map_from_tensor(r), root.fork(998).next_u64());
  if (!std::holds_alternative<PhiForm>(d))
    fail(Errc::VerificationFailed, "no single-endomorphism generator found");
  const PhiForm& f = std::get<PhiForm>(d);
  auto root_mu = exact_sqrt(f.mu);
  if (!root_mu)
    fail(Errc::VerificationFailed, "the generator scale is not a rational square");
  LinearMap phi = LinearMap::endo(space, *root_mu * f.phi.matrix);
  if (!is_self_adjoint(phi))
    fail(Errc::VerificationFailed, "the recovered generator is not self-adjoint");

  Immersion imm = embed(phi, f.epsilon);
  RealizationReport report;
  report.epsilon = f.epsilon;
  report.phi = phi;
  CurvatureTensor4 at_origin = gauss_curvature_tensor(imm, zero_vec(space.dim()));
  report.origin_exact =
      at_origin == r && origin_curvature_from_metric(imm) == at_origin;

  bool ranks_ok = true;
  std::uint64_t attempt = 0;
  while (report.rank_samples.size() < point_samples && attempt < 20 * point_samples + 40) {
    Rng point_rng = root.fork(2000 + attempt);
    ++attempt;
    Vec y(space.dim());
    bool origin = true;
    for (Rational& x : y) {
      long step = point_rng.int_in(-1, 1);
      if (step != 0) origin = false;
      x = rat(step, 8);
    }
    if (origin) continue;
    Vec py = imm.phi.matrix * y;
    if (inner(space, py, py) + imm.epsilon == 0) continue;
    CurvatureTensor4 local = gauss_curvature_tensor(imm, y);
    std::size_t seen = 0;
    for (std::uint64_t ps = 0; ps < 5; ++ps) {
      auto [v1, v2] =
          gen::random_spacelike_plane(local.space(), point_rng.fork(ps).next_u64());
      std::size_t rk = rank(plane_operator(local, v1, v2).op);
      seen = rk > seen ? rk : seen;
    }
    if (seen != 2) ranks_ok = false;
    report.rank_samples.push_back(RankSample{std::move(y), seen});
  }

  report.ok = report.origin_exact && ranks_ok && report.rank_samples.size() == point_samples;
  return report;
}

}  // namespace curvrank
