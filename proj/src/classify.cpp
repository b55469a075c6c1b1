#include "curvrank/classify.hpp"

#include "curvrank/error.hpp"
#include "curvrank/generators.hpp"
#include "curvrank/rng.hpp"

namespace curvrank {

bool is_self_adjoint(const LinearMap& phi) {
  if (!(phi.domain == phi.codomain))
    fail(Errc::AmbientMismatch, "self-adjointness needs an endomorphism");
  return is_symmetric(phi.domain.gram * phi.matrix);
}

bool is_admissible_phi(const LinearMap& phi) {
  Mat kernel = kernel_columns(phi.matrix);
  if (kernel.cols() == 0) return true;
  Mat restricted = transpose(kernel) * phi.domain.gram * kernel;
  return signature_of_symmetric(restricted).n_pos == 0;
}

ChiXiVerdict is_admissible_chi_xi(const AlternatingMap& chi, const Vec& xi,
                                  std::size_t sample_count, std::uint64_t seed) {
  if (xi.size() != chi.codomain.dim()) fail(Errc::DimensionMismatch, "xi outside the codomain");
  Rng root(seed, 0xAD);
  for (std::size_t s = 0; s < sample_count; ++s) {
    auto [v1, v2] = gen::random_spacelike_plane(chi.domain, root.fork(s).next_u64());
    Vec value(chi.codomain.dim());
    for (std::size_t i = 0; i < chi.domain.dim(); ++i)
      for (std::size_t j = i + 1; j < chi.domain.dim(); ++j) {
        Rational w = v1[i] * v2[j] - v1[j] * v2[i];
        if (sgn(w) == 0) continue;
        value = vadd(value, vscale(w, chi.value(i, j)));
      }
    if (rank(from_cols({value, xi}, chi.codomain.dim())) != 2)
      return {false, PlanePair{std::move(v1), std::move(v2)}};
  }
  return {true, std::nullopt};
}

const char* ip_tag_name(IpTag tag) {
  switch (tag) {
    case IpTag::ConformalC: return "ConformalC";
    case IpTag::TotallyIsotropic: return "TotallyIsotropic";
    case IpTag::NotIP: return "NotIP";
  }
  return "Unknown";
}

IpVerdict ip_class(const LinearMap& phi) {
  if (!is_self_adjoint(phi)) fail(Errc::NotSelfAdjoint, "classification needs a self-adjoint map");
  if (!is_admissible_phi(phi))
    fail(Errc::NotAdmissible, "classification needs an admissible map");
  const Mat& g = phi.domain.gram;
  Mat pulled = transpose(phi.matrix) * g * phi.matrix;
  if (is_zero(pulled)) return {IpTag::TotallyIsotropic, std::nullopt};
  const std::size_t n = g.rows();
  Rational c(0);
  for (std::size_t i = 0; i < n && sgn(c) == 0; ++i)
    for (std::size_t j = 0; j < n && sgn(c) == 0; ++j)
      if (sgn(g(i, j)) != 0) c = pulled(i, j) / g(i, j);
  if (sgn(c) != 0 && pulled == c * g) return {IpTag::ConformalC, c};
  return {IpTag::NotIP, std::nullopt};
}

IpSamplingVerdict is_ip_by_sampling(const CurvatureTensor4& r, std::size_t sample_count,
                                    std::uint64_t seed,
                                    const std::vector<PlanePair>& forced_planes) {
  Rng root(seed, 0x1B);
  std::optional<IpSample> first;
  auto visit = [&](PlanePair plane) -> std::optional<IpSamplingVerdict> {
    JordanType type = jordan_type(plane_operator(r, plane.v1, plane.v2));
    if (!first) {
      first = IpSample{std::move(plane), type};
      return std::nullopt;
    }
    if (type == first->type) return std::nullopt;
    IpSamplingVerdict verdict;
    verdict.constant = false;
    verdict.witness = {*first, IpSample{std::move(plane), type}};
    return verdict;
  };

  for (const PlanePair& plane : forced_planes)
    if (auto verdict = visit(plane)) return *verdict;
  for (std::size_t s = 0; s < sample_count; ++s) {
    auto [v1, v2] = gen::random_spacelike_plane(r.space(), root.fork(s).next_u64());
    if (auto verdict = visit(PlanePair{std::move(v1), std::move(v2)})) return *verdict;
  }

  IpSamplingVerdict verdict;
  verdict.constant = true;
  if (first) verdict.common = first->type;
  return verdict;
}

}  // namespace curvrank
