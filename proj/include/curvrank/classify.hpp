#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "curvrank/curvature.hpp"

namespace curvrank {

struct PlanePair {
  Vec v1;
  Vec v2;
};

/// True iff gram * matrix is symmetric, i.e. <phi x, y> = <x, phi y>.
bool is_self_adjoint(const LinearMap& phi);

/// True iff the kernel contains no spacelike vector, decided exactly: the
/// domain Gram restricted to the kernel must have no positive direction.
bool is_admissible_phi(const LinearMap& phi);

/// Sampling verdict for the pair construction: admissible requires
/// chi(v1,v2) and xi to be independent on every spacelike plane. A pass is
/// probabilistic evidence over sample_count planes; a failure carries the
/// witness plane.
struct ChiXiVerdict {
  bool admissible = false;
  std::optional<PlanePair> witness;
};

ChiXiVerdict is_admissible_chi_xi(const AlternatingMap& chi, const Vec& xi,
                                  std::size_t sample_count, std::uint64_t seed);

enum class IpTag { ConformalC, TotallyIsotropic, NotIP };

const char* ip_tag_name(IpTag tag);

/// Exact classification of a self-adjoint admissible endomorphism:
/// ConformalC(C) when <phi v, phi w> = C <v, w> with C != 0, TotallyIsotropic
/// when the range is totally isotropic, NotIP otherwise. The first two are
/// exactly the cases whose curvature has constant plane type.
struct IpVerdict {
  IpTag tag = IpTag::NotIP;
  std::optional<Rational> C;

  bool operator==(const IpVerdict&) const = default;
};

IpVerdict ip_class(const LinearMap& phi);

struct IpSample {
  PlanePair plane;
  JordanType type;
};

/// Result of sampling plane types: either every sampled spacelike plane has
/// the same (tag, lambda_sq), or a witness pair of differing planes.
struct IpSamplingVerdict {
  bool constant = false;
  JordanType common;
  std::optional<std::pair<IpSample, IpSample>> witness;
};

/// Samples spacelike planes (forced planes first, then seeded random draws)
/// and compares jordan_type across them.
IpSamplingVerdict is_ip_by_sampling(const CurvatureTensor4& r, std::size_t sample_count,
                                    std::uint64_t seed,
                                    const std::vector<PlanePair>& forced_planes = {});

}  // namespace curvrank
