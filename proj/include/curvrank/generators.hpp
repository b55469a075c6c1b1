#pragma once

#include <cstdint>
#include <utility>

#include "curvrank/curvature.hpp"

namespace curvrank::gen {

/// Integer-entry spacelike plane basis (v1, v2) with entries in
/// [-bound, bound], found by bounded rejection sampling; deterministic per
/// (space, seed, bound). Throws Unsatisfiable when the space admits no
/// spacelike plane or the retry budget runs out.
std::pair<Vec, Vec> random_spacelike_plane(const SignatureSpace& space, std::uint64_t seed,
                                           long bound = 3);

/// Self-adjoint endomorphism of the standard (p,q) space whose kernel has the
/// requested dimension and contains no spacelike vector, so the map is
/// admissible. Requires kernel_dim <= p and q >= 5. Deterministic per seed.
LinearMap random_admissible_phi(std::size_t p, std::size_t q, std::size_t kernel_dim,
                                std::uint64_t seed);

/// Self-adjoint endomorphism whose kernel is one spacelike line, the failure
/// mode the admissibility test must reject. Requires q >= 2.
LinearMap random_spacelike_kernel_phi(std::size_t p, std::size_t q, std::uint64_t seed);

/// Random element of the skew algebra of the space.
Mat random_skew_operator(const SignatureSpace& space, std::uint64_t seed);

/// Injective linear map between two spaces (full column rank), for
/// domain-to-codomain round trips. Requires dim(codomain) >= dim(domain).
LinearMap random_injective_map(const SignatureSpace& domain, const SignatureSpace& codomain,
                               std::uint64_t seed);

/// Alternating map and pivot vector with chi(v1,v2) and xi independent for
/// every 2-plane: the coordinate alternating embedding composed with a random
/// invertible change of the codomain. The codomain is positive definite of
/// dimension dim(domain)*(dim(domain)-1)/2 + 1.
std::pair<AlternatingMap, Vec> random_independent_chi_xi(const SignatureSpace& domain,
                                                         std::uint64_t seed);

}  // namespace curvrank::gen
