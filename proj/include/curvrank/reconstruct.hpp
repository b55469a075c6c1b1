#pragma once

#include <cstdint>
#include <variant>

#include "curvrank/curvature.hpp"

namespace curvrank {

/// Involution carrying the indefinite skew algebra of a space onto the skew
/// algebra of a positive-definite inner product on the same coordinates:
/// psi^2 = id, positive_gram = gram * psi is symmetric positive definite, and
/// gram * t is antisymmetric iff positive_gram * (psi * t) is.
struct Flattener {
  Mat psi;
  Mat positive_gram;
};

Flattener flatten(const SignatureSpace& b);

/// The line every block through [a] must share: the intersection of
/// Range(T(a, a2)) and Range(T(a, a3)), cross-checked for containment in
/// Range(T(a, c)) over a deterministic set of further probe partners c.
/// Requires span{a, a2} and span{a, a3} spacelike and a, a2, a3 independent.
/// Throws DegenerateLine when the intersection is not a line or a probe
/// range misses it.
Subspace phi_line(const BilinearSkewMap& t, const Vec& a, const Vec& a2, const Vec& a3);

/// T(a1, a2) b = <chi(a1, a2), b> xi - <xi, b> chi(a1, a2), exactly.
struct ChiXiForm {
  AlternatingMap chi;
  Vec xi;
};

/// T = epsilon * mu * T_phi exactly, with mu > 0 and epsilon in {+1, -1}.
struct PhiForm {
  int epsilon = 1;
  Rational mu;
  LinearMap phi;
};

using Decomposition = std::variant<ChiXiForm, PhiForm>;

inline constexpr std::uint64_t kDefaultSeed = 2026;

/// Decides which of the two forms generates T and reconstructs the
/// generator, verifying the result exactly before returning it. The seed
/// only steers the search for probe vectors; the verified output does not
/// depend on it.
Decomposition decompose(const BilinearSkewMap& t, std::uint64_t seed = kDefaultSeed);

/// Rebuilds the map a decomposition claims to equal and compares all blocks.
bool verify_decomposition(const BilinearSkewMap& t, const Decomposition& d);

}  // namespace curvrank
