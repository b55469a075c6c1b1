#pragma once

#include <string>
#include <variant>

#include "curvrank/curvature.hpp"

namespace curvrank {

/// Catalog of the built-in counterexample families, keyed by their catalog
/// names "8.1", "8.2", "8.3".
///
/// "8.1": skew bilinear map on (p,4) built from the determinant against the
///        projection onto the four spacelike coordinates. Constant rank 2 on
///        spacelike planes, yet not of the single-generator form; its range
///        intersections over three planes through one line meet in {0}.
/// "8.2": self-adjoint admissible endomorphism of (p,p+1), q = p+1 >= 5,
///        whose plane types differ between two specific spacelike planes.
/// "8.3": self-adjoint admissible endomorphism of (q+1,q), q >= 5, with
///        totally isotropic range; constant type on spacelike planes but a
///        non-constant rank profile on timelike planes.
struct Fixture {
  std::string name;
  std::size_t p = 0;
  std::size_t q = 0;
  std::variant<BilinearSkewMap, LinearMap> payload;
};

/// Builds the named fixture for the given timelike dimension p.
/// Constraints: "8.1" any p (q = 4); "8.2" p >= 4 (q = p+1); "8.3" p >= 6
/// (q = p-1). Throws BadParams otherwise.
Fixture fixture(const std::string& name, std::size_t p);

}  // namespace curvrank
