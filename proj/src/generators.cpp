#include "curvrank/generators.hpp"

#include "curvrank/error.hpp"
#include "curvrank/rng.hpp"

namespace curvrank::gen {

namespace {

constexpr int kMaxTries = 2000;

Vec random_int_vec(Rng& rng, std::size_t n, long bound) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Rational(rng.int_in(-bound, bound));
  return v;
}

Mat random_symmetric(Rng& rng, std::size_t n, long bound) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = Rational(rng.int_in(-bound, bound));
      m(j, i) = m(i, j);
    }
  return m;
}

/// Symmetric matrix whose null space is exactly the span of the given
/// columns: compress onto the Euclidean complement of the target kernel and
/// place an invertible symmetric core there.
Mat symmetric_with_kernel(Rng& rng, const Mat& kernel_cols, std::size_t dim) {
  Mat complement = kernel_columns(transpose(kernel_cols));
  const std::size_t m = complement.cols();
  for (int attempt = 0; attempt < kMaxTries; ++attempt) {
    Mat core = random_symmetric(rng, m, 4);
    if (rank(core) != m) continue;
    return complement * core * transpose(complement);
  }
  fail(Errc::Unsatisfiable, "no invertible symmetric core found");
}

}  // namespace

std::pair<Vec, Vec> random_spacelike_plane(const SignatureSpace& space, std::uint64_t seed,
                                           long bound) {
  if (bound < 1) fail(Errc::BadParams, "plane sampling bound must be at least 1");
  Rng rng(seed, 0xA11CE);
  const std::size_t n = space.dim();
  for (int attempt = 0; attempt < kMaxTries; ++attempt) {
    Vec v1 = random_int_vec(rng, n, bound);
    if (sgn(inner(space, v1, v1)) <= 0) continue;
    Vec v2 = random_int_vec(rng, n, bound);
    if (sgn(gram_det2(space, v1, v2)) <= 0) continue;
    return {std::move(v1), std::move(v2)};
  }
  fail(Errc::Unsatisfiable, "no spacelike plane found within the retry budget");
}

LinearMap random_admissible_phi(std::size_t p, std::size_t q, std::size_t kernel_dim,
                                std::uint64_t seed) {
  if (q < 5) fail(Errc::BadParams, "generator needs q >= 5");
  if (kernel_dim > p) fail(Errc::BadParams, "a spacelike-free kernel needs kernel_dim <= p");
  SignatureSpace s = SignatureSpace::standard(p, q);
  const std::size_t n = s.dim();
  Rng rng(seed, 0xF1);

  if (kernel_dim == 0) {
    for (int attempt = 0; attempt < kMaxTries; ++attempt) {
      Mat sym = random_symmetric(rng, n, 4);
      if (rank(sym) != n) continue;
      return LinearMap::endo(s, s.gram_inv * sym);
    }
    fail(Errc::Unsatisfiable, "no invertible symmetric matrix found");
  }

  // Kernel directions: a large timelike axis plus a small spacelike
  // perturbation keeps the restricted form negative definite.
  long depth = static_cast<long>(5 + kernel_dim * q);
  std::vector<Vec> kernel_vecs;
  for (std::size_t i = 0; i < kernel_dim; ++i) {
    Vec v(n);
    v[i] = depth;
    for (std::size_t j = p; j < n; ++j) v[j] = Rational(rng.int_in(-1, 1));
    kernel_vecs.push_back(std::move(v));
  }
  Mat kernel = from_cols(kernel_vecs, n);
  Mat restricted = transpose(kernel) * s.gram * kernel;
  Inertia in = signature_of_symmetric(restricted);
  if (in.n_neg != kernel_dim) fail(Errc::Unsatisfiable, "kernel construction degenerated");

  Mat sym = symmetric_with_kernel(rng, kernel, n);
  LinearMap phi = LinearMap::endo(s, s.gram_inv * sym);
  if (kernel_columns(phi.matrix).cols() != kernel_dim)
    fail(Errc::Unsatisfiable, "kernel dimension drifted");
  return phi;
}

LinearMap random_spacelike_kernel_phi(std::size_t p, std::size_t q, std::uint64_t seed) {
  if (q < 2) fail(Errc::BadParams, "needs at least two spacelike directions");
  SignatureSpace s = SignatureSpace::standard(p, q);
  const std::size_t n = s.dim();
  Rng rng(seed, 0xF2);

  long depth = static_cast<long>(5 + p + q);
  Vec v(n);
  v[p] = depth;
  for (std::size_t j = 0; j < n; ++j)
    if (j != p) v[j] = Rational(rng.int_in(-1, 1));
  if (sgn(inner(s, v, v)) <= 0) fail(Errc::Unsatisfiable, "kernel vector lost its spacelike norm");

  Mat sym = symmetric_with_kernel(rng, from_cols({v}, n), n);
  return LinearMap::endo(s, s.gram_inv * sym);
}

Mat random_skew_operator(const SignatureSpace& space, std::uint64_t seed) {
  Rng rng(seed, 0x5E);
  const std::size_t n = space.dim();
  Mat k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      k(i, j) = rng.small_rational(4, 2);
      k(j, i) = -k(i, j);
    }
  return space.gram_inv * k;
}

LinearMap random_injective_map(const SignatureSpace& domain, const SignatureSpace& codomain,
                               std::uint64_t seed) {
  if (codomain.dim() < domain.dim())
    fail(Errc::BadParams, "injective map needs dim(codomain) >= dim(domain)");
  Rng rng(seed, 0x17);
  for (int attempt = 0; attempt < kMaxTries; ++attempt) {
    Mat m(codomain.dim(), domain.dim());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Rational(rng.int_in(-3, 3));
    if (rank(m) != domain.dim()) continue;
    return {domain, codomain, std::move(m)};
  }
  fail(Errc::Unsatisfiable, "no full-column-rank matrix found");
}

std::pair<AlternatingMap, Vec> random_independent_chi_xi(const SignatureSpace& domain,
                                                         std::uint64_t seed) {
  const std::size_t m = domain.dim();
  if (m < 2) fail(Errc::BadParams, "alternating map needs a domain of dimension >= 2");
  const std::size_t db = m * (m - 1) / 2 + 1;
  SignatureSpace codomain = SignatureSpace::standard(0, db);
  Rng rng(seed, 0xC1);

  Mat g;
  for (int attempt = 0;; ++attempt) {
    g = Mat(db, db);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < db; ++j) g(i, j) = Rational(rng.int_in(-2, 2));
    if (rank(g) == db) break;
    if (attempt >= kMaxTries) fail(Errc::Unsatisfiable, "no invertible codomain change found");
  }

  // chi maps (e_i, e_j) to the (i,j) alternating coordinate direction; any
  // nonzero plane then has nonzero chi value with no xi component, so the
  // pair stays independent after the invertible change g.
  AlternatingMap chi{domain, codomain, {}};
  std::size_t idx = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) chi.set_value(i, j, col(g, idx++));
  Vec xi = col(g, db - 1);
  return {std::move(chi), std::move(xi)};
}

}  // namespace curvrank::gen
