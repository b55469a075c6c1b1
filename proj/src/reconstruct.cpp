#include "curvrank/reconstruct.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "curvrank/error.hpp"
#include "curvrank/generators.hpp"
#include "curvrank/rng.hpp"

namespace curvrank {

namespace {

Rational pos_inner(const Mat& positive_gram, const Vec& x, const Vec& y) {
  Vec gy = positive_gram * y;
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * gy[i];
  return acc;
}

Vec line_rep(const Subspace& line) { return col(line.basis, 0); }

std::vector<Vec> spanning_spacelike_family(const SignatureSpace& s, std::uint64_t seed) {
  const std::size_t m = s.dim();
  for (long bound = 2; bound <= 4; ++bound) {
    Rng rng(seed, 0xFA0 + static_cast<std::uint64_t>(bound));
    std::vector<Vec> family;
    auto accept = [&](const Vec& v) {
      bool ok = sgn(inner(s, v, v)) > 0;
      for (std::size_t i = 0; ok && i < family.size(); ++i)
        ok = is_spacelike_plane(s, family[i], v);
      if (!ok) return false;
      std::vector<Vec> trial = family;
      trial.push_back(v);
      if (rank(from_cols(trial, m)) != trial.size()) return false;
      family = std::move(trial);
      return true;
    };
    for (std::size_t k = 0; k < m; ++k) accept(unit_vec(m, k));
    std::size_t misses = 0;
    while (family.size() < m && misses < 4000) {
      Vec v(m);
      for (Rational& x : v) x = rat(rng.int_in(-bound, bound));
      if (!accept(v)) ++misses;
    }
    if (family.size() == m) return family;
  }
  fail(Errc::SpanningFamilyFailed, "no spanning pairwise-spacelike family found");
}

/// Line through a probe head, trying partner pairs from the family. Pairs
/// whose triple span with the head is positive definite are guaranteed to
/// give a one-dimensional intersection for admissible inputs, so they go
/// first; the remaining spacelike pairs serve as fallback.
Subspace line_for(const BilinearSkewMap& t, const Vec& head, const std::vector<Vec>& family) {
  const SignatureSpace& dom = t.domain();
  std::vector<std::pair<std::size_t, std::size_t>> preferred, fallback;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!is_spacelike_plane(dom, head, family[i])) continue;
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!is_spacelike_plane(dom, head, family[j])) continue;
      if (rank(from_cols({head, family[i], family[j]}, head.size())) != 3) continue;
      Mat g3(3, 3);
      const Vec* triple[3] = {&head, &family[i], &family[j]};
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) g3(r, c) = inner(dom, *triple[r], *triple[c]);
      if (signature_of_symmetric(g3) == Inertia{3, 0, 0})
        preferred.emplace_back(i, j);
      else
        fallback.emplace_back(i, j);
    }
  }
  preferred.insert(preferred.end(), fallback.begin(), fallback.end());
  for (const auto& [i, j] : preferred) {
    try {
      return phi_line(t, head, family[i], family[j]);
    } catch (const Error& e) {
      if (e.code() != Errc::DegenerateLine) throw;
    }
  }
  fail(Errc::DegenerateLine, "every partner pair gives a degenerate line");
}

std::vector<Vec> constancy_probes(const std::vector<Vec>& family, std::size_t want) {
  std::vector<Vec> probes;
  for (std::size_t i = 0; i < family.size() && probes.size() < want; ++i)
    for (std::size_t j = i + 1; j < family.size() && probes.size() < want; ++j) {
      probes.push_back(vadd(family[i], family[j]));
      if (probes.size() < want) probes.push_back(vsub(family[i], family[j]));
    }
  return probes;
}

}  // namespace

Flattener flatten(const SignatureSpace& b) {
  Congruence cg = congruence_diagonalize(b.gram);
  const std::size_t n = b.dim();
  Mat signs(n, n);
  for (std::size_t i = 0; i < n; ++i) signs(i, i) = sgn(cg.diagonal(i, i)) >= 0 ? 1 : -1;
  Mat e_inv = *inverse(cg.transform);
  Mat psi = cg.transform * signs * e_inv;
  return Flattener{psi, b.gram * psi};
}

Subspace phi_line(const BilinearSkewMap& t, const Vec& a, const Vec& a2, const Vec& a3) {
  const SignatureSpace& dom = t.domain();
  const std::size_t m = dom.dim();
  if (a.size() != m || a2.size() != m || a3.size() != m)
    fail(Errc::DimensionMismatch, "probe vectors must live in the domain");
  if (rank(from_cols({a, a2, a3}, m)) != 3)
    fail(Errc::BadParams, "probe head and partners must be independent");
  if (!is_spacelike_plane(dom, a, a2) || !is_spacelike_plane(dom, a, a3))
    fail(Errc::NotSpacelike, "partner planes must be spacelike");

  Subspace r2 = Subspace::span(t.codomain(), skew_combination(t, a, a2));
  Subspace r3 = Subspace::span(t.codomain(), skew_combination(t, a, a3));
  Subspace line = intersect(r2, r3);
  if (line.dim() != 1)
    fail(Errc::DegenerateLine, "range intersection has dimension " + std::to_string(line.dim()));

  Vec rep = line_rep(line);
  std::vector<Vec> candidates;
  for (std::size_t k = 0; k < m; ++k) candidates.push_back(unit_vec(m, k));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = k + 1; l < m; ++l) candidates.push_back(vadd(unit_vec(m, k), unit_vec(m, l)));
  for (const Vec& c : candidates) {
    if (rank(from_cols({a, c}, m)) != 2) continue;
    if (!is_spacelike_plane(dom, a, c)) continue;
    Subspace rc = Subspace::span(t.codomain(), skew_combination(t, a, c));
    if (!rc.contains(rep))
      fail(Errc::DegenerateLine, "a probe range misses the candidate line");
  }
  return line;
}

Decomposition decompose(const BilinearSkewMap& t, std::uint64_t seed) {
  const SignatureSpace& dom_a = t.domain();
  const SignatureSpace& dom_b = t.codomain();
  if (dom_a.q < 5) fail(Errc::DomainTooSmall, "the domain needs at least five spacelike directions");
  const std::size_t m = dom_a.dim();
  const std::size_t n = dom_b.dim();

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!in_so(t.block(i, j), dom_b)) fail(Errc::NotSkew, "blocks must be skew-adjoint");

  Rng root(seed, 0xDEC0);
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto [v1, v2] = gen::random_spacelike_plane(dom_a, root.fork(s).next_u64());
    if (rank(plane_operator(t, v1, v2).op) != 2)
      fail(Errc::NotRankTwo, "a sampled spacelike plane is not rank 2");
  }

  Flattener fl = flatten(dom_b);
  SignatureSpace flat_b = SignatureSpace::with_gram(0, n, fl.positive_gram);
  BilinearSkewMap flat_t(dom_a, flat_b);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) flat_t.set_block(i, j, fl.psi * t.block(i, j));

  std::vector<Vec> family = spanning_spacelike_family(dom_a, root.fork(1000).next_u64());

  std::vector<Subspace> lines;
  lines.reserve(m);
  for (const Vec& s : family) lines.push_back(line_for(flat_t, s, family));

  bool constant = true;
  for (std::size_t i = 1; i < m && constant; ++i) constant = lines[i] == lines[0];
  if (constant) {
    for (const Vec& probe : constancy_probes(family, 20)) {
      try {
        if (!(line_for(flat_t, probe, family) == lines[0])) {
          constant = false;
          break;
        }
      } catch (const Error& e) {
        if (e.code() != Errc::DegenerateLine) throw;
      }
    }
  }

  if (constant) {
    Vec xi_hat = line_rep(lines[0]);
    Rational denom = pos_inner(fl.positive_gram, xi_hat, xi_hat);
    AlternatingMap chi{dom_a, dom_b, {}};
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        Vec w = flat_t.block(i, j) * xi_hat;
        chi.set_value(i, j, fl.psi * vscale(rat(-1) / denom, w));
      }
    Decomposition d = ChiXiForm{std::move(chi), fl.psi * xi_hat};
    if (!verify_decomposition(t, d))
      fail(Errc::VerificationFailed, "constant-line input is not of the pair form");
    return d;
  }

  std::vector<Vec> images(m);
  std::vector<bool> resolved(m, false);
  images[0] = line_rep(lines[0]);
  resolved[0] = true;

  auto resolve_against = [&](std::size_t base, std::size_t i) {
    Vec ci = line_rep(lines[i]);
    for (int side = 0; side < 2; ++side) {
      Vec head = side == 0 ? vadd(family[base], family[i]) : vsub(family[base], family[i]);
      Subspace mixed_line;
      try {
        mixed_line = line_for(flat_t, head, family);
      } catch (const Error& e) {
        if (e.code() != Errc::DegenerateLine) throw;
        continue;
      }
      Vec u = line_rep(mixed_line);
      auto coeffs = solve_in_span(u, from_cols({images[base], ci}, n));
      if (!coeffs || (*coeffs)[0] == 0 || (*coeffs)[1] == 0)
        fail(Errc::SpanSolveFailed, "mixed line is not spanned by its endpoint lines");
      Rational scale = (*coeffs)[1] / (*coeffs)[0];
      images[i] = vscale(side == 0 ? scale : -scale, ci);
      resolved[i] = true;
      return;
    }
    fail(Errc::DegenerateLine, "no usable mixed line for a family pair");
  };

  std::size_t anchor = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (!(lines[i] == lines[0])) {
      resolve_against(0, i);
      if (anchor == 0) anchor = i;
    }
  if (anchor == 0) fail(Errc::VerificationFailed, "probe lines are inconsistent with the family");
  for (std::size_t i = 1; i < m; ++i)
    if (!resolved[i]) resolve_against(anchor, i);

  Mat basis = from_cols(family, m);
  Mat phi_hat = from_cols(images, n) * *inverse(basis);
  LinearMap phi_hat_map{dom_a, flat_b, phi_hat};
  BilinearSkewMap rebuilt_hat = make_T_phi(phi_hat_map);

  Mat matched = skew_combination(rebuilt_hat, family[0], family[anchor]);
  Mat target = skew_combination(flat_t, family[0], family[anchor]);
  Rational mu = 0;
  for (std::size_t r = 0; r < n && mu == 0; ++r)
    for (std::size_t c = 0; c < n && mu == 0; ++c)
      if (matched(r, c) != 0) mu = target(r, c) / matched(r, c);
  if (mu == 0) fail(Errc::VerificationFailed, "reconstructed map vanishes on the anchor plane");

  int epsilon = sgn(mu) > 0 ? 1 : -1;
  LinearMap phi{dom_a, dom_b, fl.psi * phi_hat};
  Decomposition d = PhiForm{epsilon, abs(mu), std::move(phi)};
  if (!verify_decomposition(t, d))
    fail(Errc::VerificationFailed, "input is not generated by a single endomorphism");
  return d;
}

bool verify_decomposition(const BilinearSkewMap& t, const Decomposition& d) {
  if (std::holds_alternative<ChiXiForm>(d)) {
    const ChiXiForm& f = std::get<ChiXiForm>(d);
    if (!(f.chi.domain == t.domain()) || !(f.chi.codomain == t.codomain())) return false;
    if (f.xi.size() != t.codomain().dim()) return false;
    return make_T_chi_xi(f.chi, f.xi) == t;
  }
  const PhiForm& f = std::get<PhiForm>(d);
  if (!(f.mu > 0) || (f.epsilon != 1 && f.epsilon != -1)) return false;
  if (!(f.phi.domain == t.domain()) || !(f.phi.codomain == t.codomain())) return false;
  BilinearSkewMap generated = make_T_phi(f.phi);
  const std::size_t m = t.domain().dim();
  Rational scale = rat(f.epsilon) * f.mu;
  BilinearSkewMap scaled(t.domain(), t.codomain());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) scaled.set_block(i, j, scale * generated.block(i, j));
  return scaled == t;
}

}  // namespace curvrank
