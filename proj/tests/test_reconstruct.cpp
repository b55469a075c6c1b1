#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <variant>
#include <vector>

#include "curvrank/error.hpp"
#include "curvrank/fixtures.hpp"
#include "curvrank/generators.hpp"
#include "curvrank/reconstruct.hpp"
#include "curvrank/rng.hpp"

using namespace curvrank;

namespace {

template <class F>
std::optional<Errc> catch_code(F&& f) {
  try {
    std::forward<F>(f)();
    return std::nullopt;
  } catch (const Error& e) {
    return e.code();
  }
}

std::optional<Rational> proportionality(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  Rational lambda = 0;
  for (std::size_t i = 0; i < b.rows() && lambda == 0; ++i)
    for (std::size_t j = 0; j < b.cols() && lambda == 0; ++j)
      if (b(i, j) != 0) lambda = a(i, j) / b(i, j);
  if (lambda == 0) return std::nullopt;
  if (!(a == lambda * b)) return std::nullopt;
  return lambda;
}

Mat hyperbolic_gram() {
  Mat g(2, 2);
  g(0, 1) = 1;
  g(1, 0) = 1;
  return g;
}

LinearMap diag_phi_05() {
  SignatureSpace s = SignatureSpace::standard(0, 5);
  Mat m(5, 5);
  for (std::size_t i = 0; i < 5; ++i) m(i, i) = rat(static_cast<long>(i) + 1);
  return LinearMap::endo(s, m);
}

BilinearSkewMap scaled_blocks(const BilinearSkewMap& t, const Rational& c) {
  BilinearSkewMap out(t.domain(), t.codomain());
  const std::size_t m = t.domain().dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) out.set_block(i, j, c * t.block(i, j));
  return out;
}

Subspace line_of(const SignatureSpace& ambient, const Vec& v) {
  return Subspace::span(ambient, from_cols({v}, ambient.dim()));
}

}  // namespace

TEST_CASE("flattening is the identity on definite spaces") {
  Flattener fl = flatten(SignatureSpace::standard(0, 5));
  CHECK(fl.psi == Mat::identity(5));
  CHECK(fl.positive_gram == Mat::identity(5));

  Mat g(2, 2);
  g(0, 0) = 2;
  g(0, 1) = 1;
  g(1, 0) = 1;
  g(1, 1) = 2;
  Flattener fd = flatten(SignatureSpace::with_gram(0, 2, g));
  CHECK(fd.psi == Mat::identity(2));
  CHECK(fd.positive_gram == g);
}

TEST_CASE("flattening folds the standard indefinite gram onto the identity") {
  SignatureSpace s14 = SignatureSpace::standard(1, 4);
  Flattener f14 = flatten(s14);
  CHECK(f14.psi == s14.gram);
  CHECK(f14.positive_gram == Mat::identity(5));

  SignatureSpace s26 = SignatureSpace::standard(2, 6);
  Flattener f26 = flatten(s26);
  CHECK(f26.psi == s26.gram);
  CHECK(f26.positive_gram == Mat::identity(8));
}

TEST_CASE("the flattening involution squares to the identity") {
  std::vector<SignatureSpace> spaces = {
      SignatureSpace::standard(1, 4),
      SignatureSpace::standard(2, 6),
      SignatureSpace::with_gram(1, 1, hyperbolic_gram()),
  };
  for (const SignatureSpace& s : spaces) {
    Flattener fl = flatten(s);
    const std::size_t n = s.dim();
    CHECK(fl.psi * fl.psi == Mat::identity(n));
    CHECK(is_symmetric(fl.positive_gram));
    CHECK(signature_of_symmetric(fl.positive_gram) == Inertia{n, 0, 0});
  }
}

TEST_CASE("flattening carries the skew algebra onto the flat skew algebra") {
  std::vector<SignatureSpace> spaces = {
      SignatureSpace::standard(1, 4),
      SignatureSpace::with_gram(1, 1, hyperbolic_gram()),
  };
  for (const SignatureSpace& s : spaces) {
    const std::size_t n = s.dim();
    Flattener fl = flatten(s);
    SignatureSpace flat = SignatureSpace::with_gram(0, n, fl.positive_gram);
    Rng rng(41, n);
    for (int trial = 0; trial < 6; ++trial) {
      Mat b = rng.rational_mat(n, n, 3, 2);
      Mat skew = s.gram_inv * (b - transpose(b));
      CHECK(in_so(skew, s));
      CHECK(in_so(fl.psi * skew, flat));
      CHECK(in_so(b, s) == in_so(fl.psi * b, flat));
    }
    CHECK(!in_so(Mat::identity(n), s));
    CHECK(!in_so(fl.psi * Mat::identity(n), flat));
  }
}

TEST_CASE("the shared line of blocks through a fixed direction is recovered") {
  LinearMap phi = diag_phi_05();
  const SignatureSpace& s = phi.domain;
  BilinearSkewMap t = make_T_phi(phi);

  Subspace l1 = phi_line(t, unit_vec(5, 0), unit_vec(5, 1), unit_vec(5, 2));
  CHECK(l1.dim() == 1);
  CHECK(l1 == line_of(s, unit_vec(5, 0)));

  Vec mixed = vadd(unit_vec(5, 0), unit_vec(5, 1));
  Subspace l2 = phi_line(t, mixed, unit_vec(5, 2), unit_vec(5, 3));
  CHECK(l2.contains(phi.matrix * mixed));

  LinearMap general = gen::random_admissible_phi(1, 5, 0, 29);
  BilinearSkewMap tg = make_T_phi(general);
  for (std::size_t head = 1; head < 4; ++head) {
    Vec a = unit_vec(6, head);
    Subspace line = phi_line(tg, a, unit_vec(6, head + 1), unit_vec(6, head + 2));
    CHECK(line.contains(general.matrix * a));
  }
}

TEST_CASE("pair-form maps share one global line") {
  SignatureSpace dom = SignatureSpace::standard(0, 5);
  auto [chi, xi] = gen::random_independent_chi_xi(dom, 7);
  BilinearSkewMap t = make_T_chi_xi(chi, xi);
  const SignatureSpace& cod = chi.codomain;

  Subspace expected = line_of(cod, xi);
  CHECK(phi_line(t, unit_vec(5, 0), unit_vec(5, 1), unit_vec(5, 2)) == expected);
  CHECK(phi_line(t, unit_vec(5, 2), unit_vec(5, 0), unit_vec(5, 4)) == expected);
  Vec mixed = vadd(unit_vec(5, 1), unit_vec(5, 3));
  CHECK(phi_line(t, mixed, unit_vec(5, 0), unit_vec(5, 2)) == expected);
}

TEST_CASE("probe planes expose a line that fails to be shared") {
  BilinearSkewMap t = std::get<BilinearSkewMap>(fixture("8.1", 0).payload);
  CHECK(catch_code([&] {
          (void)phi_line(t, unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 2));
        }) == Errc::DegenerateLine);
}

TEST_CASE("degenerate probe geometry is rejected") {
  BilinearSkewMap t = make_T_phi(diag_phi_05());
  CHECK(catch_code([&] { (void)phi_line(t, vec_of({1, 0, 0}), unit_vec(5, 1), unit_vec(5, 2)); }) ==
        Errc::DimensionMismatch);
  Vec dependent = vadd(unit_vec(5, 0), unit_vec(5, 1));
  CHECK(catch_code([&] { (void)phi_line(t, unit_vec(5, 0), unit_vec(5, 1), dependent); }) ==
        Errc::BadParams);

  LinearMap general = gen::random_admissible_phi(1, 5, 0, 29);
  BilinearSkewMap tg = make_T_phi(general);
  CHECK(catch_code([&] { (void)phi_line(tg, unit_vec(6, 0), unit_vec(6, 1), unit_vec(6, 2)); }) ==
        Errc::NotSpacelike);
}

TEST_CASE("single-generator inputs decompose to a proportional generator") {
  struct Case {
    std::size_t p, q, kernel;
    std::uint64_t seed;
  };
  std::vector<Case> cases = {{0, 5, 0, 3}, {1, 5, 1, 4}, {2, 6, 2, 5}};
  for (const Case& c : cases) {
    LinearMap phi = gen::random_admissible_phi(c.p, c.q, c.kernel, c.seed);
    BilinearSkewMap t = make_T_phi(phi);
    Decomposition d = decompose(t);
    REQUIRE(std::holds_alternative<PhiForm>(d));
    const PhiForm& f = std::get<PhiForm>(d);
    CHECK(f.epsilon == 1);
    CHECK(verify_decomposition(t, d));
    auto lambda = proportionality(f.phi.matrix, phi.matrix);
    REQUIRE(lambda.has_value());
    CHECK(rat(f.epsilon) * f.mu * *lambda * *lambda == 1);
  }
}

TEST_CASE("scalar multiples decompose with the sign in epsilon") {
  LinearMap phi = gen::random_admissible_phi(1, 5, 1, 17);
  BilinearSkewMap t = make_T_phi(phi);

  Decomposition dn = decompose(scaled_blocks(t, rat(-3)));
  REQUIRE(std::holds_alternative<PhiForm>(dn));
  const PhiForm& fn = std::get<PhiForm>(dn);
  CHECK(fn.epsilon == -1);
  auto ln = proportionality(fn.phi.matrix, phi.matrix);
  REQUIRE(ln.has_value());
  CHECK(fn.mu * *ln * *ln == 3);

  Decomposition dp = decompose(scaled_blocks(t, rat(2)));
  REQUIRE(std::holds_alternative<PhiForm>(dp));
  const PhiForm& fp = std::get<PhiForm>(dp);
  CHECK(fp.epsilon == 1);
  auto lp = proportionality(fp.phi.matrix, phi.matrix);
  REQUIRE(lp.has_value());
  CHECK(fp.mu * *lp * *lp == 2);
}

TEST_CASE("cross-space generators decompose across distinct domain and codomain") {
  SignatureSpace dom = SignatureSpace::standard(1, 5);
  SignatureSpace cod = SignatureSpace::standard(0, 6);
  LinearMap phi = gen::random_injective_map(dom, cod, 11);
  BilinearSkewMap t = make_T_phi(phi);
  Decomposition d = decompose(t);
  REQUIRE(std::holds_alternative<PhiForm>(d));
  const PhiForm& f = std::get<PhiForm>(d);
  CHECK(f.epsilon == 1);
  CHECK(f.phi.domain == dom);
  CHECK(f.phi.codomain == cod);
  CHECK(verify_decomposition(t, d));
  auto lambda = proportionality(f.phi.matrix, phi.matrix);
  REQUIRE(lambda.has_value());
  CHECK(f.mu * *lambda * *lambda == 1);
}

TEST_CASE("catalog endomorphisms round-trip through decomposition") {
  for (const char* name : {"8.2", "8.3"}) {
    std::size_t p = name[2] == '2' ? 4 : 6;
    LinearMap phi = std::get<LinearMap>(fixture(name, p).payload);
    BilinearSkewMap t = make_T_phi(phi);
    Decomposition d = decompose(t);
    REQUIRE(std::holds_alternative<PhiForm>(d));
    const PhiForm& f = std::get<PhiForm>(d);
    CHECK(f.epsilon == 1);
    CHECK(verify_decomposition(t, d));
    auto lambda = proportionality(f.phi.matrix, phi.matrix);
    REQUIRE(lambda.has_value());
    CHECK(f.mu * *lambda * *lambda == 1);
  }
}

TEST_CASE("pair-form inputs decompose to the pair form") {
  for (std::size_t p : {std::size_t{0}, std::size_t{1}}) {
    SignatureSpace dom = SignatureSpace::standard(p, 5);
    auto [chi, xi] = gen::random_independent_chi_xi(dom, 23 + p);
    BilinearSkewMap t = make_T_chi_xi(chi, xi);
    Decomposition d = decompose(t);
    REQUIRE(std::holds_alternative<ChiXiForm>(d));
    const ChiXiForm& f = std::get<ChiXiForm>(d);
    CHECK(verify_decomposition(t, d));
    CHECK(line_of(chi.codomain, f.xi) == line_of(chi.codomain, xi));
  }
}

TEST_CASE("decomposition rejects unsuitable inputs") {
  BilinearSkewMap narrow = std::get<BilinearSkewMap>(fixture("8.1", 0).payload);
  CHECK(catch_code([&] { (void)decompose(narrow); }) == Errc::DomainTooSmall);

  SignatureSpace s = SignatureSpace::standard(0, 5);
  BilinearSkewMap zero(s, s);
  CHECK(catch_code([&] { (void)decompose(zero); }) == Errc::NotRankTwo);

  BilinearSkewMap crooked(s, s);
  crooked.set_block(0, 1, Mat::identity(5));
  CHECK(catch_code([&] { (void)decompose(crooked); }) == Errc::NotSkew);

  Mat tridiag(5, 5);
  for (std::size_t i = 0; i + 1 < 5; ++i) {
    tridiag(i, i + 1) = 1;
    tridiag(i + 1, i) = 1;
  }
  BilinearSkewMap ta = make_T_phi(diag_phi_05());
  BilinearSkewMap tb = make_T_phi(LinearMap::endo(s, tridiag));
  BilinearSkewMap sum(s, s);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) sum.set_block(i, j, ta.block(i, j) + tb.block(i, j));
  CHECK(catch_code([&] { (void)decompose(sum); }) == Errc::NotRankTwo);
}

TEST_CASE("decomposition does not depend on the probe seed") {
  LinearMap phi = gen::random_admissible_phi(1, 5, 1, 21);
  BilinearSkewMap t = make_T_phi(phi);
  Decomposition d1 = decompose(t, 2026);
  Decomposition d2 = decompose(t, 99);
  REQUIRE(std::holds_alternative<PhiForm>(d1));
  REQUIRE(std::holds_alternative<PhiForm>(d2));
  CHECK(verify_decomposition(t, d1));
  CHECK(verify_decomposition(t, d2));
  const PhiForm& f1 = std::get<PhiForm>(d1);
  const PhiForm& f2 = std::get<PhiForm>(d2);
  CHECK(f1.epsilon == f2.epsilon);
  CHECK(proportionality(f1.phi.matrix, f2.phi.matrix).has_value());

  SignatureSpace dom = SignatureSpace::standard(0, 5);
  auto [chi, xi] = gen::random_independent_chi_xi(dom, 31);
  BilinearSkewMap tc = make_T_chi_xi(chi, xi);
  Decomposition c1 = decompose(tc, 5);
  Decomposition c2 = decompose(tc, 777);
  REQUIRE(std::holds_alternative<ChiXiForm>(c1));
  REQUIRE(std::holds_alternative<ChiXiForm>(c2));
  CHECK(line_of(chi.codomain, std::get<ChiXiForm>(c1).xi) ==
        line_of(chi.codomain, std::get<ChiXiForm>(c2).xi));
}

TEST_CASE("verification rejects mismatched reconstructions") {
  LinearMap phi = gen::random_admissible_phi(1, 5, 0, 37);
  BilinearSkewMap t = make_T_phi(phi);
  Decomposition d = decompose(t);
  REQUIRE(std::holds_alternative<PhiForm>(d));
  CHECK(verify_decomposition(t, d));

  PhiForm bent = std::get<PhiForm>(d);
  bent.phi.matrix(0, 0) += 1;
  CHECK(!verify_decomposition(t, Decomposition(bent)));

  PhiForm rescaled = std::get<PhiForm>(d);
  rescaled.mu = rescaled.mu * 2;
  CHECK(!verify_decomposition(t, Decomposition(rescaled)));

  PhiForm flipped = std::get<PhiForm>(d);
  flipped.epsilon = -flipped.epsilon;
  CHECK(!verify_decomposition(t, Decomposition(flipped)));

  PhiForm invalid = std::get<PhiForm>(d);
  invalid.epsilon = 2;
  CHECK(!verify_decomposition(t, Decomposition(invalid)));

  PhiForm nonpositive = std::get<PhiForm>(d);
  nonpositive.mu = -nonpositive.mu;
  CHECK(!verify_decomposition(t, Decomposition(nonpositive)));

  SignatureSpace dom = SignatureSpace::standard(0, 5);
  auto [chi, xi] = gen::random_independent_chi_xi(dom, 43);
  BilinearSkewMap tc = make_T_chi_xi(chi, xi);
  Decomposition dc = decompose(tc);
  REQUIRE(std::holds_alternative<ChiXiForm>(dc));
  CHECK(verify_decomposition(tc, dc));

  ChiXiForm stretched = std::get<ChiXiForm>(dc);
  stretched.xi = vscale(rat(2), stretched.xi);
  CHECK(!verify_decomposition(tc, Decomposition(stretched)));

  ChiXiForm shifted = std::get<ChiXiForm>(dc);
  shifted.chi.set_value(0, 1, vadd(shifted.chi.value(0, 1), unit_vec(chi.codomain.dim(), 0)));
  CHECK(!verify_decomposition(tc, Decomposition(shifted)));
}
