#include <catch_amalgamated.hpp>

#include <random>

#include "lqk/polystab.hpp"

using namespace lqk;
using Rows = std::vector<std::vector<double>>;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("BivarPoly trims and evaluates") {
  const BivarPoly h({{1, 2, 0}, {3, 0, 0}, {0, 0, 0}});
  CHECK(h.deg_s() == 1);
  CHECK(h.deg_z() == 1);
  CHECK(h(cplx(2), cplx(3)) == cplx(1 + 6 + 6));
  CHECK_THROWS_AS(BivarPoly(Rows{{0, 0}}), domain_error);
  CHECK_THROWS_AS(BivarPoly({}), domain_error);
}

TEST_CASE("build_f") {
  CHECK(build_f(BivarPoly({{2}, {5}})).coeffs() == std::vector<cplx>{5, 2});
  // F(x/2, y/2) with q = r = 2: rows (12, -2), (-2, -1).
  const BivarPoly h({{12, -2}, {-2, -1}});
  CHECK(build_f(h).coeffs() == std::vector<cplx>{-2, 12});
  CHECK(build_f(h).reversed().coeffs() == std::vector<cplx>{12, -2});
}

TEST_CASE("schur_cohn_matrix small cases") {
  const std::vector<cplx> d1{cplx(0.3, 0.1), cplx(1.0, -0.5)};
  const auto M1 = schur_cohn_matrix(d1);
  CHECK_THAT(M1(0, 0).real(), WithinAbs(std::norm(d1[1]) - std::norm(d1[0]), 1e-15));

  const std::vector<cplx> d{cplx(0.2, 0.1), cplx(-0.4, 0.3), cplx(1.1, 0.2)};
  const auto M = schur_cohn_matrix(d);
  const double diag = std::norm(d[2]) - std::norm(d[0]);
  CHECK_THAT(M(0, 0).real(), WithinAbs(diag, 1e-15));
  CHECK_THAT(M(1, 1).real(), WithinAbs(diag, 1e-15));
  const cplx off = d[2] * std::conj(d[1]) - std::conj(d[0]) * d[1];
  CHECK(std::abs(M(0, 1) - off) < 1e-15);
  CHECK(std::abs(M(1, 0) - std::conj(off)) < 1e-15);
}

TEST_CASE("g on the circle for a (1, 1) polynomial") {
  // g = A^2 + B^2 - C^2 - D^2 + 2 (AB - CD) eta
  const double A = 12, B = -2, C = -2, D = -1;
  const TrigPoly g = g_on_circle(BivarPoly({{A, C}, {B, D}}));
  REQUIRE(g.eta_coeffs.size() == 2);
  CHECK_THAT(g.eta_coeffs[0], WithinAbs(143, 1e-12));
  CHECK_THAT(g.eta_coeffs[1], WithinAbs(-52, 1e-12));
  const CirclePositivity pos = t_positive(g);
  CHECK(pos.positive);
  CHECK_THAT(pos.minimum, WithinAbs(91, 1e-12));
  CHECK_THAT(pos.argmin_eta, WithinAbs(1, 1e-12));
}

TEST_CASE("t_positive") {
  CHECK(t_positive(TrigPoly{{1.0}}).positive);
  // 27648 (eta - 1)^3 (eta + 3) expanded
  const TrigPoly reference{{-27648.0 * 3, 27648.0 * 8, -27648.0 * 6, 0.0, 27648.0}};
  const CirclePositivity pos = t_positive(reference);
  CHECK_FALSE(pos.positive);
  CHECK_THAT(reference(0.0), WithinRel(-82944.0, 1e-14));
  CHECK(pos.minimum <= -82944.0);

  const CirclePositivity sampled = t_positive_sampled([&](double w) { return reference.at_angle(w); });
  CHECK_THAT(sampled.minimum, WithinRel(pos.minimum, 1e-8));
}

TEST_CASE("symbolic and numeric g agree on random polynomials") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const int ds = 1 + i % 3, dz = 1 + (i / 3) % 3;
    std::vector<std::vector<double>> c(ds + 1, std::vector<double>(dz + 1));
    for (auto& row : c)
      for (double& v : row) v = u(rng);
    const BivarPoly h(c);
    const TrigPoly g = g_on_circle(h);  // throws on disagreement
    for (double w : {0.1, 1.7, 3.0})
      CHECK_THAT(g.at_angle(w), WithinAbs(g_numeric(h, w), 1e-9 * std::max(1.0, g.scale())));
  }
}

TEST_CASE("m1_positive_definite") {
  CHECK(m1_positive_definite(BivarPoly({{12, -2}, {-2, -1}})).positive_definite);
  CHECK_THAT(m1_positive_definite(BivarPoly({{12, -2}, {-2, -1}})).minors[0], WithinAbs(91, 1e-12));
  CHECK(m1_positive_definite(BivarPoly(Rows{{1, 0.1}})).positive_definite);
  CHECK_FALSE(m1_positive_definite(BivarPoly(Rows{{0, 1}})).positive_definite);
}

TEST_CASE("bivariate_stable on product and known cases") {
  CHECK(bivariate_stable(BivarPoly(Rows{{1}})).stable);
  const auto rep = bivariate_stable(BivarPoly({{1, -0.5}, {-0.5, 0.25}}));
  CHECK(rep.stable);
  CHECK(rep.falsifier.min_root_modulus >= 2.0 - 1e-12);

  // (1 - 2s)(1 - z/2): zero at s = 1/2 inside the disk.
  const auto bad = bivariate_stable(BivarPoly({{1, -0.5}, {-2, 1}}));
  CHECK_FALSE(bad.stable);
  CHECK(bad.falsifier.found_zero());

  CHECK_FALSE(bivariate_stable(BivarPoly({{0, 1}, {1, 0}})).stable);
}

TEST_CASE("fuzz: stable verdict never coexists with a found zero") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FalsifierOptions opt;
  opt.angles = 48;
  opt.radii = 24;
  int stable = 0, unstable = 0;
  for (int i = 0; i < 300; ++i) {
    std::vector<std::vector<double>> c(3, std::vector<double>(3));
    for (auto& row : c)
      for (double& v : row) v = u(rng) * 0.4;
    c[0][0] = 1.0 + u(rng) * 0.3;  // dominant constant term makes stable cases common
    const auto rep = bivariate_stable(BivarPoly(c), opt);  // throws on contradiction
    (rep.stable ? stable : unstable)++;
    if (!rep.stable && rep.falsifier.found_zero()) {
      const cplx hv = BivarPoly(c)(rep.falsifier.s_at_min, rep.falsifier.z_at_min);
      CHECK(std::abs(hv) < 1e-8);
    }
  }
  CHECK(stable > 20);
  CHECK(unstable > 20);
}

TEST_CASE("product polynomials are stable iff both factors are") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  FalsifierOptions opt;
  opt.angles = 32;
  opt.radii = 16;
  for (int i = 0; i < 100; ++i) {
    const double a = 0.05 + 1.9 * u(rng), b = 0.05 + 1.9 * u(rng);
    if (std::abs(a - 1) < 0.05 || std::abs(b - 1) < 0.05) continue;
    // (1 - a s)(1 - b z): zero-free on the closed bidisk iff a < 1 and b < 1.
    const BivarPoly h({{1, -b}, {-a, a * b}});
    CAPTURE(a, b);
    CHECK(bivariate_stable(h, opt).stable == (a < 1 && b < 1));
  }
}
