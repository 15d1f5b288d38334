#include <catch_amalgamated.hpp>

#include "lqk/certifier.hpp"
#include "oracle_values.hpp"

using namespace lqk;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("coeffs_F_eps") {
  const BivarPoly h = coeffs_F_eps(2, 2, 1);
  CHECK(h.coeff(0, 0) == 12);
  CHECK(h.coeff(1, 0) == -4);
  CHECK(h.coeff(0, 1) == -4);
  CHECK(h.coeff(1, 1) == -4);

  const BivarPoly h0 = coeffs_F_eps(1.5, 0.5, 0.0);
  CHECK(h0.deg_s() == 0);
  CHECK(h0.deg_z() == 0);
  CHECK_THAT(h0.coeff(0, 0), WithinRel(1.5 * 0.5 + 3 + 1, 1e-15));

  for (double q : {0.3, 2.0, 5.0})
    for (double e : {0.2, 0.9}) {
      const AnalyticF a = analytic_F_conditions(q, 1.7, e);
      const BivarPoly g = coeffs_F_eps(q, 1.7, e);
      CHECK_THAT(g.coeff(0, 0), WithinRel(a.A, 1e-14));
      CHECK_THAT(g.coeff(1, 0), WithinAbs(a.B, 1e-13));
      CHECK_THAT(g.coeff(0, 1), WithinAbs(a.C, 1e-13));
      CHECK_THAT(g.coeff(1, 1), WithinAbs(a.D, 1e-13));
    }
  const BivarPoly sym = coeffs_F_eps(3, 3, 0.4);
  CHECK(sym.coeff(1, 0) == sym.coeff(0, 1));
  CHECK_THROWS_AS(coeffs_F_eps(-1, 2, 0.5), domain_error);
  CHECK_THROWS_AS(coeffs_F_eps(1, 2, 1.5), domain_error);
}

TEST_CASE("coeffs_G_eps matches the series-derived oracle") {
  for (const auto& c : oracle::kGCoeffCases) {
    const BivarPoly h = coeffs_G_eps(c.r, c.eps);
    CAPTURE(c.r, c.eps);
    for (int j = 0; j <= 2; ++j)
      for (int k = 0; k <= 2; ++k)
        CHECK_THAT(h.coeff(j, k), WithinAbs(c.a[j][k], 1e-12 * std::max(1.0, std::abs(c.a[j][k]))));
  }
}

TEST_CASE("G coefficient audit flags exactly A11") {
  int mismatches = 0;
  for (const auto& a : expansion::audit_G_coefficients()) {
    CAPTURE(a.j, a.k, a.expanded.to_string(), a.printed.to_string());
    if (a.j == 1 && a.k == 1) {
      CHECK_FALSE(a.matches);
      CHECK(a.expanded.to_string() == "4*r^2*eps^2 + -32*eps^2");
    } else {
      CHECK(a.matches);
    }
    mismatches += !a.matches;
  }
  CHECK(mismatches == 1);
  CHECK_NOTHROW(expansion::require_G_audit_clean());
  // The raw expansion carries a common factor r^2.
  CHECK(expansion::G_scaled_raw().coefficient_xy(0, 0).to_string() == "1*r^4 + 6*r^3 + 8*r^2");
}

TEST_CASE("degenerate r = 2 and r = 4 drop the x^2 y^2 term") {
  CHECK(coeffs_G_eps(2, 0.8).coeff(2, 2) == 0.0);
  CHECK(coeffs_G_eps(4, 0.8).coeff(2, 2) == 0.0);
  CHECK(coeffs_G_eps(4, 0.8).deg_s() == 2);
}

TEST_CASE("g for G at eps = 1 against the Schur-Cohn oracle") {
  for (const auto& c : oracle::kGDetCases) {
    const TrigPoly g = g_on_circle(coeffs_G_eps(c.r, 1.0));
    CAPTURE(c.r, c.eta);
    CHECK_THAT(g(c.eta), WithinRel(c.det, 1e-9));
  }
}

TEST_CASE("g is proportional to the printed formula with c(r) = r^-8") {
  for (double r : {0.5, 1.0, 2.0, 3.0, 4.0, 8.0}) {
    const ProportionalityCheck pc = g_formula_proportionality(r);
    CAPTURE(r);
    CHECK(pc.etas.size() == 16);
    CHECK(pc.relative_spread <= 1e-9);
    CHECK_THAT(pc.ratio_mean, WithinRel(std::pow(r, -8.0), 1e-9));
  }
}

TEST_CASE("analytic conditions for F at q = r = 2, eps = 1/2") {
  const AnalyticF a = analytic_F_conditions(2, 2, 0.5);
  CHECK(a.A == 12);
  CHECK(a.B == -2);
  CHECK(a.C == -2);
  CHECK(a.D == -1);
  CHECK(a.cond_i);
  CHECK(a.cond_ii);
  const auto rep = bivariate_stable(coeffs_F_eps(2, 2, 0.5));
  CHECK_THAT(rep.cond_ii.g_min, WithinAbs(91, 1e-10));
}

TEST_CASE("F at q = r = 2 stays stable as eps -> 1") {
  for (double e : {0.99, 0.999, 0.9999}) CHECK(bivariate_stable(coeffs_F_eps(2, 2, e)).stable);
}

TEST_CASE("certify_p2 on a reduced grid") {
  SweepConfig cfg;
  cfg.q_grid = {0.25, 1, 8};
  cfg.r_grid = {0.5, 4};
  cfg.eps_grid = {0.1, 0.5, 0.99};
  cfg.falsifier.angles = 64;
  cfg.falsifier.radii = 32;
  const Certificate c = certify_p2(cfg, 2);
  CHECK(c.points.size() == 18);
  CHECK(c.verdict);
  CHECK(c.counterexamples.empty());
  for (const auto& p : c.points) {
    CHECK(p.agrees);
    CHECK(p.error.empty());
  }
}

TEST_CASE("SweepConfig validation") {
  SweepConfig c = SweepConfig::defaults();
  CHECK(c.q_grid.size() == 6);
  CHECK(c.eps_grid.size() == 6);
  CHECK_NOTHROW(c.validate());
  c.eps_grid = {1.0};
  CHECK_THROWS_AS(c.validate(), domain_error);
  c = SweepConfig::defaults();
  c.q_grid.clear();
  CHECK_THROWS_AS(certify_p2(c), domain_error);
}

TEST_CASE("G at eps close to 1 is unstable for q = r = 1") {
  CHECK_FALSE(bivariate_stable(coeffs_G_eps(1, 0.99)).stable);
  CHECK(bivariate_stable(coeffs_G_eps(1, 0.3)).stable);
}

TEST_CASE("zero witnesses for D^1_{r,r}") {
  for (double r : {0.5, 1.0, 2.0, 3.0, 4.0, 8.0}) {
    const ZeroWitness w = find_zero_p1(r);
    CAPTURE(r, w.eps_onset, w.eps);
    CHECK(w.eps_onset > 0.0);
    CHECK(w.eps_onset < 1.0);
    CHECK(w.g_min_at_one < 0.0);
    CHECK(std::abs(w.nu2) < 1.0);
    CHECK(std::abs(w.nu3) < 1.0);
    CHECK(w.kernel_relative() < 1e-8);
    CHECK(w.revalidate());
    CHECK(w.onset.monotone);
    CHECK(contains(DomainParams(1, r, r), w.z));
    const KernelArgs k = KernelArgs::from_points(w.z, w.w_point);
    CHECK(std::abs(k.nu2 - w.nu2) < 1e-15);
    CHECK(std::abs(k.nu3 - w.nu3) < 1e-15);
  }
  CHECK_THROWS_AS(find_zero_p1(0.0), domain_error);
}

TEST_CASE("seed from the printed g formula is negative") {
  CHECK(printed_g_formula(1.0, 0.0) == -27648.0 * 3);
  const ZeroWitness w = find_zero_p1(1.0);
  CHECK(printed_g_formula(1.0, w.seed_eta) < 0.0);
}

TEST_CASE("kernel_min_modulus_scan") {
  const ScanReport origin = kernel_min_modulus_scan(DomainParams(2, 2, 3), 1);
  CHECK(origin.rows.size() == 1);
  CHECK_THAT(origin.min_abs, WithinRel((2.0 / 2 + 2.0 / 3 + 1) / kPi3, 1e-14));

  const ScanReport d2 = kernel_min_modulus_scan(DomainParams(2, 2, 2), 24);
  CHECK(d2.rows.size() == 24 * 24);
  CHECK(d2.min_abs > 1e-3);

  const ScanReport d1 = kernel_min_modulus_scan(DomainParams(1, 1, 1), 48);
  CHECK(d1.min_abs < 2e-2 * d1.origin_abs);
  CHECK_THROWS_AS(kernel_min_modulus_scan(DomainParams(1, 1, 1), 0), domain_error);
}

TEST_CASE("scan is thread-count independent") {
  const ScanReport a = kernel_min_modulus_scan(DomainParams(1, 2, 0.5), 16, 1);
  const ScanReport b = kernel_min_modulus_scan(DomainParams(1, 2, 0.5), 16, 4);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) REQUIRE(a.rows[i].abs_kernel == b.rows[i].abs_kernel);
}
