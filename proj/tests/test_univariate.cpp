#include <catch_amalgamated.hpp>

#include <random>

#include "lqk/polystab.hpp"
#include "lqk/univariate.hpp"

using namespace lqk;

TEST_CASE("UniPoly basics") {
  const UniPoly p{1.0, 0.0, 2.0, 0.0};
  CHECK(p.degree() == 2);
  CHECK(UniPoly{0.0}.degree() == -1);
  CHECK(p(cplx(2.0)) == cplx(9.0));
  CHECK(p.derivative().coeffs() == std::vector<cplx>{0.0, 4.0});
  CHECK(p.reversed().coeffs() == std::vector<cplx>{2.0, 0.0, 1.0});
  CHECK((UniPoly{1.0, 1.0}.pow(2)).coeffs() == std::vector<cplx>{1.0, 2.0, 1.0});
}

TEST_CASE("roots") {
  auto r = roots(UniPoly{2.0, -3.0, 1.0});
  std::sort(r.begin(), r.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  CHECK(std::abs(r[0] - 1.0) < 1e-13);
  CHECK(std::abs(r[1] - 2.0) < 1e-13);
  CHECK(roots(UniPoly{5.0}).empty());
  CHECK_THROWS_AS(roots(UniPoly{}), domain_error);
}

TEST_CASE("hurwitz_stable") {
  CHECK(hurwitz_stable(UniPoly{1.0, 1.0}).stable());
  CHECK(hurwitz_stable(UniPoly{1.0, 0.0, 1.0}).verdict == Verdict::boundary);
  CHECK_FALSE(routh_hurwitz(std::vector<double>{1.0, 0.0, 1.0}));
  CHECK(hurwitz_stable(UniPoly{2.0, -3.0, 1.0}).verdict == Verdict::unstable);
  CHECK(hurwitz_stable(UniPoly{6.0, 11.0, 6.0, 1.0}).stable());
  CHECK_THROWS_AS(hurwitz_stable(UniPoly{cplx(1, 1), 1.0}), domain_error);
}

TEST_CASE("d_stable") {
  CHECK(d_stable(UniPoly{0.0, 1.0}).stable());
  CHECK(d_stable(UniPoly{-3.0, 2.0}).verdict == Verdict::unstable);
  const double r = 1, e = 0.9;
  CHECK(d_stable(UniPoly{e * e * r * r, e * (-2 * r * r - 6 * r + 4), r * r + 6 * r + 8}).stable());
  CHECK(d_stable(UniPoly{cplx(0, 0.5), 1.0}).stable());
  CHECK(d_stable(UniPoly{cplx(0, 1.0), 1.0}).verdict == Verdict::boundary);
}

TEST_CASE("moebius map sends the disk to the left half-plane") {
  const UniPoly f{-0.25, 0.0, 1.0};  // roots +-1/2
  const UniPoly q = moebius_to_half_plane(f);
  for (cplx z : roots(q)) CHECK(z.real() < 0.0);
  CHECK(std::abs(q.leading() - f(cplx(1.0))) < 1e-15);
}

namespace {

UniPoly from_roots(const std::vector<cplx>& rs, cplx lead) {
  UniPoly p{lead};
  for (cplx r : rs) p = p * UniPoly{-r, 1.0};
  return p;
}

}  // namespace

TEST_CASE("fuzz: d_stable and hurwitz_stable agree with root locations") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> deg(1, 4);
  const double two_pi = 6.283185307179586;

  for (int i = 0; i < 1000; ++i) {
    // Disk: moduli in [0, 0.95] or [1.05, 2]; real polynomials from conjugate pairs half the time.
    const int n = deg(rng);
    const bool real = u(rng) < 0.5;
    std::vector<cplx> rs;
    bool inside = true;
    while (static_cast<int>(rs.size()) < n) {
      const bool in = u(rng) < 0.6;
      const double m = in ? 0.95 * u(rng) : 1.05 + 0.95 * u(rng);
      const cplx z = std::polar(m, two_pi * u(rng));
      if (real && static_cast<int>(rs.size()) + 2 <= n && u(rng) < 0.5) {
        rs.push_back(z);
        rs.push_back(std::conj(z));
      } else if (real) {
        rs.push_back(u(rng) < 0.5 ? m : -m);
      } else {
        rs.push_back(z);
      }
      inside = inside && in;
    }
    const UniPoly f = from_roots(rs, real ? cplx(1.0 + u(rng)) : std::polar(1.0 + u(rng), two_pi * u(rng)));
    CAPTURE(i, n, real);
    REQUIRE(d_stable(f).stable() == inside);
  }

  for (int i = 0; i < 1000; ++i) {
    const int n = deg(rng);
    std::vector<cplx> rs;
    bool left = true;
    while (static_cast<int>(rs.size()) < n) {
      const bool l = u(rng) < 0.6;
      const double re = (l ? -1.0 : 1.0) * (0.05 + 2.0 * u(rng));
      if (static_cast<int>(rs.size()) + 2 <= n && u(rng) < 0.5) {
        const cplx z(re, 2.0 * u(rng));
        rs.push_back(z);
        rs.push_back(std::conj(z));
      } else {
        rs.push_back(re);
      }
      left = left && l;
    }
    const UniPoly p = from_roots(rs, 1.0 + u(rng));
    CAPTURE(i, n);
    REQUIRE(hurwitz_stable(p).stable() == left);
  }
}

TEST_CASE("Schur-Cohn matrix of random quadratics decides disk stability") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int agree = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<cplx> rs;
    bool inside = true;
    for (int k = 0; k < 2; ++k) {
      const bool in = u(rng) < 0.5;
      rs.push_back(std::polar(in ? 0.95 * u(rng) : 1.05 + u(rng), 6.2831853 * u(rng)));
      inside = inside && in;
    }
    const UniPoly f = from_roots(rs, std::polar(0.5 + u(rng), 6.2831853 * u(rng)));
    agree += positive_definite(schur_cohn_matrix(f.coeffs())).positive_definite == inside;
  }
  CHECK(agree == 1000);
}
