#include <catch_amalgamated.hpp>

#include "lqk/kernel.hpp"
#include "lqk/symbolic.hpp"

using namespace lqk;
using sym::Poly;
using sym::Var;

TEST_CASE("Poly arithmetic") {
  const Poly x = Poly::var(Var::x), y = Poly::var(Var::y);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x + Poly(1)).pow(3) == x.pow(3) + Poly(3) * x * x + Poly(3) * x + Poly(1));
  CHECK((x - x).is_zero());
  CHECK(Poly(sym::Rational(1, 2)) + Poly(sym::Rational(1, 2)) == Poly(1));
  CHECK((x * y).degree(Var::x) == 1);
  CHECK(Poly(0).degree(Var::x) == -1);
}

TEST_CASE("substitute, coefficients, division") {
  const Poly r = Poly::var(Var::r), e = Poly::var(Var::eps), x = Poly::var(Var::x);
  const Poly p = r * r * x * x + e * x + Poly(7);
  CHECK(p.substitute(Var::x, e) == r * r * e * e + e * e + Poly(7));
  CHECK(p.coefficient_xy(2, 0) == r * r);
  CHECK(p.coefficient_xy(1, 0) == e);
  CHECK(p.coefficient_xy(0, 0) == Poly(7));
  CHECK((r * r * x + r.pow(3)).divide_by_power(Var::r, 2) == x + r);
  CHECK_THROWS_AS(p.divide_by_power(Var::r, 1), inconsistency_error);
  CHECK(p.evaluate({0, 2, 0.5, 3, 0}) == 4 * 9 + 1.5 + 7);
}

TEST_CASE("symbolic expansion reproduces the numeric numerators") {
  const Poly q = Poly::var(Var::q), r = Poly::var(Var::r);
  const Poly x = Poly::var(Var::x), y = Poly::var(Var::y);
  const Poly F = numerator_F<Poly>(q, r, x, y);
  const Poly G = numerator_G<Poly>(q, r, x, y);
  CHECK(F.degree(Var::x) == 1);
  CHECK(G.degree(Var::x) == 2);
  CHECK(G.degree(Var::y) == 2);
  for (double qv : {0.5, 2.0})
    for (double rv : {1.0, 3.0})
      for (double xv : {-0.7, 0.4})
        for (double yv : {-0.2, 0.9}) {
          CHECK(std::abs(F.evaluate({qv, rv, 0, xv, yv}) - numerator_F(qv, rv, cplx(xv), cplx(yv)).real()) < 1e-12);
          CHECK(std::abs(G.evaluate({qv, rv, 0, xv, yv}) - numerator_G(qv, rv, cplx(xv), cplx(yv)).real()) < 1e-12);
        }
}

TEST_CASE("to_string prints integer coefficients plainly") {
  const Poly r = Poly::var(Var::r);
  CHECK((Poly(4) * r * r - Poly(32)).to_string() == "4*r^2 + -32");
  CHECK(Poly(sym::Rational(-1, 3)).to_string() == "-1/3");
}
