#pragma once

// Squared L^2 norms of monomials z1^a1 z2^a2 z3^a3 on D^p_{q,r}.
//
// Polar coordinates in each variable reduce the norm to
//
//   (2 pi)^3 / ((2 a2 + 2)(2 a3 + 2)) * Int_0^1 t^{2 a1 + 1} (1 - t^p)^c dt,
//   c = (2 a2 + 2)/q + (2 a3 + 2)/r,
//
// and the remaining integral is a beta function. The closed forms below
// evaluate the Gamma ratios in log space; norm_sq_quadrature() integrates the
// last radial variable numerically and is used as an oracle.

#include <array>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "lqk/errors.hpp"

namespace lqk {

struct MultiIndex {
  int a1 = 0, a2 = 0, a3 = 0;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

namespace detail {

inline void check_exponents(double q, double r, const MultiIndex& a) {
  if (!(q > 0.0) || !(r > 0.0))
    throw domain_error("monomial norm: q and r must be positive");
  if (a.a1 < 0 || a.a2 < 0 || a.a3 < 0)
    throw domain_error("monomial norm: multi-index components must be non-negative");
}

/// (2 a2 + 2)/q + (2 a3 + 2)/r
inline double radial_exponent(double q, double r, const MultiIndex& a) {
  return (2.0 * a.a2 + 2.0) / q + (2.0 * a.a3 + 2.0) / r;
}

}  // namespace detail

/// Int_0^1 x^a (1 - x^p)^b dx = Gamma((a+1)/p) Gamma(b+1) / (p Gamma((a+1)/p + b + 1)).
inline double beta_power_integral(double a, double b, double p) {
  if (!(a > -1.0) || !(b > -1.0) || !(p > 0.0))
    throw domain_error("beta_power_integral: requires a > -1, b > -1, p > 0");
  const double s = (a + 1.0) / p;
  return std::exp(std::lgamma(s) + std::lgamma(b + 1.0) - std::lgamma(s + b + 1.0)) / p;
}

/// ||z^a||^2 on D^2_{q,r}:
/// pi^3 Gamma(a1+1) Gamma(c+1) / ((a2+1)(a3+1) Gamma(c+a1+2)).
inline double norm_sq_p2(double q, double r, const MultiIndex& a) {
  detail::check_exponents(q, r, a);
  constexpr double pi3 = std::numbers::pi * std::numbers::pi * std::numbers::pi;
  const double c = detail::radial_exponent(q, r, a);
  const double log_ratio =
      std::lgamma(a.a1 + 1.0) + std::lgamma(c + 1.0) - std::lgamma(c + a.a1 + 2.0);
  return pi3 * std::exp(log_ratio) / ((a.a2 + 1.0) * (a.a3 + 1.0));
}

/// ||z^a||^2 on D^1_{q,r}:
/// 2 pi^3 Gamma(2a1+2) Gamma(c+1) / ((a2+1)(a3+1) Gamma(c+2a1+3)).
///
/// The leading factor is 2 pi^3, not pi^3: with p = 1 the beta integral has no
/// 1/p = 1/2 to absorb the 2 left over from (2 pi)^3 / 4. The volume of
/// D^1_{1,1} (a = 0) is pi^3/15.
inline double norm_sq_p1(double q, double r, const MultiIndex& a) {
  detail::check_exponents(q, r, a);
  constexpr double pi3 = std::numbers::pi * std::numbers::pi * std::numbers::pi;
  const double c = detail::radial_exponent(q, r, a);
  const double log_ratio = std::lgamma(2.0 * a.a1 + 2.0) + std::lgamma(c + 1.0) -
                           std::lgamma(c + 2.0 * a.a1 + 3.0);
  return 2.0 * pi3 * std::exp(log_ratio) / ((a.a2 + 1.0) * (a.a3 + 1.0));
}

inline double norm_sq(int p, double q, double r, const MultiIndex& a) {
  switch (p) {
    case 1: return norm_sq_p1(q, r, a);
    case 2: return norm_sq_p2(q, r, a);
    default: throw domain_error("norm_sq: p must be 1 or 2");
  }
}

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  ///< absolute, as reported by the integrator
};

/// Oracle: integrates the outer radial variable numerically (tanh-sinh, which
/// copes with the algebraic endpoint behaviour of (1 - t^p)^c); the two inner
/// radial integrals are monomials and done exactly.
inline QuadratureResult norm_sq_quadrature(int p, double q, double r, const MultiIndex& a,
                                           double rel_tol = 1e-12) {
  if (p != 1 && p != 2)
    throw domain_error("norm_sq_quadrature: p must be 1 or 2");
  detail::check_exponents(q, r, a);

  const double c = detail::radial_exponent(q, r, a);
  const double t_exp = 2.0 * a.a1 + 1.0;

  // xc is the signed distance to the nearer endpoint; using it for 1 - t
  // avoids cancellation near t = 1.
  auto integrand = [=](double t, double xc) {
    const double one_minus_t = t > 0.5 ? xc : 1.0 - t;
    const double one_minus_tp = p == 1 ? one_minus_t : one_minus_t * (1.0 + t);
    if (one_minus_tp <= 0.0) return 0.0;
    return std::exp(t_exp * std::log(t) + c * std::log(one_minus_tp));
  };

  boost::math::quadrature::tanh_sinh<double> integrator;
  double err = 0.0;
  double l1 = 0.0;
  const double radial = integrator.integrate(integrand, 0.0, 1.0, rel_tol, &err, &l1);

  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double angular = two_pi * two_pi * two_pi / ((2.0 * a.a2 + 2.0) * (2.0 * a.a3 + 2.0));
  return {angular * radial, angular * err};
}

}  // namespace lqk
