#pragma once

// Bergman kernels of D^2_{q,r} (everywhere) and of D^1_{q,r} (on the slice
// z1 = w1 = 0), each available two ways:
//
//  * as the orthogonal monomial series  sum_a nu^a / ||z^a||^2, truncated with
//    an explicit bound on the neglected terms, and
//  * in closed form.
//
// The series only uses monomial norms, so it serves as the oracle for the
// closed forms. The numerator polynomials F (p = 2) and G (p = 1) carry the
// zero set of the kernel on the slice.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "lqk/domain.hpp"
#include "lqk/errors.hpp"
#include "lqk/norms.hpp"

namespace lqk {

inline constexpr double kPi3 = std::numbers::pi * std::numbers::pi * std::numbers::pi;

struct SeriesTruncation {
  int n1 = 1;                   ///< cap on the z1 index (inner sums stop early when converged)
  int n2 = 1;                   ///< initial box size in the z2 index
  int n3 = 1;                   ///< initial box size in the z3 index
  double tail_tolerance = 1e-10;  ///< target tail_bound / |value|

  /// N = ceil(log(tol (1 - rho)) / log rho) + 10 for a geometric ratio rho.
  static SeriesTruncation for_ratio(double rho, double tol = 1e-10) {
    if (!(tol > 0.0)) throw domain_error("SeriesTruncation: tolerance must be positive");
    int n = 1;
    if (rho > 0.0) {
      if (!(rho < 1.0)) throw domain_error("SeriesTruncation: ratio must be < 1");
      n = static_cast<int>(std::ceil(std::log(tol * (1.0 - rho)) / std::log(rho))) + 10;
    }
    return {1 << 20, std::max(n, 1), std::max(n, 1), tol};
  }

  void validate() const {
    if (n1 < 1 || n2 < 1 || n3 < 1)
      throw domain_error("SeriesTruncation: bounds must be >= 1");
    if (!(tail_tolerance > 0.0))
      throw domain_error("SeriesTruncation: tolerance must be positive");
  }
};

struct KernelValue {
  cplx value{};
  double tail_bound = 0.0;  ///< 0 for closed forms
};

/// Which base the z1 factor of the D^2 closed form uses. The series sums to
/// (1 - nu1)^{-(2 + 2/q + 2/r)}; `printed_square` reproduces the variant
/// (1 - nu1^2) that is sometimes quoted, for comparison only.
enum class Nu1Base { one_minus_nu1, printed_square };

// ---------------------------------------------------------------------------
// Numerator polynomials. Templates so the same expression can be expanded
// symbolically (see symbolic.hpp) or evaluated numerically.

/// F(x, y) = qr(1-x)(1-y) + 2q(1-x)(1+y) + 2r(1+x)(1-y)
template <class T>
T numerator_F(const T& q, const T& r, const T& x, const T& y) {
  const T one(1);
  const T two(2);
  return q * r * (one - x) * (one - y) + two * q * (one - x) * (one + y) +
         two * r * (one + x) * (one - y);
}

inline cplx numerator_F(double q, double r, cplx x, cplx y) {
  return numerator_F<cplx>(cplx(q), cplx(r), x, y);
}

/// G(x, y) = q^2 (x-1)^2 (-2r^2 y + (r-2)(r-1) y^2 + (r+3) r + 8y + 2)
///         - qr (x^2-1)(y-1)(3r(y-1) - 4(y+1))
///         + 2r^2 (x(x+4)+1)(y-1)^2
template <class T>
T numerator_G(const T& q, const T& r, const T& x, const T& y) {
  const T one(1);
  const T two(2);
  const T three(3);
  const T four(4);
  const T eight(8);
  const T xm = x - one;
  const T ym = y - one;
  const T quad_y = T(-2) * r * r * y + (r - two) * (r - one) * y * y + (r + three) * r +
                   eight * y + two;
  return q * q * xm * xm * quad_y -
         q * r * (x * x - one) * ym * (three * r * ym - four * (y + one)) +
         two * r * r * (x * (x + four) + one) * ym * ym;
}

inline cplx numerator_G(double q, double r, cplx x, cplx y) {
  return numerator_G<cplx>(cplx(q), cplx(r), x, y);
}

// ---------------------------------------------------------------------------
// Closed forms

/// Closed-form Bergman kernel of D^2_{q,r}:
///
///   F(mu2, mu3) / (pi^3 q r (1 - nu1)^{2+2/q+2/r} (1 - mu2)^3 (1 - mu3)^3)
inline KernelValue kernel_closed_p2(double q, double r, const KernelArgs& args,
                                    Nu1Base base = Nu1Base::one_minus_nu1) {
  if (!(q > 0.0) || !(r > 0.0)) throw domain_error("kernel_closed_p2: q, r must be positive");
  const cplx mu2 = args.mu2(q);
  const cplx mu3 = args.mu3(r);
  const double e = 2.0 + 2.0 / q + 2.0 / r;

  cplx z1_factor;
  if (base == Nu1Base::one_minus_nu1) {
    z1_factor = args.one_minus_nu1_pow(e);
  } else {
    const cplx b = 1.0 - args.nu1 * args.nu1;
    if (std::abs(b) < 1e-300) throw pole_error("kernel_closed_p2: 1 - nu1^2 = 0");
    z1_factor = std::pow(b, e);
  }

  const cplx om2 = 1.0 - mu2;
  const cplx om3 = 1.0 - mu3;
  const cplx denom = kPi3 * q * r * z1_factor * om2 * om2 * om2 * om3 * om3 * om3;
  if (std::abs(denom) < 1e-300) throw pole_error("kernel_closed_p2: on the singular set");
  return {numerator_F(q, r, mu2, mu3) / denom, 0.0};
}

/// Closed-form Bergman kernel of D^1_{q,r} on the slice z1 = w1 = 0, as a sum
/// of three rational terms over pi^3 q^2 r^2 (1 - nu2)^4 (1 - nu3)^4. Written
/// out independently of numerator_G().
inline KernelValue kernel_slice_closed_p1(double q, double r, cplx nu2, cplx nu3) {
  if (!(q > 0.0) || !(r > 0.0))
    throw domain_error("kernel_slice_closed_p1: q, r must be positive");
  const cplx a = 1.0 - nu2;
  const cplx b = 1.0 - nu3;
  const cplx a2 = a * a;
  const cplx b2 = b * b;
  const cplx denom = kPi3 * q * q * r * r * a2 * a2 * b2 * b2;
  if (std::abs(denom) < 1e-300) throw pole_error("kernel_slice_closed_p1: on the singular set");

  const cplx t1 = 2.0 * r * r * (nu2 * (nu2 + 4.0) + 1.0) * b2;
  const cplx t2 = q * q * a2 *
                  (-2.0 * r * r * nu3 + (r - 2.0) * (r - 1.0) * nu3 * nu3 + (r + 3.0) * r +
                   8.0 * nu3 + 2.0);
  const cplx t3 = q * r * (1.0 - nu2 * nu2) * b * (3.0 * r * (nu3 - 1.0) - 4.0 * (nu3 + 1.0));
  return {(t1 + t2 - t3) / denom, 0.0};
}

// ---------------------------------------------------------------------------
// Series

namespace detail {

/// Sums of a^i x^a for i = 0..3, split at N into head (a < N) and tail
/// (a >= N). The tail is summed directly (no full-minus-head cancellation) and
/// the remainder after the loop is bounded by a geometric majorant.
struct PowerSums {
  static constexpr int kDeg = 4;
  std::array<double, kDeg> head{};
  std::array<double, kDeg> tail{};

  PowerSums(double x, int n) {
    double xa = 1.0;  // x^a, with 0^0 = 1
    for (int a = 0; a < n; ++a) {
      double m = xa;
      for (int i = 0; i < kDeg; ++i, m *= a) head[i] += m;
      xa *= x;
    }
    if (x == 0.0) return;  // tail is identically zero for n >= 1
    for (int i = 0; i < kDeg; ++i) {
      double acc = 0.0;
      double xk = xa;
      for (long k = n;; ++k) {
        const double term = std::pow(static_cast<double>(k), i) * xk;
        acc += term;
        // Consecutive-term ratios ((j+1)/j)^i x decrease in j, so the rest is
        // bounded by a geometric series with the ratio at j = k (n >= 1).
        const double ratio = std::pow((k + 1.0) / k, i) * x;
        if (ratio < 1.0) {
          const double rest = term * ratio / (1.0 - ratio);
          if (rest <= 1e-17 * acc || term == 0.0) {
            acc += rest;
            break;
          }
        }
        xk *= x;
        if (k > n + 100000) {
          acc = INFINITY;
          break;
        }
      }
      tail[i] = acc;
    }
  }

  double full(int i) const { return head[i] + tail[i]; }
};

/// Small dense bivariate polynomial in (a, b), degree <= 3 in each.
using Weight = std::array<std::array<double, PowerSums::kDeg>, PowerSums::kDeg>;

inline Weight weight_mul(const Weight& u, const Weight& v) {
  Weight w{};
  for (int i = 0; i < PowerSums::kDeg; ++i)
    for (int j = 0; j < PowerSums::kDeg; ++j)
      for (int k = 0; k < PowerSums::kDeg; ++k)
        for (int l = 0; l < PowerSums::kDeg; ++l) {
          const double c = u[i][j] * v[k][l];
          if (c == 0.0) continue;
          if (i + k >= PowerSums::kDeg || j + l >= PowerSums::kDeg)
            throw std::logic_error("weight_mul: degree overflow");
          w[i + k][j + l] += c;
        }
  return w;
}

/// c + shift = (shift + 2/q + 2/r) + (2/q) a + (2/r) b
inline Weight radial_exponent_weight(double q, double r, double shift) {
  Weight w{};
  w[0][0] = shift + 2.0 / q + 2.0 / r;
  w[1][0] = 2.0 / q;
  w[0][1] = 2.0 / r;
  return w;
}

/// (a + 1)(b + 1)
inline Weight index_weight() {
  Weight w{};
  w[0][0] = 1.0;
  w[1][0] = 1.0;
  w[0][1] = 1.0;
  w[1][1] = 1.0;
  return w;
}

/// Sum over (a, b) outside [0, n2) x [0, n3) of P(a, b) x^a y^b, for P with
/// non-negative coefficients.
inline double box_complement_sum(const Weight& p, double x, double y, int n2, int n3) {
  const PowerSums sx(x, n2);
  const PowerSums sy(y, n3);
  double total = 0.0;
  for (int i = 0; i < PowerSums::kDeg; ++i)
    for (int j = 0; j < PowerSums::kDeg; ++j) {
      if (p[i][j] == 0.0) continue;
      total += p[i][j] * (sx.tail[i] * sy.full(j) + sx.head[i] * sy.tail[j]);
    }
  return total;
}

inline constexpr double kMaxModulus = 1.0 - 1e-6;

}  // namespace detail

/// D^2 kernel by direct summation of sum_a nu^a / ||z^a||^2.
///
/// The z1 index is summed by the ratio recurrence of consecutive weights and
/// stopped once a geometric majorant of its remainder is negligible; the
/// (z2, z3) box grows until tail_bound <= tail_tolerance * |value|.
/// Requires |nu1| and the absolute-convergence ratios |nu2|/(1-|nu1|)^{2/q},
/// |nu3|/(1-|nu1|)^{2/r} all below 1 - 1e-6.
inline KernelValue kernel_series_p2(double q, double r, const KernelArgs& args,
                                    SeriesTruncation trunc) {
  trunc.validate();
  if (!(q > 0.0) || !(r > 0.0)) throw domain_error("kernel_series_p2: q, r must be positive");
  const double x1 = std::abs(args.nu1);
  if (!(x1 < detail::kMaxModulus))
    throw domain_error("kernel_series_p2: |nu1| too close to 1 for a usable tail bound");
  const double rho2 = args.abs_ratio2(q);
  const double rho3 = args.abs_ratio3(r);
  if (!(rho2 < detail::kMaxModulus) || !(rho3 < detail::kMaxModulus))
    throw domain_error("kernel_series_p2: z2/z3 ratio too close to 1 for a usable tail bound");

  const double abs2 = std::abs(args.nu2);
  const double abs3 = std::abs(args.nu3);
  const double outer_scale = std::pow(1.0 - x1, -(2.0 + 2.0 / q + 2.0 / r)) / kPi3;
  const detail::Weight outer_weight = detail::weight_mul(
      detail::index_weight(), detail::radial_exponent_weight(q, r, 1.0));

  for (int attempt = 0;; ++attempt) {
    cplx sum{};
    double abs_sum = 0.0;
    double inner_tail = 0.0;

    cplx pw2 = 1.0;
    double apw2 = 1.0;
    for (int a = 0; a < trunc.n2; ++a) {
      cplx pw = pw2;
      double apw = apw2;
      for (int b = 0; b < trunc.n3; ++b) {
        const double w0 = 1.0 / norm_sq_p2(q, r, {0, a, b});
        const double c_plus_2 = detail::radial_exponent(q, r, {0, a, b}) + 2.0;
        cplx t = w0 * pw;
        double m = w0 * apw;
        cplx inner{};
        double inner_abs = 0.0;
        double rest = 0.0;
        for (int k = 0;; ++k) {
          inner += t;
          inner_abs += m;
          const double step = (c_plus_2 + k) / (k + 1.0);
          t *= step * args.nu1;
          m *= step * x1;
          const double next_ratio = (c_plus_2 + k + 1.0) / (k + 2.0) * x1;
          if (m == 0.0) {
            rest = 0.0;
            break;
          }
          if (next_ratio < 1.0) {
            rest = m / (1.0 - next_ratio);
            if (rest <= 1e-18 * std::max(abs_sum + inner_abs, inner_abs)) break;
          }
          if (k + 1 >= trunc.n1) {
            if (!(next_ratio < 1.0))
              throw domain_error("kernel_series_p2: z1 cap reached before the terms decay");
            break;
          }
        }
        sum += inner;
        abs_sum += inner_abs;
        inner_tail += rest;
        pw *= args.nu3;
        apw *= abs3;
      }
      pw2 *= args.nu2;
      apw2 *= abs2;
    }

    const double outer_tail =
        outer_scale * detail::box_complement_sum(outer_weight, rho2, rho3, trunc.n2, trunc.n3);
    KernelValue kv{sum, inner_tail + outer_tail};
    const bool converged = kv.tail_bound <= trunc.tail_tolerance * std::abs(kv.value);
    if (converged || attempt >= 4 || trunc.n2 >= 4096) return kv;
    trunc.n2 *= 2;
    trunc.n3 *= 2;
  }
}

inline KernelValue kernel_series_p2(double q, double r, const KernelArgs& args,
                                    double tail_tolerance = 1e-10) {
  const double rho = std::max(args.abs_ratio2(q), args.abs_ratio3(r));
  if (!(rho < detail::kMaxModulus))
    throw domain_error("kernel_series_p2: z2/z3 ratio too close to 1 for a usable tail bound");
  SeriesTruncation t = SeriesTruncation::for_ratio(rho, tail_tolerance);
  t.n2 = SeriesTruncation::for_ratio(args.abs_ratio2(q), tail_tolerance).n2;
  t.n3 = SeriesTruncation::for_ratio(args.abs_ratio3(r), tail_tolerance).n3;
  return kernel_series_p2(q, r, args, t);
}

/// D^1 kernel on the slice z1 = w1 = 0 by direct summation of
/// sum_{a2,a3} nu2^a2 nu3^a3 / ||z2^a2 z3^a3||^2.
inline KernelValue kernel_slice_series_p1(double q, double r, cplx nu2, cplx nu3,
                                          SeriesTruncation trunc) {
  trunc.validate();
  if (!(q > 0.0) || !(r > 0.0))
    throw domain_error("kernel_slice_series_p1: q, r must be positive");
  const double abs2 = std::abs(nu2);
  const double abs3 = std::abs(nu3);
  if (!(abs2 < detail::kMaxModulus) || !(abs3 < detail::kMaxModulus))
    throw domain_error("kernel_slice_series_p1: |nu| too close to 1 for a usable tail bound");

  // 1/||.||^2 = (a+1)(b+1)(c+1)(c+2) / (2 pi^3)
  const detail::Weight weight = detail::weight_mul(
      detail::weight_mul(detail::index_weight(), detail::radial_exponent_weight(q, r, 1.0)),
      detail::radial_exponent_weight(q, r, 2.0));

  for (int attempt = 0;; ++attempt) {
    cplx sum{};
    cplx pw2 = 1.0;
    for (int a = 0; a < trunc.n2; ++a) {
      cplx pw = pw2;
      for (int b = 0; b < trunc.n3; ++b) {
        sum += pw / norm_sq_p1(q, r, {0, a, b});
        pw *= nu3;
      }
      pw2 *= nu2;
    }
    const double tail =
        detail::box_complement_sum(weight, abs2, abs3, trunc.n2, trunc.n3) / (2.0 * kPi3);
    KernelValue kv{sum, tail};
    const bool converged = kv.tail_bound <= trunc.tail_tolerance * std::abs(kv.value);
    if (converged || attempt >= 4 || trunc.n2 >= 4096) return kv;
    trunc.n2 *= 2;
    trunc.n3 *= 2;
  }
}

inline KernelValue kernel_slice_series_p1(double q, double r, cplx nu2, cplx nu3,
                                          double tail_tolerance = 1e-10) {
  const double rho = std::max(std::abs(nu2), std::abs(nu3));
  if (!(rho < detail::kMaxModulus))
    throw domain_error("kernel_slice_series_p1: |nu| too close to 1 for a usable tail bound");
  SeriesTruncation t = SeriesTruncation::for_ratio(rho, tail_tolerance);
  t.n2 = SeriesTruncation::for_ratio(std::abs(nu2), tail_tolerance).n2;
  t.n3 = SeriesTruncation::for_ratio(std::abs(nu3), tail_tolerance).n3;
  return kernel_slice_series_p1(q, r, nu2, nu3, t);
}

}  // namespace lqk
