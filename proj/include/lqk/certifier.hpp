#pragma once

// Zero-freeness certification for D^p_{q,r}.
//
// On the slice z1 = w1 = 0 the kernel vanishes exactly where its numerator
// does: F(nu2, nu3) for p = 2, G(nu2, nu3) for p = 1. The domain is zero-free
// iff the scaled numerator h(x, y) = N(eps x, eps y) is stable on the closed
// bidisk for every eps in (0, 1). The p = 2 sweep confirms that for a grid of
// (q, r, eps); the p = 1, q = r search exhibits an explicit zero.
//
// Coefficients of the scaled numerators come from exact symbolic expansion of
// numerator_F / numerator_G, never from transcription.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "lqk/domain.hpp"
#include "lqk/errors.hpp"
#include "lqk/kernel.hpp"
#include "lqk/parallel.hpp"
#include "lqk/polystab.hpp"
#include "lqk/symbolic.hpp"

namespace lqk {

// ---------------------------------------------------------------------------
// Symbolic expansions

namespace expansion {

using sym::Poly;
using sym::Var;

/// F(eps x, eps y) in Q[q, r, eps, x, y].
inline const Poly& F_scaled() {
  static const Poly p = [] {
    const Poly eps = Poly::var(Var::eps);
    return numerator_F<Poly>(Poly::var(Var::q), Poly::var(Var::r), eps * Poly::var(Var::x),
                             eps * Poly::var(Var::y));
  }();
  return p;
}

/// G(eps x, eps y) with q = r, in Q[r, eps, x, y], not normalized.
inline const Poly& G_scaled_raw() {
  static const Poly p = [] {
    const Poly eps = Poly::var(Var::eps);
    const Poly r = Poly::var(Var::r);
    return numerator_G<Poly>(r, r, eps * Poly::var(Var::x), eps * Poly::var(Var::y));
  }();
  return p;
}

/// Common positive factor removed from G when q = r: every coefficient of
/// the raw expansion is divisible by r^2.
inline constexpr int kGNormalizationPowerOfR = 2;

/// G(eps x, eps y) / r^2 with q = r.
inline const Poly& G_scaled() {
  static const Poly p = G_scaled_raw().divide_by_power(Var::r, kGNormalizationPowerOfR);
  return p;
}

/// The quoted reference list of coefficients of G(eps x, eps y) (q = r),
/// A_jk multiplying x^j y^k. Kept only to audit the expansion against.
inline std::map<std::pair<int, int>, Poly> printed_G_coefficients() {
  const Poly r = Poly::var(Var::r);
  const Poly e = Poly::var(Var::eps);
  std::map<std::pair<int, int>, Poly> a;
  a[{2, 2}] = e.pow(4) * (Poly(8) - Poly(6) * r + r * r);
  a[{2, 1}] = e.pow(3) * (Poly(4) + Poly(6) * r - Poly(2) * r * r);
  a[{2, 0}] = e.pow(2) * r * r;
  a[{1, 2}] = a[{2, 1}];
  a[{1, 1}] = e.pow(2) * Poly(4) * (r * r - Poly(32));
  a[{1, 0}] = e * (Poly(-2) * r * r - Poly(6) * r + Poly(4));
  a[{0, 2}] = a[{2, 0}];
  a[{0, 1}] = a[{1, 0}];
  a[{0, 0}] = r * r + Poly(6) * r + Poly(8);
  return a;
}

/// Printed coefficients known to disagree with the expansion.
inline const std::vector<std::pair<int, int>>& known_G_errata() {
  static const std::vector<std::pair<int, int>> e{{1, 1}};
  return e;
}

struct CoefficientAudit {
  int j = 0, k = 0;
  Poly expanded;
  Poly printed;
  bool matches = false;
};

inline std::vector<CoefficientAudit> audit_G_coefficients() {
  std::vector<CoefficientAudit> out;
  const auto printed = printed_G_coefficients();
  for (int j = 0; j <= 2; ++j)
    for (int k = 0; k <= 2; ++k) {
      CoefficientAudit a{j, k, G_scaled().coefficient_xy(j, k), printed.at({j, k}), false};
      a.matches = a.expanded == a.printed;
      out.push_back(std::move(a));
    }
  return out;
}

/// Throws unless the only mismatches are the recorded errata.
inline void require_G_audit_clean() {
  static const bool ok = [] {
    for (const auto& a : audit_G_coefficients()) {
      const bool known = std::find(known_G_errata().begin(), known_G_errata().end(),
                                   std::pair{a.j, a.k}) != known_G_errata().end();
      if (a.matches == known)
        throw inconsistency_error("G coefficient audit: unexpected result for A_" +
                                  std::to_string(a.j) + std::to_string(a.k) + ": expanded " +
                                  a.expanded.to_string() + ", printed " + a.printed.to_string());
    }
    if (G_scaled().degree(Var::x) != 2 || G_scaled().degree(Var::y) != 2)
      throw inconsistency_error("G coefficient audit: expansion is not of degree (2, 2)");
    return true;
  }();
  (void)ok;
}

}  // namespace expansion

namespace detail {

/// Compares a coefficient array against direct evaluation of the numerator at
/// 16 fixed points of the closed bidisk.
template <class Numerator>
void verify_expansion(const BivarPoly& h, double eps, Numerator&& numerator, const char* what) {
  double worst = 0.0;
  double scale = 0.0;
  for (int i = 0; i < 16; ++i) {
    const cplx x = std::polar(0.3 + 0.7 * (i % 4) / 3.0, 0.7 + 1.9 * i);
    const cplx y = std::polar(1.0 - 0.2 * (i / 4), -0.4 + 2.3 * i);
    const cplx direct = numerator(eps * x, eps * y);
    worst = std::max(worst, std::abs(h(x, y) - direct));
    scale = std::max(scale, std::abs(direct));
  }
  if (worst > 1e-12 * std::max(scale, h.max_abs_coeff()))
    throw inconsistency_error(std::string(what) + ": expanded coefficients do not reproduce the numerator");
}

inline std::vector<std::vector<double>> numeric_coeffs(const sym::Poly& p, int deg,
                                                       std::array<double, sym::kNumVars> vals) {
  std::vector<std::vector<double>> c(deg + 1, std::vector<double>(deg + 1, 0.0));
  for (int j = 0; j <= deg; ++j)
    for (int k = 0; k <= deg; ++k) c[j][k] = p.coefficient_xy(j, k).evaluate(vals);
  return c;
}

inline void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw domain_error("eps must lie in (0, 1]");
}

}  // namespace detail

/// F(eps x, eps y) as a (1, 1) bivariate polynomial.
inline BivarPoly coeffs_F_eps(double q, double r, double eps) {
  if (!(q > 0.0) || !(r > 0.0)) throw domain_error("coeffs_F_eps: q, r must be positive");
  if (!(eps >= 0.0 && eps <= 1.0)) throw domain_error("coeffs_F_eps: eps must lie in [0, 1]");
  static const std::vector<std::vector<sym::Poly>> coeff_polys = [] {
    std::vector<std::vector<sym::Poly>> c(2, std::vector<sym::Poly>(2));
    for (int j = 0; j <= 1; ++j)
      for (int k = 0; k <= 1; ++k) c[j][k] = expansion::F_scaled().coefficient_xy(j, k);
    return c;
  }();
  std::vector<std::vector<double>> c(2, std::vector<double>(2));
  for (int j = 0; j <= 1; ++j)
    for (int k = 0; k <= 1; ++k) c[j][k] = coeff_polys[j][k].evaluate({q, r, eps, 0.0, 0.0});
  BivarPoly h(std::move(c));
  detail::verify_expansion(h, eps, [&](cplx x, cplx y) { return numerator_F(q, r, x, y); },
                           "coeffs_F_eps");
  return h;
}

/// G(eps x, eps y) / r^2 with q = r, as a (2, 2) bivariate polynomial (lower
/// if coefficients vanish, e.g. the x^2 y^2 term at r = 2 and r = 4).
inline BivarPoly coeffs_G_eps(double r, double eps) {
  if (!(r > 0.0)) throw domain_error("coeffs_G_eps: r must be positive");
  detail::check_eps(eps);
  expansion::require_G_audit_clean();
  BivarPoly h(detail::numeric_coeffs(expansion::G_scaled(), 2, {r, r, eps, 0.0, 0.0}));
  detail::verify_expansion(
      h, eps, [&](cplx x, cplx y) { return numerator_G(r, r, x, y) / (r * r); }, "coeffs_G_eps");
  return h;
}

/// 27648 r^10 (eta - 1)^3 (r^2 (eta - 1) + 4): det M(e^{iw}) of the
/// un-normalized G(x, y), q = r, eps = 1, eta = cos w.
inline double printed_g_formula(double r, double eta) {
  return 27648.0 * std::pow(r, 10) * std::pow(eta - 1.0, 3) * (r * r * (eta - 1.0) + 4.0);
}

struct ProportionalityCheck {
  double ratio_mean = 0.0;     ///< c(r) with g = c(r) * printed formula
  double relative_spread = 0.0;  ///< (max - min) / |mean| over the samples
  std::vector<double> etas;
};

/// g from the normalized G expansion at eps = 1, compared with the printed
/// formula at 16 values of eta away from the common roots.
inline ProportionalityCheck g_formula_proportionality(double r) {
  const TrigPoly g = g_on_circle(coeffs_G_eps(r, 1.0));
  ProportionalityCheck out;
  const double second_root = 1.0 - 4.0 / (r * r);
  double lo = INFINITY, hi = -INFINITY, sum = 0.0;
  for (int i = 0; out.etas.size() < 16 && i < 64; ++i) {
    const double eta = -0.97 + 1.9 * i / 63.0;
    if (std::abs(eta - 1.0) < 0.02 || std::abs(eta - second_root) < 0.05) continue;
    const double ratio = g(eta) / printed_g_formula(r, eta);
    out.etas.push_back(eta);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    sum += ratio;
  }
  out.ratio_mean = sum / static_cast<double>(out.etas.size());
  out.relative_spread = (hi - lo) / std::abs(out.ratio_mean);
  return out;
}

// ---------------------------------------------------------------------------
// D^2 sweep

struct SweepConfig {
  std::vector<double> q_grid;
  std::vector<double> r_grid;
  std::vector<double> eps_grid;
  FalsifierOptions falsifier;

  /// q, r log-spaced on [0.25, 8]; eps in {0.1, 0.25, 0.5, 0.75, 0.9, 0.99}.
  static SweepConfig defaults() {
    SweepConfig c;
    for (int i = 0; i < 6; ++i) c.q_grid.push_back(0.25 * std::pow(2.0, i));
    c.r_grid = c.q_grid;
    c.eps_grid = {0.1, 0.25, 0.5, 0.75, 0.9, 0.99};
    return c;
  }

  void validate() const {
    if (q_grid.empty() || r_grid.empty() || eps_grid.empty())
      throw domain_error("SweepConfig: grids must be non-empty");
    for (double v : q_grid)
      if (!(v > 0.0)) throw domain_error("SweepConfig: q values must be positive");
    for (double v : r_grid)
      if (!(v > 0.0)) throw domain_error("SweepConfig: r values must be positive");
    for (double v : eps_grid)
      if (!(v > 0.0 && v < 1.0)) throw domain_error("SweepConfig: eps must lie in (0, 1)");
    if (falsifier.enabled && (falsifier.angles < 1 || falsifier.radii < 1))
      throw domain_error("SweepConfig: falsifier resolution must be >= 1");
  }
};

/// Hand-derived conditions for h = F(eps x, eps y) = A + B x + C y + D x y.
struct AnalyticF {
  double A = 0, B = 0, C = 0, D = 0;
  double root_ratio = 0;  ///< -B/A, the root of f(s) = A s + B
  bool cond_i = false;    ///< |B/A| < 1
  /// (AB - CD) x > C^2 + D^2 - A^2 - B^2 at x = z + conj(z) = +-2, i.e.
  /// g > 0 on the whole circle (g is linear in cos w).
  bool cond_ii = false;
  double slack_plus = 0, slack_minus = 0;  ///< lhs - rhs at x = +2 and x = -2
};

inline AnalyticF analytic_F_conditions(double q, double r, double eps) {
  AnalyticF a;
  a.A = q * r + 2 * q + 2 * r;
  a.B = eps * (-q * r - 2 * q + 2 * r);
  a.C = eps * (-q * r + 2 * q - 2 * r);
  a.D = eps * eps * (q * r - 2 * q - 2 * r);
  a.root_ratio = -a.B / a.A;
  a.cond_i = a.root_ratio > -1.0 && a.root_ratio < 1.0;
  const double rhs = a.C * a.C + a.D * a.D - a.A * a.A - a.B * a.B;
  const double k = a.A * a.B - a.C * a.D;
  a.slack_plus = 2.0 * k - rhs;
  a.slack_minus = -2.0 * k - rhs;
  a.cond_ii = a.slack_plus > 0.0 && a.slack_minus > 0.0;
  return a;
}

struct GridPoint {
  double q = 0, r = 0, eps = 0;
  StabilityReport report;
  AnalyticF analytic;
  bool agrees = false;  ///< pipeline conditions match the analytic checks
  bool passes = false;  ///< stable and agrees
  std::string error;    ///< set if the pipeline threw
};

struct Certificate {
  std::string claim;
  std::vector<GridPoint> points;
  std::vector<std::size_t> counterexamples;  ///< indices into points
  bool verdict = false;                      ///< all points pass
};

inline Certificate certify_p2(const SweepConfig& cfg, unsigned threads = default_thread_count()) {
  cfg.validate();
  Certificate cert;
  cert.claim = "D^2_{q,r} is a Lu Qi-Keng domain for all q, r > 0";
  for (double q : cfg.q_grid)
    for (double r : cfg.r_grid)
      for (double eps : cfg.eps_grid) {
        GridPoint p;
        p.q = q;
        p.r = r;
        p.eps = eps;
        cert.points.push_back(std::move(p));
      }

  parallel_for(
      cert.points.size(),
      [&](std::size_t i) {
        GridPoint& p = cert.points[i];
        p.analytic = analytic_F_conditions(p.q, p.r, p.eps);
        try {
          p.report = bivariate_stable(coeffs_F_eps(p.q, p.r, p.eps), cfg.falsifier);
        } catch (const std::exception& e) {
          p.error = e.what();
          return;
        }
        // For a (1, 1) polynomial g(eta = 1) is the 1x1 M(1), so (iii) must
        // agree with the x = +2 half of the analytic (ii).
        p.agrees = p.report.cond_i.holds == p.analytic.cond_i &&
                   p.report.cond_ii.holds == p.analytic.cond_ii &&
                   p.report.cond_iii.holds == (p.analytic.slack_plus > 0.0);
        p.passes = p.agrees && p.report.stable;
      },
      threads);

  for (std::size_t i = 0; i < cert.points.size(); ++i)
    if (!cert.points[i].passes) cert.counterexamples.push_back(i);
  cert.verdict = cert.counterexamples.empty();
  return cert;
}

// ---------------------------------------------------------------------------
// D^1_{r,r} zero search

struct OnsetScan {
  std::vector<double> eps;
  std::vector<bool> stable;
  bool monotone = true;  ///< no stable sample above an unstable one
};

struct ZeroWitness {
  double q = 0, r = 0;
  double eps_onset = 0;   ///< smallest eps where G(eps x, eps y) is unstable (bisection)
  double eps = 0;         ///< eps at which the witness was extracted
  double g_min_at_one = 0;  ///< min of g over the circle at eps = 1 (negative)
  double w = 0;           ///< angle of the unit-circle fibre that carries the zero
  double seed_eta = 0;    ///< argmin of the printed g formula on [-1, 1]
  cplx nu2{}, nu3{};      ///< kernel arguments on the slice, |nu| < 1
  Point3 z{}, w_point{};  ///< points of D^1_{q,r} with nu_i = z_i conj(w_i)
  cplx G_value{};
  double G_scale = 0;       ///< |G(0, 0)|
  cplx kernel{};            ///< closed-form slice kernel at the witness
  double kernel_origin = 0; ///< kernel at the origin
  ProportionalityCheck proportionality;
  OnsetScan onset;

  double kernel_relative() const { return std::abs(kernel) / kernel_origin; }

  /// Re-evaluates the numerator and kernel from the stored arguments.
  bool revalidate(double tol = 1e-8) const {
    const cplx G = numerator_G(q, r, nu2, nu3);
    const cplx K = kernel_slice_closed_p1(q, r, nu2, nu3).value;
    const double K0 = kernel_slice_closed_p1(q, r, 0.0, 0.0).value.real();
    return std::abs(nu2) < 1.0 && std::abs(nu3) < 1.0 && std::abs(G) < tol * G_scale &&
           std::abs(K) < tol * K0;
  }
};

inline bool g_eps_stable(double r, double eps) {
  FalsifierOptions off;
  off.enabled = false;
  return bivariate_stable(coeffs_G_eps(r, eps), off).stable;
}

inline OnsetScan scan_onset(double r, int samples = 64) {
  OnsetScan s;
  bool seen_unstable = false;
  for (int i = 1; i <= samples; ++i) {
    const double eps = static_cast<double>(i) / samples;
    const bool st = g_eps_stable(r, eps);
    s.eps.push_back(eps);
    s.stable.push_back(st);
    if (st && seen_unstable) s.monotone = false;
    seen_unstable = seen_unstable || !st;
  }
  return s;
}

/// Explicit zero of the D^1_{r,r} kernel on the slice z1 = w1 = 0.
///
/// 1. At eps = 1, g(w) = det M(e^{iw}) is negative somewhere on the circle.
/// 2. Bisection on eps locates the onset of instability.
/// 3. Halfway between the onset and 1, a unit-circle fibre s = e^{iw} of
///    G(eps s, eps z) has a root |z| < 1; (nu2, nu3) = (eps s, eps z) is then a
///    zero in the open bidisk, polished by Newton's method on G(nu2, .).
inline ZeroWitness find_zero_p1(double r, int angle_samples = 4096) {
  if (!(r > 0.0)) throw domain_error("find_zero_p1: r must be positive");
  ZeroWitness wit;
  wit.q = r;
  wit.r = r;

  // Seed from the printed formula: most negative point of
  // (eta - 1)^3 (r^2 (eta - 1) + 4) on [-1, 1].
  {
    double best = INFINITY;
    for (int i = 0; i <= 2000; ++i) {
      const double eta = -1.0 + 2.0 * i / 2000.0;
      const double v = printed_g_formula(r, eta);
      if (v < best) {
        best = v;
        wit.seed_eta = eta;
      }
    }
  }

  wit.proportionality = g_formula_proportionality(r);
  const CirclePositivity at_one = t_positive(g_on_circle(coeffs_G_eps(r, 1.0)));
  wit.g_min_at_one = at_one.minimum;
  if (at_one.positive)
    throw inconsistency_error("find_zero_p1: g is positive on the circle at eps = 1");

  double lo = 1e-6, hi = 1.0;
  if (!g_eps_stable(r, lo)) throw inconsistency_error("find_zero_p1: unstable already at eps ~ 0");
  for (int it = 0; it < 60 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g_eps_stable(r, mid) ? lo : hi) = mid;
  }
  wit.eps_onset = hi;
  wit.onset = scan_onset(r);

  wit.eps = 0.5 * (wit.eps_onset + 1.0);
  const BivarPoly h = coeffs_G_eps(r, wit.eps);

  // Search the unit-circle fibres for the smallest root in z, seeding with the
  // angle where g is most negative.
  const StabilityReport rep = bivariate_stable(h);
  double best_mod = INFINITY;
  cplx best_s{}, best_z{};
  auto consider = [&](double w) {
    const cplx s = std::polar(1.0, w);
    const UniPoly p = h.in_z(s);
    if (p.degree() < 1) return;
    for (cplx z : roots(p))
      if (std::abs(z) < best_mod) {
        best_mod = std::abs(z);
        best_s = s;
        best_z = z;
        wit.w = w;
      }
  };
  consider(rep.cond_ii.argmin_w);
  consider(-rep.cond_ii.argmin_w);
  for (int i = 0; i < angle_samples; ++i) consider(2.0 * std::numbers::pi * i / angle_samples);
  if (!(best_mod < 1.0))
    throw inconsistency_error("find_zero_p1: no fibre root inside the unit disk (r = " +
                              std::to_string(r) + ")");

  const cplx nu2 = wit.eps * best_s;
  cplx nu3 = wit.eps * best_z;
  for (int it = 0; it < 8; ++it) {
    const double hstep = 1e-7;
    const cplx gv = numerator_G(r, r, nu2, nu3);
    const cplx dg = (numerator_G(r, r, nu2, nu3 + hstep) - numerator_G(r, r, nu2, nu3 - hstep)) /
                    (2.0 * hstep);
    if (std::abs(dg) == 0.0) break;
    const cplx step = gv / dg;
    nu3 -= step;
    if (std::abs(step) < 1e-17) break;
  }

  wit.nu2 = nu2;
  wit.nu3 = nu3;
  wit.G_value = numerator_G(r, r, nu2, nu3);
  wit.G_scale = std::abs(numerator_G(r, r, 0.0, 0.0));
  wit.kernel = kernel_slice_closed_p1(r, r, nu2, nu3).value;
  wit.kernel_origin = kernel_slice_closed_p1(r, r, 0.0, 0.0).value.real();

  // nu_i = z_i conj(w_i) with |z_i| = |w_i| = sqrt|nu_i|.
  wit.z = {0.0, std::polar(std::sqrt(std::abs(nu2)), std::arg(nu2)),
           std::polar(std::sqrt(std::abs(nu3)), std::arg(nu3))};
  wit.w_point = {0.0, std::sqrt(std::abs(nu2)), std::sqrt(std::abs(nu3))};
  const DomainParams d1(1, r, r);
  if (!contains(d1, wit.z) || !contains(d1, wit.w_point))
    throw inconsistency_error("find_zero_p1: witness points left the domain");
  return wit;
}

// ---------------------------------------------------------------------------
// Brute-force kernel scan on the slice

struct ScanRow {
  double nu2_mod = 0, nu2_phase = 0, nu3_mod = 0, nu3_phase = 0;
  double abs_kernel = 0;  ///< minimum over phases for this modulus pair
};

struct ScanReport {
  int resolution = 1;
  double min_abs = INFINITY;
  cplx argmin_nu2{}, argmin_nu3{};
  double origin_abs = 0;
  std::vector<ScanRow> rows;  ///< one per (|nu2|, |nu3|) pair, phases at the minimum
};

/// |K| over moduli i/R and phases 2 pi j/R of (nu2, nu3) on the slice
/// z1 = w1 = 0 (via the automorphisms this slice carries every zero of
/// D^2_{q,r}). Resolution 1 is the origin alone.
inline ScanReport kernel_min_modulus_scan(const DomainParams& d, int resolution,
                                          unsigned threads = default_thread_count()) {
  if (resolution < 1) throw domain_error("kernel_min_modulus_scan: resolution must be >= 1");
  const int R = resolution;
  auto kernel_at = [&](cplx a, cplx b) -> double {
    if (d.p() == 2) return std::abs(kernel_closed_p2(d.q(), d.r(), {0.0, a, b}).value);
    return std::abs(kernel_slice_closed_p1(d.q(), d.r(), a, b).value);
  };

  std::vector<cplx> phase(R);
  for (int j = 0; j < R; ++j) phase[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / R);

  ScanReport rep;
  rep.resolution = R;
  rep.rows.resize(static_cast<std::size_t>(R) * R);
  parallel_for(
      rep.rows.size(),
      [&](std::size_t idx) {
        const int i2 = static_cast<int>(idx) / R;
        const int i3 = static_cast<int>(idx) % R;
        const double m2 = static_cast<double>(i2) / R;
        const double m3 = static_cast<double>(i3) / R;
        ScanRow row{m2, 0.0, m3, 0.0, INFINITY};
        for (int j2 = 0; j2 < R; ++j2)
          for (int j3 = 0; j3 < R; ++j3) {
            const double v = kernel_at(m2 * phase[j2], m3 * phase[j3]);
            if (v < row.abs_kernel) {
              row.abs_kernel = v;
              row.nu2_phase = 2.0 * std::numbers::pi * j2 / R;
              row.nu3_phase = 2.0 * std::numbers::pi * j3 / R;
            }
          }
        rep.rows[idx] = row;
      },
      threads);

  for (const ScanRow& row : rep.rows)
    if (row.abs_kernel < rep.min_abs) {
      rep.min_abs = row.abs_kernel;
      rep.argmin_nu2 = std::polar(row.nu2_mod, row.nu2_phase);
      rep.argmin_nu3 = std::polar(row.nu3_mod, row.nu3_phase);
    }
  rep.origin_abs = kernel_at(0.0, 0.0);
  return rep;
}

}  // namespace lqk
