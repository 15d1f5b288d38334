#pragma once

// Closed-form kernels against their monomial series at random points.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "lqk/domain.hpp"
#include "lqk/errors.hpp"
#include "lqk/kernel.hpp"
#include "lqk/parallel.hpp"

namespace lqk {

struct SeriesCheckConfig {
  int p = 2;
  std::optional<double> q, r;  ///< drawn log-uniformly from [0.25, 8] when unset
  int samples = 200;
  double radius = 0.6;           ///< bound on the convergence ratios of nu2, nu3
  std::optional<double> nu1_radius;  ///< bound on |nu1| (p = 2); defaults to radius
  double tol = 1e-8;
  std::uint64_t seed = 20240601;
  bool printed_variant = false;  ///< p = 2: use the (1 - nu1^2) base

  void validate() const {
    if (p != 1 && p != 2) throw domain_error("series check: p must be 1 or 2");
    if (q && !(*q > 0.0)) throw domain_error("series check: q must be positive");
    if (r && !(*r > 0.0)) throw domain_error("series check: r must be positive");
    if (samples < 1) throw domain_error("series check: samples must be >= 1");
    if (!(radius >= 0.0 && radius < 1.0)) throw domain_error("series check: radius must lie in [0, 1)");
    if (nu1_radius && !(*nu1_radius >= 0.0 && *nu1_radius < 1.0))
      throw domain_error("series check: nu1 radius must lie in [0, 1)");
    if (!(tol > 0.0)) throw domain_error("series check: tol must be positive");
    if (printed_variant && p != 2)
      throw domain_error("series check: the printed variant exists only for p = 2");
  }
};

struct SeriesSample {
  double q = 0, r = 0;
  KernelArgs args;
  cplx series{}, closed{};
  double tail_bound = 0;
  double rel_err = 0;
  bool pass = false;
};

/// Draws the sample points. For p = 2, nu2 = rho2 (1 - |nu1|)^{2/q} e^{i t}
/// with rho2 <= radius, so the series converges geometrically at rate radius
/// whatever nu1 is.
inline std::vector<SeriesSample> draw_series_samples(const SeriesCheckConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double two_pi = 2.0 * std::numbers::pi;
  auto param = [&](const std::optional<double>& fixed) {
    const double u = unit(rng);
    return fixed ? *fixed : 0.25 * std::pow(32.0, u);
  };
  const double rho1 = cfg.nu1_radius.value_or(cfg.radius);

  std::vector<SeriesSample> out(cfg.samples);
  for (SeriesSample& s : out) {
    s.q = param(cfg.q);
    s.r = param(cfg.r);
    const double m1 = cfg.p == 2 ? rho1 * unit(rng) : 0.0;
    const double t1 = two_pi * unit(rng);
    const double m2 = cfg.radius * unit(rng);
    const double t2 = two_pi * unit(rng);
    const double m3 = cfg.radius * unit(rng);
    const double t3 = two_pi * unit(rng);
    s.args.nu1 = std::polar(m1, t1);
    s.args.nu2 = std::polar(m2 * std::pow(1.0 - m1, 2.0 / s.q), t2);
    s.args.nu3 = std::polar(m3 * std::pow(1.0 - m1, 2.0 / s.r), t3);
  }
  return out;
}

/// Evaluates series and closed form at every sample. The series is asked for
/// a tail bound well below `tol`, so the comparison measures the closed form.
inline std::vector<SeriesSample> run_series_check(const SeriesCheckConfig& cfg,
                                                  unsigned threads = default_thread_count()) {
  std::vector<SeriesSample> out = draw_series_samples(cfg);
  const double series_tol = std::min(1e-11, cfg.tol * 1e-3);
  const Nu1Base base = cfg.printed_variant ? Nu1Base::printed_square : Nu1Base::one_minus_nu1;
  parallel_for(
      out.size(),
      [&](std::size_t i) {
        SeriesSample& s = out[i];
        KernelValue series, closed;
        if (cfg.p == 2) {
          series = kernel_series_p2(s.q, s.r, s.args, series_tol);
          closed = kernel_closed_p2(s.q, s.r, s.args, base);
        } else {
          series = kernel_slice_series_p1(s.q, s.r, s.args.nu2, s.args.nu3, series_tol);
          closed = kernel_slice_closed_p1(s.q, s.r, s.args.nu2, s.args.nu3);
        }
        s.series = series.value;
        s.closed = closed.value;
        s.tail_bound = series.tail_bound;
        s.rel_err = std::abs(s.closed - s.series) / std::abs(s.series);
        s.pass = s.rel_err <= cfg.tol;
      },
      threads);
  return out;
}

}  // namespace lqk
