#pragma once

// Univariate polynomials with complex coefficients, root finding, and the
// two classical root-location tests used by the stability pipeline:
// unit-disk stability (via a Moebius map to the half-plane) and Hurwitz
// stability (via the Routh array). Root finding is the arbiter; the
// algebraic tests are kept as independent second routes.

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "lqk/errors.hpp"

namespace lqk {

using cplx = std::complex<double>;

/// Polynomial sum_i c_i s^i, coefficients in ascending order. High-order zero
/// coefficients are trimmed so the leading coefficient is nonzero (the zero
/// polynomial keeps a single 0 coefficient and has degree -1).
class UniPoly {
public:
  UniPoly() : c_{0.0} {}
  explicit UniPoly(std::vector<cplx> ascending) : c_(std::move(ascending)) { trim(); }
  UniPoly(std::initializer_list<cplx> ascending) : c_(ascending) { trim(); }

  static UniPoly from_real(std::span<const double> ascending) {
    return UniPoly(std::vector<cplx>(ascending.begin(), ascending.end()));
  }

  int degree() const noexcept {
    return (c_.size() == 1 && c_[0] == cplx{}) ? -1 : static_cast<int>(c_.size()) - 1;
  }
  bool is_zero() const noexcept { return degree() < 0; }
  const std::vector<cplx>& coeffs() const noexcept { return c_; }
  cplx coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : cplx{}; }
  cplx leading() const { return c_.back(); }

  bool is_real(double tol = 0.0) const {
    return std::all_of(c_.begin(), c_.end(),
                       [tol](cplx v) { return std::abs(v.imag()) <= tol * std::max(1.0, std::abs(v)); });
  }

  template <class T>
  auto operator()(T s) const {
    using R = decltype(cplx{} * s);
    R acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly{};
    std::vector<cplx> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
    return UniPoly(std::move(d));
  }

  /// s^n p(1/s) with n = degree().
  UniPoly reversed() const {
    std::vector<cplx> r(c_.rbegin(), c_.rend());
    return UniPoly(std::move(r));
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly{};
    std::vector<cplx> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(out));
  }
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<cplx> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(int(i)) + b.coeff(int(i));
    return UniPoly(std::move(out));
  }
  friend UniPoly operator*(cplx k, const UniPoly& a) { return UniPoly{k} * a; }

  UniPoly pow(int n) const {
    UniPoly out{1.0};
    for (int i = 0; i < n; ++i) out = out * *this;
    return out;
  }

private:
  void trim() {
    while (c_.size() > 1 && c_.back() == cplx{}) c_.pop_back();
    if (c_.empty()) c_.push_back(0.0);
  }

  std::vector<cplx> c_;
};

/// All roots, with multiplicity. Eigenvalues of the companion matrix followed
/// by a few Newton steps on the original polynomial.
inline std::vector<cplx> roots(const UniPoly& p) {
  const int n = p.degree();
  if (n < 0) throw domain_error("roots: zero polynomial");
  if (n == 0) return {};
  const auto& c = p.coeffs();
  if (n == 1) return {-c[0] / c[1]};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw inconsistency_error("roots: eigen solver failed");

  const UniPoly dp = p.derivative();
  std::vector<cplx> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  for (cplx& z : out) {
    for (int it = 0; it < 3; ++it) {
      const cplx d = dp(z);
      if (std::abs(d) < 1e-300) break;
      const cplx step = p(z) / d;
      if (!(std::abs(step) < 1e-3 * (1.0 + std::abs(z)))) break;  // keep clustered roots put
      z -= step;
    }
  }
  return out;
}

/// Outcome of a root-location test. `margin` is positive inside the target
/// region, negative outside, and measured in the test's natural units
/// (1 - max|root| for the disk, -max Re(root) for the half-plane).
enum class Verdict { stable, unstable, boundary };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::stable: return "stable";
    case Verdict::unstable: return "unstable";
    case Verdict::boundary: return "boundary-indeterminate";
  }
  return "?";
}

struct RootLocation {
  Verdict verdict = Verdict::unstable;
  double margin = 0.0;
  std::vector<cplx> roots;

  bool stable() const noexcept { return verdict == Verdict::stable; }
};

inline constexpr double kBoundaryMargin = 1e-9;

/// Routh array test for real coefficients (ascending order). True iff every
/// root has negative real part. A zero first-column pivot is replaced by a
/// small positive epsilon; an all-zero row (roots symmetric about the origin)
/// means not Hurwitz.
inline bool routh_hurwitz(std::span<const double> ascending) {
  std::vector<double> a(ascending.rbegin(), ascending.rend());  // descending
  while (!a.empty() && a.front() == 0.0) a.erase(a.begin());
  const int n = static_cast<int>(a.size()) - 1;
  if (n < 1) throw domain_error("routh_hurwitz: degree must be >= 1");

  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  const double eps = 1e-12 * scale;
  const double zero_tol = 1e-14 * scale;

  const std::size_t width = static_cast<std::size_t>(n) / 2 + 1;
  std::vector<double> prev(width, 0.0), cur(width, 0.0);
  for (int i = 0; i <= n; ++i) (i % 2 == 0 ? prev : cur)[i / 2] = a[i];

  std::vector<double> first{prev[0]};
  for (int row = 1; row <= n; ++row) {
    const bool all_zero =
        std::all_of(cur.begin(), cur.end(), [&](double v) { return std::abs(v) <= zero_tol; });
    if (all_zero) return false;
    if (std::abs(cur[0]) <= zero_tol) cur[0] = eps;
    first.push_back(cur[0]);
    std::vector<double> next(width, 0.0);
    for (std::size_t j = 0; j + 1 < width; ++j)
      next[j] = (cur[0] * prev[j + 1] - prev[0] * cur[j + 1]) / cur[0];
    prev = std::move(cur);
    cur = std::move(next);
  }
  const bool positive = first.front() > 0.0;
  return std::all_of(first.begin(), first.end(),
                     [&](double v) { return positive ? v > 0.0 : v < 0.0; });
}

/// All roots in the open left half-plane. Root finding decides; the Routh
/// array must agree whenever the roots are clear of the imaginary axis.
inline RootLocation hurwitz_stable(const UniPoly& p) {
  if (p.degree() < 1) throw domain_error("hurwitz_stable: degree must be >= 1");
  if (!p.is_real(1e-14)) throw domain_error("hurwitz_stable: coefficients must be real");

  RootLocation out;
  out.roots = roots(p);
  double max_re = -std::numeric_limits<double>::infinity();
  for (cplx z : out.roots) max_re = std::max(max_re, z.real());
  out.margin = -max_re;

  if (std::abs(out.margin) <= kBoundaryMargin) {
    out.verdict = Verdict::boundary;
    return out;
  }
  out.verdict = out.margin > 0.0 ? Verdict::stable : Verdict::unstable;

  std::vector<double> re(p.coeffs().size());
  for (std::size_t i = 0; i < re.size(); ++i) re[i] = p.coeffs()[i].real();
  if (routh_hurwitz(re) != out.stable())
    throw inconsistency_error("hurwitz_stable: Routh array and root finder disagree");
  return out;
}

/// (s - 1)^n f((s + 1)/(s - 1)): maps roots inside the unit disk to roots in
/// the open left half-plane. Its leading coefficient is f(1).
inline UniPoly moebius_to_half_plane(const UniPoly& f) {
  const int n = f.degree();
  const UniPoly plus{1.0, 1.0};
  const UniPoly minus{-1.0, 1.0};
  UniPoly q;
  for (int i = 0; i <= n; ++i) q = q + f.coeff(i) * (plus.pow(i) * minus.pow(n - i));
  return q;
}

}  // namespace lqk
