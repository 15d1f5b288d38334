#pragma once

// Stability of real two-variable polynomials on the closed bidisk:
//
//   h(s, z) != 0  for all |s| <= 1, |z| <= 1
//
// is decided through three conditions:
//   (i)   f(s) = s^n h(1/s, 0) has all roots in the open unit disk;
//   (ii)  g(w) = det M(e^{iw}) > 0 on the whole circle, where M is the
//         Schur-Cohn matrix of d(z) = z^m h(e^{iw}, 1/z);
//   (iii) M(1) is positive definite.
//
// Every verdict is checked against a brute-force falsifier that samples the
// closed bidisk and locates zeros by exact univariate root finding.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <boost/math/tools/minima.hpp>

#include "lqk/errors.hpp"
#include "lqk/univariate.hpp"

namespace lqk {

/// h(s, z) = sum_{j<=n, k<=m} h_jk s^j z^k, dense, real coefficients.
/// Rows/columns of zeros at the top are trimmed, so the stored degrees are
/// the actual degrees in s and z.
class BivarPoly {
public:
  /// coeffs[j][k] multiplies s^j z^k. Ragged rows are padded with zeros.
  explicit BivarPoly(std::vector<std::vector<double>> coeffs) {
    std::size_t cols = 0;
    for (const auto& row : coeffs) cols = std::max(cols, row.size());
    if (coeffs.empty() || cols == 0) throw domain_error("BivarPoly: empty coefficient array");
    for (auto& row : coeffs) row.resize(cols, 0.0);
    h_ = std::move(coeffs);
    bool any = false;
    for (const auto& row : h_)
      for (double v : row) {
        if (!std::isfinite(v)) throw domain_error("BivarPoly: non-finite coefficient");
        any = any || v != 0.0;
      }
    if (!any) throw domain_error("BivarPoly: identically zero");
    trim();
  }

  int deg_s() const noexcept { return static_cast<int>(h_.size()) - 1; }
  int deg_z() const noexcept { return static_cast<int>(h_.front().size()) - 1; }

  double coeff(int j, int k) const {
    if (j < 0 || k < 0 || j > deg_s() || k > deg_z()) return 0.0;
    return h_[j][k];
  }

  cplx operator()(cplx s, cplx z) const {
    cplx acc{};
    for (int j = deg_s(); j >= 0; --j) {
      cplx row{};
      for (int k = deg_z(); k >= 0; --k) row = row * z + h_[j][k];
      acc = acc * s + row;
    }
    return acc;
  }

  /// h(s, .) as a polynomial in z.
  UniPoly in_z(cplx s) const {
    std::vector<cplx> c(deg_z() + 1);
    for (int k = 0; k <= deg_z(); ++k) {
      cplx v{};
      for (int j = deg_s(); j >= 0; --j) v = v * s + h_[j][k];
      c[k] = v;
    }
    return UniPoly(std::move(c));
  }

  /// h(., z) as a polynomial in s.
  UniPoly in_s(cplx z) const {
    std::vector<cplx> c(deg_s() + 1);
    for (int j = 0; j <= deg_s(); ++j) {
      cplx v{};
      for (int k = deg_z(); k >= 0; --k) v = v * z + h_[j][k];
      c[j] = v;
    }
    return UniPoly(std::move(c));
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& row : h_)
      for (double v : row) m = std::max(m, std::abs(v));
    return m;
  }

  const std::vector<std::vector<double>>& rows() const noexcept { return h_; }

private:
  void trim() {
    auto row_zero = [](const std::vector<double>& r) {
      return std::all_of(r.begin(), r.end(), [](double v) { return v == 0.0; });
    };
    while (h_.size() > 1 && row_zero(h_.back())) h_.pop_back();
    auto col_zero = [this](std::size_t k) {
      return std::all_of(h_.begin(), h_.end(), [k](const auto& r) { return r[k] == 0.0; });
    };
    while (h_.front().size() > 1 && col_zero(h_.front().size() - 1))
      for (auto& r : h_) r.pop_back();
  }

  std::vector<std::vector<double>> h_;
};

// ---------------------------------------------------------------------------
// Condition (i)

/// f(s) = s^d h(1/s, 0), d the degree of the z^0 row.
inline UniPoly build_f(const BivarPoly& h) {
  std::vector<cplx> row(h.deg_s() + 1);
  for (int j = 0; j <= h.deg_s(); ++j) row[j] = h.coeff(j, 0);
  const UniPoly r(std::move(row));
  if (r.is_zero()) throw domain_error("build_f: h(s, 0) is identically zero");
  return r.reversed();
}

// ---------------------------------------------------------------------------
// Schur-Cohn matrix

namespace detail {

inline cplx ring_conj(const cplx& v) { return std::conj(v); }

}  // namespace detail

/// Schur-Cohn matrix of d(z) = sum_k d_k z^k (m = degree), entries for j <= k
///
///   M_jk = sum_{l=1}^{j} (d_{m-j+l} conj(d_{m-k+l}) - conj(d_{j-l}) d_{k-l}),
///
/// 1-based, with the lower triangle filled by Hermitian symmetry. Generic over
/// the coefficient ring; `conj` must be the ring's involution.
template <class T>
std::vector<std::vector<T>> schur_cohn_entries(std::span<const T> d) {
  const int m = static_cast<int>(d.size()) - 1;
  if (m < 0) throw domain_error("schur_cohn: empty coefficient list");
  using detail::ring_conj;
  std::vector<std::vector<T>> M(m, std::vector<T>(m, T{}));
  for (int j = 1; j <= m; ++j)
    for (int k = j; k <= m; ++k) {
      T acc{};
      for (int l = 1; l <= j; ++l)
        acc = acc + (d[m - j + l] * ring_conj(d[m - k + l]) - ring_conj(d[j - l]) * d[k - l]);
      M[j - 1][k - 1] = acc;
      if (k != j) M[k - 1][j - 1] = ring_conj(acc);
    }
  return M;
}

inline Eigen::MatrixXcd schur_cohn_matrix(std::span<const cplx> d) {
  const auto entries = schur_cohn_entries<cplx>(d);
  const int m = static_cast<int>(entries.size());
  Eigen::MatrixXcd M(m, m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) M(j, k) = entries[j][k];
  if (m > 0 && (M - M.adjoint()).cwiseAbs().maxCoeff() != 0.0)
    throw inconsistency_error("schur_cohn_matrix: result is not Hermitian");
  return M;
}

struct Definiteness {
  bool positive_definite = false;
  bool near_singular = false;  ///< some leading minor within tolerance of 0
  std::vector<double> minors;  ///< leading principal minors
  std::vector<double> eigenvalues;
};

/// Leading principal minors, tolerance 1e-12 relative to (max |M_ij|)^k.
inline Definiteness positive_definite(const Eigen::MatrixXcd& M) {
  Definiteness out;
  const int m = static_cast<int>(M.rows());
  if (m == 0) {
    out.positive_definite = true;
    return out;
  }
  const double scale = std::max(M.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  out.positive_definite = true;
  for (int k = 1; k <= m; ++k) {
    const double minor = M.topLeftCorner(k, k).determinant().real();
    out.minors.push_back(minor);
    const double tol = 1e-12 * std::pow(scale, k);
    if (std::abs(minor) <= tol) out.near_singular = true;
    if (!(minor > tol)) out.positive_definite = false;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M, Eigen::EigenvaluesOnly);
  out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + m);
  return out;
}

// ---------------------------------------------------------------------------
// Disk stability

/// All roots of f strictly inside the unit disk.
///
/// Decided by root finding; cross-checked by an independent algebraic route:
/// for real coefficients the Moebius image Q(s) = (s-1)^n f((s+1)/(s-1)) must
/// be Hurwitz (Routh array) with f(1) != 0, otherwise the Schur-Cohn matrix
/// of f must be positive definite. Disagreement away from the boundary throws.
inline RootLocation d_stable(const UniPoly& f) {
  if (f.degree() < 1) throw domain_error("d_stable: degree must be >= 1");
  RootLocation out;
  out.roots = roots(f);
  double max_mod = 0.0;
  for (cplx z : out.roots) max_mod = std::max(max_mod, std::abs(z));
  out.margin = 1.0 - max_mod;
  if (std::abs(out.margin) <= kBoundaryMargin) {
    out.verdict = Verdict::boundary;
    return out;
  }
  out.verdict = out.margin > 0.0 ? Verdict::stable : Verdict::unstable;

  bool algebraic;
  if (f.is_real(1e-14)) {
    const UniPoly q = moebius_to_half_plane(f);
    std::vector<double> re(q.coeffs().size());
    for (std::size_t i = 0; i < re.size(); ++i) re[i] = q.coeffs()[i].real();
    const bool degree_kept = std::abs(f(1.0)) > 0.0 && q.degree() == f.degree();
    algebraic = degree_kept && routh_hurwitz(re);
  } else {
    algebraic = positive_definite(schur_cohn_matrix(f.coeffs())).positive_definite;
  }
  if (algebraic != out.stable())
    throw inconsistency_error("d_stable: algebraic test and root finder disagree");
  return out;
}

// ---------------------------------------------------------------------------
// Condition (ii): g on the unit circle

/// Laurent polynomial in t with real coefficients; on |t| = 1 the involution
/// conj(p)(t) = p(1/t).
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(double c) { add(0, c); }  // NOLINT
  static LaurentPoly monomial(int e, double c) {
    LaurentPoly p;
    p.add(e, c);
    return p;
  }

  const std::map<int, double>& terms() const noexcept { return c_; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    for (auto [e, c] : b.c_) a.add(e, c);
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    for (auto [e, c] : b.c_) a.add(e, -c);
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (auto [ea, ca] : a.c_)
      for (auto [eb, cb] : b.c_) out.add(ea + eb, ca * cb);
    return out;
  }

  friend LaurentPoly ring_conj(const LaurentPoly& p) { return p.reflected(); }

  LaurentPoly reflected() const {
    LaurentPoly out;
    for (auto [e, c] : c_) out.add(-e, c);
    return out;
  }

  cplx operator()(cplx t) const {
    cplx acc{};
    for (auto [e, c] : c_) acc += c * std::pow(t, e);
    return acc;
  }

private:
  void add(int e, double c) {
    if (c == 0.0) return;
    c_[e] += c;
  }

  std::map<int, double> c_;
};

namespace detail {

template <class T>
T cofactor_det(const std::vector<std::vector<T>>& M) {
  const std::size_t n = M.size();
  if (n == 0) return T(1.0);
  if (n == 1) return M[0][0];
  T acc{};
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<T>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(M[i][j]);
      minor.push_back(std::move(row));
    }
    const T term = M[0][col] * cofactor_det(minor);
    acc = col % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

/// d_k(t) = sum_j h_{j, m-k} t^j
inline std::vector<LaurentPoly> circle_coeffs(const BivarPoly& h) {
  const int m = h.deg_z();
  std::vector<LaurentPoly> d(m + 1);
  for (int k = 0; k <= m; ++k)
    for (int j = 0; j <= h.deg_s(); ++j)
      d[k] = d[k] + LaurentPoly::monomial(j, h.coeff(j, m - k));
  return d;
}

inline std::vector<cplx> circle_coeffs(const BivarPoly& h, cplx t) {
  const int m = h.deg_z();
  std::vector<cplx> d(m + 1);
  for (int k = 0; k <= m; ++k) {
    cplx v{};
    for (int j = h.deg_s(); j >= 0; --j) v = v * t + h.coeff(j, m - k);
    d[k] = v;
  }
  return d;
}

}  // namespace detail

/// Real polynomial in eta = cos w (ascending coefficients). g(e^{iw}) is
/// self-inversive, hence a polynomial in cos w.
struct TrigPoly {
  std::vector<double> eta_coeffs;

  double operator()(double eta) const {
    double acc = 0.0;
    for (auto it = eta_coeffs.rbegin(); it != eta_coeffs.rend(); ++it) acc = acc * eta + *it;
    return acc;
  }
  double at_angle(double w) const { return (*this)(std::cos(w)); }

  double scale() const {
    double s = 0.0;
    for (double c : eta_coeffs) s += std::abs(c);
    return s;
  }
};

/// g(e^{iw}) = det M(e^{iw}) evaluated numerically at one angle.
inline double g_numeric(const BivarPoly& h, double w) {
  const auto d = detail::circle_coeffs(h, std::polar(1.0, w));
  const Eigen::MatrixXcd M = schur_cohn_matrix(d);
  if (M.rows() == 0) return 1.0;
  return M.determinant().real();
}

/// Symbolic route: M(t) over Laurent polynomials, its determinant by cofactor
/// expansion, then t^k + t^-k = 2 T_k(eta). The numeric route is evaluated at
/// 64 angles and must agree to 1e-9 relative.
inline TrigPoly g_on_circle(const BivarPoly& h) {
  const auto d = detail::circle_coeffs(h);
  const auto M = schur_cohn_entries<LaurentPoly>(d);
  const LaurentPoly det = detail::cofactor_det(M);

  int top = 0;
  double mag = 0.0;
  for (auto [e, c] : det.terms()) {
    top = std::max(top, std::abs(e));
    mag = std::max(mag, std::abs(c));
  }
  auto coeff = [&](int e) {
    auto it = det.terms().find(e);
    return it == det.terms().end() ? 0.0 : it->second;
  };
  for (int k = 1; k <= top; ++k)
    if (std::abs(coeff(k) - coeff(-k)) > 1e-12 * std::max(mag, 1.0))
      throw inconsistency_error("g_on_circle: determinant is not self-inversive");

  // Chebyshev polynomials T_k in the monomial basis.
  std::vector<std::vector<double>> cheb{{1.0}, {0.0, 1.0}};
  for (int k = 2; k <= top; ++k) {
    std::vector<double> next(k + 1, 0.0);
    for (std::size_t i = 0; i < cheb[k - 1].size(); ++i) next[i + 1] += 2.0 * cheb[k - 1][i];
    for (std::size_t i = 0; i < cheb[k - 2].size(); ++i) next[i] -= cheb[k - 2][i];
    cheb.push_back(std::move(next));
  }
  TrigPoly g;
  g.eta_coeffs.assign(top + 1, 0.0);
  g.eta_coeffs[0] = coeff(0);
  for (int k = 1; k <= top; ++k) {
    const double ck = 0.5 * (coeff(k) + coeff(-k));
    for (std::size_t i = 0; i < cheb[k].size(); ++i) g.eta_coeffs[i] += 2.0 * ck * cheb[k][i];
  }

  double worst = 0.0;
  double peak = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double w = 2.0 * std::numbers::pi * (i + 0.5) / 64.0;
    const double sym = g.at_angle(w);
    const double num = g_numeric(h, w);
    worst = std::max(worst, std::abs(sym - num));
    peak = std::max({peak, std::abs(sym), std::abs(num)});
  }
  // Entries of M are sums of products of two coefficient values on |t| = 1,
  // so a determinant of order m is at most about (|h| (deg_s + 1))^(2m).
  const double floor = std::pow(h.max_abs_coeff() * (h.deg_s() + 1), 2.0 * h.deg_z());
  if (worst > 1e-9 * std::max(peak, floor))
    throw inconsistency_error("g_on_circle: symbolic and numeric paths disagree");
  return g;
}

struct CirclePositivity {
  bool positive = false;
  bool boundary = false;  ///< minimum within tolerance of zero
  double minimum = 0.0;
  double argmin_eta = 1.0;
  double argmin_w = 0.0;
};

/// min over eta in [-1, 1] from the endpoints and the real critical points.
inline CirclePositivity t_positive(const TrigPoly& g) {
  std::vector<double> candidates{-1.0, 1.0};
  if (g.eta_coeffs.size() > 2) {
    std::vector<cplx> dc;
    for (std::size_t i = 1; i < g.eta_coeffs.size(); ++i) dc.emplace_back(i * g.eta_coeffs[i]);
    const UniPoly dg(std::move(dc));
    if (dg.degree() >= 1)
      for (cplx z : roots(dg))
        if (std::abs(z.imag()) < 1e-7 && z.real() > -1.0 && z.real() < 1.0)
          candidates.push_back(z.real());
  }
  CirclePositivity out;
  out.minimum = std::numeric_limits<double>::infinity();
  for (double eta : candidates) {
    const double v = g(eta);
    if (v < out.minimum) {
      out.minimum = v;
      out.argmin_eta = eta;
    }
  }
  out.argmin_w = std::acos(std::clamp(out.argmin_eta, -1.0, 1.0));
  const double tol = 1e-12 * std::max(g.scale(), std::numeric_limits<double>::min());
  out.boundary = std::abs(out.minimum) <= tol;
  out.positive = out.minimum > tol;
  return out;
}

/// Numeric route for a g given only by samples: an n-point scan of w in
/// [0, 2 pi) followed by Brent refinement around the best sample.
inline CirclePositivity t_positive_sampled(const std::function<double(double)>& g_of_w,
                                           int n = 4096, double scale = 1.0) {
  const double step = 2.0 * std::numbers::pi / n;
  int best = 0;
  double best_v = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double v = g_of_w(i * step);
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  const auto [w, v] = boost::math::tools::brent_find_minima(
      g_of_w, (best - 1) * step, (best + 1) * step, std::numeric_limits<double>::digits / 2);
  CirclePositivity out;
  out.minimum = std::min(v, best_v);
  out.argmin_w = v < best_v ? w : best * step;
  out.argmin_eta = std::cos(out.argmin_w);
  const double tol = 1e-12 * scale;
  out.boundary = std::abs(out.minimum) <= tol;
  out.positive = out.minimum > tol;
  return out;
}

// ---------------------------------------------------------------------------
// Condition (iii)

inline Definiteness m1_positive_definite(const BivarPoly& h) {
  return positive_definite(schur_cohn_matrix(detail::circle_coeffs(h, cplx{1.0, 0.0})));
}

// ---------------------------------------------------------------------------
// Full test

struct FalsifierOptions {
  int angles = 256;
  int radii = 256;
  bool enabled = true;
};

/// Brute-force search for zeros of h in the closed bidisk. For s on a polar
/// grid of the closed disk the roots of h(s, .) are found exactly, and the
/// same with the roles of s and z exchanged; |h| is also sampled on the torus.
struct FalsifierResult {
  double min_root_modulus = std::numeric_limits<double>::infinity();
  cplx s_at_min{};
  cplx z_at_min{};
  double min_abs_on_torus = std::numeric_limits<double>::infinity();

  /// Some grid fibre has a root strictly inside the closed unit disk.
  bool found_zero() const noexcept { return min_root_modulus <= 1.0 - kBoundaryMargin; }
};

namespace detail {

/// Roots of a polynomial of degree <= 2 without the companion machinery.
inline void small_roots(const UniPoly& p, std::vector<cplx>& out) {
  out.clear();
  const int n = p.degree();
  if (n <= 0) return;
  if (n == 1) {
    out.push_back(-p.coeff(0) / p.coeff(1));
    return;
  }
  if (n == 2) {
    const cplx a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    const cplx disc = std::sqrt(b * b - 4.0 * a * c);
    const cplx qq = -0.5 * (std::real(std::conj(b) * disc) >= 0.0 ? b + disc : b - disc);
    if (qq == cplx{}) {
      out.assign(2, cplx{});
      return;
    }
    out.push_back(qq / a);
    out.push_back(c / qq);
    return;
  }
  out = roots(p);
}

}  // namespace detail

inline FalsifierResult falsify(const BivarPoly& h, const FalsifierOptions& opt = {}) {
  FalsifierResult res;
  std::vector<cplx> rts;
  const double two_pi = 2.0 * std::numbers::pi;
  const double zero_tol = 1e-14 * h.max_abs_coeff();

  for (int side = 0; side < 2; ++side) {
    for (int i = 0; i < opt.radii; ++i) {
      const double rho = opt.radii == 1 ? 1.0 : static_cast<double>(i) / (opt.radii - 1);
      for (int j = 0; j < opt.angles; ++j) {
        const cplx v = std::polar(rho, two_pi * j / opt.angles);
        const UniPoly p = side == 0 ? h.in_z(v) : h.in_s(v);
        if (p.degree() < 0 ||
            (p.degree() == 0 && std::abs(p.coeff(0)) <= zero_tol)) {
          res.min_root_modulus = 0.0;  // fibre vanishes identically
          res.s_at_min = side == 0 ? v : cplx{};
          res.z_at_min = side == 0 ? cplx{} : v;
          continue;
        }
        detail::small_roots(p, rts);
        for (cplx w : rts) {
          const double m = std::abs(w);
          if (m < res.min_root_modulus) {
            res.min_root_modulus = m;
            res.s_at_min = side == 0 ? v : w;
            res.z_at_min = side == 0 ? w : v;
          }
        }
      }
      if (opt.radii == 1) break;
    }
  }

  for (int i = 0; i < opt.angles; ++i)
    for (int j = 0; j < opt.angles; ++j) {
      const double a = std::abs(h(std::polar(1.0, two_pi * i / opt.angles),
                                  std::polar(1.0, two_pi * j / opt.angles)));
      res.min_abs_on_torus = std::min(res.min_abs_on_torus, a);
    }
  return res;
}

struct StabilityReport {
  struct CondI {
    bool holds = false;
    Verdict verdict = Verdict::unstable;
    double margin = 0.0;
    std::vector<cplx> f_roots;
    std::string note;
  } cond_i;
  struct CondII {
    bool holds = false;
    bool boundary = false;
    double g_min = 0.0;
    double argmin_eta = 1.0;
    double argmin_w = 0.0;
    TrigPoly g;
  } cond_ii;
  struct CondIII {
    bool holds = false;
    bool near_singular = false;
    std::vector<double> minors;
    std::vector<double> eigenvalues;
  } cond_iii;
  FalsifierResult falsifier;
  bool stable = false;
};

/// Runs conditions (i)-(iii), then the falsifier. A stable verdict together
/// with a located zero throws inconsistency_error.
inline StabilityReport bivariate_stable(const BivarPoly& h, const FalsifierOptions& opt = {}) {
  StabilityReport rep;

  // (i)
  if (h.coeff(0, 0) == 0.0) {
    rep.cond_i.note = "h(0, 0) = 0";
    rep.cond_i.margin = -std::numeric_limits<double>::infinity();
  } else {
    const UniPoly f = build_f(h);
    if (f.degree() == 0) {
      rep.cond_i.holds = true;
      rep.cond_i.verdict = Verdict::stable;
      rep.cond_i.margin = 1.0;
      rep.cond_i.note = "h(s, 0) is constant";
    } else {
      const RootLocation loc = d_stable(f);
      rep.cond_i.verdict = loc.verdict;
      rep.cond_i.margin = loc.margin;
      rep.cond_i.f_roots = loc.roots;
      rep.cond_i.holds = loc.stable();
    }
  }

  // (ii)
  rep.cond_ii.g = g_on_circle(h);
  const CirclePositivity pos = t_positive(rep.cond_ii.g);
  rep.cond_ii.holds = pos.positive;
  rep.cond_ii.boundary = pos.boundary;
  rep.cond_ii.g_min = pos.minimum;
  rep.cond_ii.argmin_eta = pos.argmin_eta;
  rep.cond_ii.argmin_w = pos.argmin_w;

  // (iii)
  const Definiteness m1 = m1_positive_definite(h);
  rep.cond_iii.holds = m1.positive_definite;
  rep.cond_iii.near_singular = m1.near_singular;
  rep.cond_iii.minors = m1.minors;
  rep.cond_iii.eigenvalues = m1.eigenvalues;

  rep.stable = rep.cond_i.holds && rep.cond_ii.holds && rep.cond_iii.holds;

  if (!opt.enabled) return rep;
  rep.falsifier = falsify(h, opt);
  if (rep.stable && rep.falsifier.found_zero())
    throw inconsistency_error("bivariate_stable: stable verdict but the falsifier found a zero");
  return rep;
}

}  // namespace lqk
