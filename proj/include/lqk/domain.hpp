#pragma once

// The domains D^p_{q,r} = { |z1|^p + |z2|^q < 1, |z1|^p + |z3|^r < 1 } in C^3,
// membership, and the Moebius-type automorphism family of D^2_{q,r} that
// moves any point onto the slice z1 = 0.

#include <cmath>
#include <complex>
#include <string>

#include "lqk/errors.hpp"

namespace lqk {

using cplx = std::complex<double>;

/// Exponent triple (p, q, r). Only p in {1, 2} is supported.
class DomainParams {
public:
  DomainParams(int p, double q, double r) : p_(p), q_(q), r_(r) {
    if (p != 1 && p != 2)
      throw domain_error("DomainParams: p must be 1 or 2, got " + std::to_string(p));
    if (!(q > 0.0) || !std::isfinite(q))
      throw domain_error("DomainParams: q must be a positive finite real");
    if (!(r > 0.0) || !std::isfinite(r))
      throw domain_error("DomainParams: r must be a positive finite real");
  }

  int p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  double r() const noexcept { return r_; }

  friend bool operator==(const DomainParams&, const DomainParams&) = default;

private:
  int p_;
  double q_;
  double r_;
};

struct Point3 {
  cplx z1{}, z2{}, z3{};

  friend bool operator==(const Point3&, const Point3&) = default;
};

/// Open domain: boundary points are not members.
inline bool contains(const DomainParams& d, const Point3& pt) {
  const double lead = std::pow(std::abs(pt.z1), d.p());
  return lead + std::pow(std::abs(pt.z2), d.q()) < 1.0 &&
         lead + std::pow(std::abs(pt.z3), d.r()) < 1.0;
}

/// Automorphism of D^2_{q,r} sending (a, *, *) to (0, *, *).
///
/// (z1, z2, z3) -> ((z1 - a) / (1 - conj(a) z1),
///                  (1 - |a|^2)^{1/q} / (1 - conj(a) z1)^{2/q} z2,
///                  (1 - |a|^2)^{1/r} / (1 - conj(a) z1)^{2/r} z3)
///
/// Complex powers take the principal branch. For |a| < 1 and |z1| < 1 the
/// base 1 - conj(a) z1 has positive real part; that is checked, not assumed.
inline Point3 slice_automorphism(const DomainParams& d, cplx a, const Point3& pt) {
  if (d.p() != 2)
    throw domain_error("slice_automorphism: only defined for p = 2");
  const double abs_a = std::abs(a);
  if (!(abs_a < 1.0))
    throw domain_error("slice_automorphism: requires |a| < 1");

  const cplx base = 1.0 - std::conj(a) * pt.z1;
  if (!(base.real() > 0.0))
    throw domain_error("slice_automorphism: 1 - conj(a) z1 left the right half-plane "
                       "(point not in the domain?)");

  const double shrink = 1.0 - abs_a * abs_a;
  Point3 out;
  out.z1 = (pt.z1 - a) / base;
  out.z2 = std::pow(shrink, 1.0 / d.q()) / std::pow(base, 2.0 / d.q()) * pt.z2;
  out.z3 = std::pow(shrink, 1.0 / d.r()) / std::pow(base, 2.0 / d.r()) * pt.z3;
  return out;
}

/// Kernel arguments nu_i = z_i conj(w_i). The mu variables are derived on
/// demand so they can never go stale.
struct KernelArgs {
  cplx nu1{}, nu2{}, nu3{};

  static KernelArgs from_points(const Point3& z, const Point3& w) {
    return {z.z1 * std::conj(w.z1), z.z2 * std::conj(w.z2), z.z3 * std::conj(w.z3)};
  }

  /// nu2 / (1 - nu1)^{2/q}, principal branch.
  cplx mu2(double q) const { return nu2 / one_minus_nu1_pow(2.0 / q); }
  /// nu3 / (1 - nu1)^{2/r}, principal branch.
  cplx mu3(double r) const { return nu3 / one_minus_nu1_pow(2.0 / r); }

  /// Ratios governing absolute convergence of the monomial series:
  /// |nu2| / (1 - |nu1|)^{2/q}. Always >= |mu2|.
  double abs_ratio2(double q) const {
    return std::abs(nu2) / std::pow(1.0 - std::abs(nu1), 2.0 / q);
  }
  double abs_ratio3(double r) const {
    return std::abs(nu3) / std::pow(1.0 - std::abs(nu1), 2.0 / r);
  }

  cplx one_minus_nu1_pow(double e) const {
    const cplx base = 1.0 - nu1;
    if (base == cplx{0.0, 0.0})
      throw pole_error("KernelArgs: 1 - nu1 = 0");
    if (!(base.real() > 0.0))
      throw domain_error("KernelArgs: 1 - nu1 is off the principal-branch half-plane");
    return std::pow(base, e);
  }
};

}  // namespace lqk
