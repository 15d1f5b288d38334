#pragma once

// Exact multivariate polynomials over the rationals in the fixed variables
// (q, r, eps, x, y). Enough algebra to expand the kernel numerators under
// x -> eps x, y -> eps y and read off coefficients; nothing more.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include <boost/rational.hpp>

#include "lqk/errors.hpp"

namespace lqk::sym {

using Rational = boost::rational<std::int64_t>;

enum class Var : int { q = 0, r = 1, eps = 2, x = 3, y = 4 };
inline constexpr int kNumVars = 5;
inline constexpr std::array<const char*, kNumVars> kVarNames{"q", "r", "eps", "x", "y"};

using Exponents = std::array<int, kNumVars>;

class Poly {
public:
  Poly() = default;
  Poly(int c) { add_term({}, Rational(c)); }  // NOLINT: implicit from integer constants
  Poly(Rational c) { add_term({}, c); }       // NOLINT

  static Poly var(Var v, int power = 1) {
    Exponents e{};
    e[static_cast<int>(v)] = power;
    Poly p;
    p.add_term(e, Rational(1));
    return p;
  }

  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  int degree(Var v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
    return d;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly{} - a; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e{};
        for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(int n) const {
    Poly out(1);
    for (int i = 0; i < n; ++i) out *= *this;
    return out;
  }

  /// Replace variable v by the polynomial `value`.
  Poly substitute(Var v, const Poly& value) const {
    const int vi = static_cast<int>(v);
    Poly out;
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      rest[vi] = 0;
      Poly term;
      term.add_term(rest, c);
      out += term * value.pow(e[vi]);
    }
    return out;
  }

  /// Coefficient of x^j y^k, as a polynomial in the remaining variables.
  Poly coefficient_xy(int j, int k) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
      if (e[static_cast<int>(Var::x)] != j || e[static_cast<int>(Var::y)] != k) continue;
      Exponents rest = e;
      rest[static_cast<int>(Var::x)] = 0;
      rest[static_cast<int>(Var::y)] = 0;
      out.add_term(rest, c);
    }
    return out;
  }

  /// Exact division by v^power; throws if some term is not divisible.
  Poly divide_by_power(Var v, int power) const {
    const int vi = static_cast<int>(v);
    Poly out;
    for (const auto& [exps, c] : terms_) {
      Exponents e = exps;
      if (e[vi] < power)
        throw inconsistency_error("sym::Poly: not divisible by " +
                                  std::string(kVarNames[vi]) + "^" + std::to_string(power));
      e[vi] -= power;
      out.add_term(e, c);
    }
    return out;
  }

  /// Terms sharing exponents in (eps, x, y) are summed over (q, r) first, so
  /// a parameter polynomial that vanishes exactly (r^2 - 6r + 8 at r = 2)
  /// evaluates to an exact zero.
  double evaluate(const std::array<double, kNumVars>& values) const {
    std::map<std::array<int, 3>, double> grouped;
    for (const auto& [e, c] : terms_) {
      double m = boost::rational_cast<double>(c);
      for (int i = 0; i < 2; ++i)
        for (int k = 0; k < e[i]; ++k) m *= values[i];
      grouped[{e[2], e[3], e[4]}] += m;
    }
    double total = 0.0;
    for (const auto& [e, partial] : grouped) {
      double m = partial;
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < e[i]; ++k) m *= values[i + 2];
      total += m;
    }
    return total;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      os << (first ? "" : " + ") << c.numerator();
      if (c.denominator() != 1) os << "/" << c.denominator();
      for (int i = 0; i < kNumVars; ++i)
        if (e[i] > 0) os << "*" << kVarNames[i] << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
      first = false;
    }
    return os.str();
  }

private:
  void add_term(const Exponents& e, const Rational& c) {
    if (c.numerator() == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.numerator() == 0) terms_.erase(it);
    }
  }

  std::map<Exponents, Rational> terms_;
};

}  // namespace lqk::sym
