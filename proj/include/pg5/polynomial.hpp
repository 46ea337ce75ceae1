#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pg5/rational.hpp"

namespace pg5 {

/// Dense univariate polynomial over Q, coefficients in increasing degree order.
/// The routines that count real roots assume a real-rooted input (they are used
/// on characteristic polynomials of symmetric integer matrices, and on their
/// factors and gcds), where Descartes' rule after a Taylor shift is exact.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(Rational v) { return Poly({std::move(v)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Coefficients of p(x + shift).
  Poly taylor_shift(const Rational& shift) const;

  /// Number of sign alternations in the coefficient sequence (zeros skipped).
  int sign_variations() const;

  /// Exact count of roots > bound, with multiplicity. Requires all roots real.
  int roots_greater_than(const Rational& bound) const {
    return taylor_shift(bound).sign_variations();
  }

  /// Multiplicity of `r` as a root (0 if not a root); quotient by (x-r)^mult in *quot.
  int root_multiplicity(const Rational& r, Poly* quot = nullptr) const;

  /// Divides by (x - r); the division must be exact.
  Poly deflate(const Rational& r) const;

  /// Upper bound exceeding every real root (Cauchy bound).
  Rational root_upper_bound() const;

  Poly derivative() const;

  friend Poly operator*(const Poly& p, const Poly& q);
  friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }

  /// Monic-normalized gcd over Q (content-free Euclid; fine at these degrees).
  static Poly gcd(Poly p, Poly q);

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Rational interval (lo, hi] isolating the largest real root of a real-rooted
/// polynomial, plus whether that root is an exact rational found on the way.
struct RootEnclosure {
  Rational lo, hi;
  std::optional<Rational> exact;  // set when the largest root is rational
  int multiplicity = 1;
};

/// Isolates the largest real root of a real-rooted nonconstant polynomial:
/// the result interval (lo, hi] contains it and no other root, with
/// hi - lo <= width unless the root was identified exactly.
RootEnclosure isolate_largest_root(const Poly& p, const Rational& width);

}  // namespace pg5
